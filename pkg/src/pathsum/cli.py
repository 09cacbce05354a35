"""Command-line front end.

Subcommands map one-to-one onto the library surface: multiplicity,
scan, probs, paths, ensemble, prob2d, and validate. Tabular output is
CSV with '#' metadata comments or JSON with one object per row; files
are written atomically (temp file in the target directory, then rename).

Exit codes: 0 success, 1 validation-suite failure or internal
inconsistency, 2 bad arguments, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import math
import os
import sys
import tempfile

from . import combinatorics, ensemble, kernel, stats
from .core import (
    DivergenceError,
    PathClass1D,
    PathClassND,
    PhysicalParams,
    ResourceCapError,
    ValidationError,
    dimensionless_b,
    debroglie_limit,
)

CODATA_KB = 1.380649e-23
CODATA_HBAR = 1.054571817e-34


def _fmt(value, digits: int) -> str:
    """Float formatting: %.Ng below 17 digits, shortest round-trip repr at 17+."""
    if isinstance(value, float):
        return repr(value) if digits >= 17 else f"{value:.{digits}g}"
    return str(value)


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {key: _jsonable(val) for key, val in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(
        dir=os.path.dirname(target), prefix=".pathsum-", suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        with contextlib.suppress(FileNotFoundError):
            os.unlink(tmp)
        raise


def _csv_table(columns, rows, comments, digits: int) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"# columns: {','.join(columns)}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(row[col], digits) for col in columns))
    return "\n".join(lines) + "\n"


def _emit_table(args, columns, rows, comments, meta) -> None:
    if args.format == "json":
        payload = {"rows": [_jsonable(row) for row in rows], "meta": _jsonable(meta)}
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        _write_text(args.out, _csv_table(columns, rows, comments, args.digits))


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValidationError(flag, f"expected comma-separated integers, got {text!r}") from None


def _require_flag(args, names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise ValidationError(f"--{name}", "required for this dimension")


def cmd_multiplicity(args) -> int:
    if args.dim == 1:
        _require_flag(args, ("m", "j"))
        count = combinatorics.multiplicity_1d(PathClass1D(args.m, args.j))
    elif args.dim == 2:
        _require_flag(args, ("m1", "j", "k"))
        if args.m2 is not None:
            count = combinatorics.multiplicity_2d_full(args.m1, args.m2, args.j, args.k)
        else:
            count = combinatorics.multiplicity_2d_rotated(
                PathClassND(args.m1, args.j, args.k)
            )
    else:
        _require_flag(args, ("m1", "j", "k", "l"))
        count = combinatorics.multiplicity_3d(PathClassND(args.m1, args.j, args.k, args.l))

    entropy = args.kb * count.log_value
    if args.format == "json":
        payload = {
            "count": count.exact,
            "log_count": count.log_value,
            "entropy": entropy,
        }
        _write_text(args.out, json.dumps(_jsonable(payload), indent=2) + "\n")
    else:
        lines = [
            f"count={count.exact if count.exact is not None else 'NA'}",
            f"log_count={_fmt(count.log_value, args.digits)}",
            f"entropy={_fmt(entropy, args.digits)}",
        ]
        _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_scan(args) -> int:
    m_values = _parse_int_list(args.m_list, "--m-list")
    rows_raw = kernel.threshold_scan(m_values, args.b_min, args.b_max, args.points, args.tol)
    columns = ["m", "b", "bm", "sum", "limit", "ratio"]
    rows = [
        {
            "m": row.m,
            "b": row.b,
            "bm": row.bm,
            "sum": row.sum_value,
            "limit": row.limit_value,
            "ratio": row.ratio,
        }
        for row in rows_raw
    ]
    comments = [
        f"m_values={','.join(str(m) for m in m_values)}",
        f"b_min={args.b_min} b_max={args.b_max} points={args.points} tol={args.tol}",
    ]
    meta = {"b_min": args.b_min, "b_max": args.b_max, "points": args.points, "tol": args.tol}
    _emit_table(args, columns, rows, comments, meta)
    return 0


def cmd_probs(args) -> int:
    m_values = _parse_int_list(args.m_list, "--m-list")
    columns = ["m", "j", "probability"]
    rows = []
    comments = [f"tol={args.tol}"]
    meta = {}
    for m in m_values:
        table = stats.probability_1d(m, j_max=args.j_max, tol=args.tol)
        comments.append(
            f"m={m} normalization={_fmt(table.normalization, args.digits)}"
            f" tail_bound={_fmt(table.tail_bound, args.digits)}"
            f" truncated_at={table.truncated_at}"
        )
        meta[str(m)] = {
            "normalization": table.normalization,
            "tail_bound": table.tail_bound,
            "truncated_at": table.truncated_at,
        }
        for entry in table.entries:
            rows.append({"m": m, "j": entry.index[0], "probability": entry.probability})
    _emit_table(args, columns, rows, comments, meta)
    return 0


def _closed_form_count(dimension: int, net, key):
    """Closed-form count for one backward-step class, or None when no form applies."""
    if dimension == 1:
        m = net[0]
        return combinatorics.multiplicity_1d(PathClass1D(m, key[0])).exact if m >= 1 else None
    if dimension == 2:
        m1, m2 = net
        j, k = key
        if m1 >= 1:
            if m2 == 0:
                return combinatorics.multiplicity_2d_rotated(PathClassND(m1, j, k)).exact
            return combinatorics.multiplicity_2d_full(m1, m2, j, k).exact
        return None
    m1, m2, m3 = net
    if m1 >= 1 and m2 == 0 and m3 == 0:
        j, k, l = key
        return combinatorics.multiplicity_3d(PathClassND(m1, j, k, l)).exact
    return None


def cmd_paths(args) -> int:
    net = tuple(_parse_int_list(args.net, "--net"))
    counts = combinatorics.count_paths_by_flips(args.dim, net, args.total)
    sequences = combinatorics.enumerate_paths(args.dim, net, args.total, cap=args.cap)

    # cross-check the materialized walks against the independent counts
    if len(sequences) != sum(counts.values()):
        print(
            f"error: internal count mismatch: {len(sequences)} materialized,"
            f" {sum(counts.values())} counted",
            file=sys.stderr,
        )
        return 1
    for key, count in counts.items():
        closed = _closed_form_count(args.dim, net, key)
        if closed is not None and closed != count:
            print(
                f"error: internal count mismatch for class {key}:"
                f" closed form {closed}, counted {count}",
                file=sys.stderr,
            )
            return 1

    flips = None
    if args.flips is not None:
        flips = tuple(_parse_int_list(args.flips, "--flips"))
        if len(flips) != args.dim:
            raise ValidationError("--flips", f"needs {args.dim} components")
        sequences = [
            seq for seq in sequences if seq.down_counts(args.dim) == flips
        ]

    labels = "jkl"

    def class_label(key) -> str:
        return ",".join(f"{labels[axis]}={key[axis]}" for axis in range(args.dim))

    shown_keys = [flips] if flips is not None else sorted(counts)
    if args.format == "json":
        payload = {
            "net": list(net),
            "total_steps": args.total,
            "count": len(sequences),
            "classes": {class_label(key): counts[key] for key in shown_keys if key in counts},
            "sequences": [seq.to_text() for seq in sequences],
        }
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"count={len(sequences)}"]
        for key in shown_keys:
            if key in counts:
                lines.append(f"class {class_label(key)}: {counts[key]}")
        lines.extend(seq.to_text() for seq in sequences)
        _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_ensemble(args) -> int:
    ens = ensemble.SpinEnsemble1D.from_path_class(PathClass1D(args.m, args.j), args.E)
    entropy = ensemble.ensemble_entropy_large_n(ens, args.kb)
    cosh_form = ensemble.entropy_cosh_form(ens, args.kb)
    moments = ensemble.energy_moments(ens)
    log_count = combinatorics.multiplicity_1d(PathClass1D(args.m, args.j)).log_value

    report: dict[str, object] = {
        "m": args.m,
        "j": args.j,
        "n_spins": ens.n_spins,
        "E": args.E,
        "kB": args.kb,
        "beta": ens.beta,
        "partition": ensemble.partition_1d(ens.beta, ens.E),
        "entropy": entropy,
        "entropy_cosh_form": cosh_form,
        "log_multiplicity": log_count,
        "energy_mean": moments.mean,
        "energy_mean_square": moments.mean_square,
        "energy_variance": moments.variance,
    }
    if args.j > 0:
        report["stirling_relative_difference"] = abs(entropy / args.kb - log_count) / log_count
        if cosh_form <= 0 < entropy:
            report["note"] = (
                "entropy_cosh_form is non-positive; it differs from entropy by"
                " kB*n_spins*ln(2) and is reported for comparison only"
            )

    if args.format == "json":
        _write_text(args.out, json.dumps(_jsonable(report), indent=2) + "\n")
    else:
        lines = [f"{key}={_fmt(value, args.digits)}" for key, value in report.items()]
        _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_prob2d(args) -> int:
    table = stats.probability_2d(args.m1, tol=args.tol, min_diagonal=args.j + args.k)
    prob = table.probability((args.j, args.k))
    entry = next(e for e in table.entries if e.index == (args.j, args.k))

    report: dict[str, object] = {
        "m1": args.m1,
        "j": args.j,
        "k": args.k,
        "weight": f"{entry.weight.numerator}/{entry.weight.denominator}",
        "probability": prob,
        "percent": 100.0 * prob,
        "normalization": table.normalization,
        "tail_bound": table.tail_bound,
        "truncated_at_diagonal": table.truncated_at,
    }
    if args.reference_pct is not None:
        report["reference_percent"] = args.reference_pct
        report["ratio_vs_reference"] = (100.0 * prob) / args.reference_pct

    if args.format == "json":
        _write_text(args.out, json.dumps(_jsonable(report), indent=2) + "\n")
    else:
        lines = [f"{key}={_fmt(value, args.digits)}" for key, value in report.items()]
        _write_text(args.out, "\n".join(lines) + "\n")
    return 0


class _Check:
    __slots__ = ("name", "passed", "measured", "tolerance")

    def __init__(self, name: str, passed: bool, measured: float, tolerance: float):
        self.name = name
        self.passed = bool(passed)
        self.measured = measured
        self.tolerance = tolerance


def _checks_core() -> list[_Check]:
    checks = []
    base = PhysicalParams(M=2.0, dx=1.0, dt=1.0, hbar=1.0)
    worst = 0.0
    for factor in (10.0, 1e3, 1e-3):
        scaled = PhysicalParams(M=2.0 * factor, dx=1.0, dt=factor, hbar=1.0)
        worst = max(worst, abs(scaled.b - base.b) / base.b)
    si = PhysicalParams(M=9.1093837015e-31, dx=1e-12, dt=1e-18, hbar=CODATA_HBAR)
    manual = si.M * si.dx * si.dx / (2.0 * si.dt * si.hbar)
    worst = max(worst, abs(dimensionless_b(si) - manual) / manual)
    checks.append(_Check("b_rescaling_invariance", worst <= 1e-12, worst, 1e-12))

    distance = 1e-9
    probe = debroglie_limit(si, distance)
    manual_lam = si.hbar * si.dt / (si.M * distance)
    err = abs(probe.wavelength - manual_lam) / manual_lam
    ok = err <= 1e-12 and probe.dx_resolved == (si.dx <= probe.wavelength)
    checks.append(_Check("debroglie_identity", ok, err, 1e-12))
    return checks


def _checks_combinatorics() -> list[_Check]:
    checks = []
    mismatches = 0
    for m in range(1, 5):
        for j in range(3):
            counted = combinatorics.count_paths_by_flips(1, (m,), m + 2 * j)[(j,)]
            if counted != combinatorics.multiplicity_1d(PathClass1D(m, j)).exact:
                mismatches += 1
    checks.append(_Check("counts_1d_match_oracle", mismatches == 0, mismatches, 0))

    mismatches = 0
    for m1 in range(1, 3):
        for m2 in range(0, 3):
            for j in range(2):
                for k in range(2):
                    total = m1 + m2 + 2 * j + 2 * k
                    counted = combinatorics.count_paths_by_flips(2, (m1, m2), total).get(
                        (j, k), 0
                    )
                    expected = combinatorics.multiplicity_2d_full(m1, m2, j, k).exact
                    if counted != expected:
                        mismatches += 1
    checks.append(_Check("counts_2d_match_oracle", mismatches == 0, mismatches, 0))

    seqs = combinatorics.enumerate_paths(2, (1, 1), 4)
    counted = sum(combinatorics.count_paths_by_flips(2, (1, 1), 4).values())
    checks.append(
        _Check("enumeration_materializes_count", len(seqs) == counted, len(seqs), counted)
    )

    mismatches = 0
    for m1 in range(0, 4):
        for m2 in range(0, 4):
            if m1 + m2 == 0 or m1 == 0:
                continue
            lhs = combinatorics.minimum_distance_count(m1, m2).exact
            rhs = combinatorics.multiplicity_2d_full(m1, m2, 0, 0).exact
            if lhs != rhs:
                mismatches += 1
    checks.append(_Check("minimum_distance_identity", mismatches == 0, mismatches, 0))

    ln2 = math.log(2.0)
    gaps = [
        abs(combinatorics.entropy_rate(PathClass1D(2, j)) - ln2) for j in (10, 1000, 100000)
    ]
    ok = gaps[0] > gaps[1] > gaps[2]
    checks.append(_Check("entropy_rate_approaches_ln2", ok, gaps[-1], gaps[0]))
    return checks


def _checks_kernel() -> list[_Check]:
    checks = []
    worst = 0.0
    for m1 in (1, 2, 3):
        for b in (0.3, 0.7, 1.5):
            reind = kernel.kernel_sum_2d(b, m1, tol=1e-14).value
            direct = 0.0
            for j in range(60):
                for k in range(60):
                    direct += math.exp(-b * (m1 + 2 * j + 2 * k) ** 2)
            worst = max(worst, abs(reind - direct) / direct)
    checks.append(_Check("reindexing_identity_2d", worst <= 1e-12, worst, 1e-12))

    worst = 0.0
    floor_ok = True
    for m in (1, 2, 3):
        prev = None
        for i in range(40):
            b = 0.05 + i * (2.0 - 0.05) / 39
            res = kernel.kernel_sum_1d(b, m)
            refined = kernel.kernel_sum_1d(b, m, tol=1e-15)
            low = res.value - 1e-13 * res.value
            high = res.value + res.truncation_bound + 1e-13 * res.value
            if not (low <= refined.value <= high):
                worst = max(worst, 1.0)
            ratio = res.value / kernel._gauss_term(b, m)
            if ratio < 1.0:
                floor_ok = False
            if prev is not None and ratio > prev + 1e-15:
                floor_ok = False
            prev = ratio
    checks.append(_Check("tail_bound_containment", worst == 0.0, worst, 0))
    checks.append(_Check("ratio_floor_and_monotone", floor_ok, 0.0 if floor_ok else 1.0, 0))

    params = PhysicalParams(M=1.0, dx=1.0, dt=1.0, hbar=1.0)
    resid = kernel.heat_residual(params, 0.7, 1.0, 1e-3)
    resid_half = kernel.heat_residual(params, 0.7, 1.0, 5e-4)
    order = math.log2(resid / resid_half)
    checks.append(_Check("heat_residual_small", resid <= 1e-6, resid, 1e-6))
    checks.append(_Check("heat_stencil_second_order", abs(order - 2.0) <= 0.5, order, 2.0))

    norm = kernel.propagator_normalization(params, 1.0)
    checks.append(_Check("propagator_normalized", abs(norm - 1.0) <= 1e-9, abs(norm - 1.0), 1e-9))

    cls = PathClass1D(2, 3)
    via_action = kernel.action_1d(params, cls) / params.hbar
    via_b = dimensionless_b(params) * cls.n_steps**2
    err = abs(via_action - via_b) / via_b
    checks.append(_Check("action_matches_b_route", err <= 1e-12, err, 1e-12))
    return checks


def _checks_stats() -> list[_Check]:
    checks = []
    worst = 0.0
    last_p0 = 0.0
    increasing = True
    for m in (2, 5, 10, 50, 100):
        table = stats.probability_1d(m)
        total = math.fsum(entry.probability for entry in table.entries)
        worst = max(worst, abs(total - 1.0))
        p0 = table.entries[0].probability
        if p0 <= last_p0:
            increasing = False
        last_p0 = p0
    checks.append(_Check("tables_normalized", worst <= 1e-10, worst, 1e-10))
    checks.append(_Check("p0_increases_with_m", increasing, last_p0, 0.989))

    mismatches = 0
    for m in range(1, 8):
        for j in range(0, 8):
            triple = stats.moments_1d(PathClass1D(m, j), 1)
            if triple.mean_square - triple.mean**2 != triple.variance:
                mismatches += 1
    checks.append(_Check("variance_identity_exact", mismatches == 0, mismatches, 0))

    probe = stats.alt_divergence_probe(2, target=1.5, j_cap=10**4)
    checks.append(
        _Check(
            "alt_weighting_diverges",
            probe.crossed,
            probe.crossing_j if probe.crossed else -1,
            10**4,
        )
    )

    table = stats.probability_2d(1)
    repeat = stats.probability_2d(1)
    same = all(
        a.probability == b.probability for a, b in zip(table.entries, repeat.entries)
    )
    checks.append(_Check("prob2d_deterministic", same, 0.0 if same else 1.0, 0))

    one_d = stats.probability_1d(2)
    two_d = stats.probability_2d(2)
    w0 = next(e.weight for e in two_d.entries if e.index == (1, 0))
    err = abs(float(w0) - float(one_d.entries[1].weight))
    checks.append(_Check("k0_column_matches_1d_weights", err == 0.0, err, 0))
    return checks


def _checks_ensemble() -> list[_Check]:
    checks = []
    worst = 0.0
    for m in range(1, 6):
        for j in range(1, 6):
            ens = ensemble.SpinEnsemble1D.from_path_class(PathClass1D(m, j), 1.3)
            x = ens.beta * ens.E
            n = ens.n_spins
            worst = max(worst, abs(math.tanh(x) - m / n))
            worst = max(worst, abs(math.cosh(x) - n / (2.0 * math.sqrt(j * (m + j)))))
            s_closed = ensemble.ensemble_entropy_large_n(ens)
            s_standard = ensemble.two_level_entropy(n, x)
            worst = max(worst, abs(s_closed - s_standard) / s_standard)
    checks.append(_Check("temperature_identities", worst <= 1e-12, worst, 1e-12))

    rels = []
    for n in (100, 10**4):
        j = (n - 2) // 2
        ens = ensemble.SpinEnsemble1D.from_path_class(PathClass1D(2, j), 1.0)
        s = ensemble.ensemble_entropy_large_n(ens)
        ln_w = combinatorics.multiplicity_1d(PathClass1D(2, j)).log_value
        rels.append(abs(s - ln_w) / ln_w)
    ok = rels[-1] <= 0.01 and rels[-1] < rels[0]
    checks.append(_Check("stirling_entropy_1d", ok, rels[-1], 0.01))

    ens2 = ensemble.SpinEnsemble2D.from_path_class(PathClassND(200, 100, 100), 1.0, 1.0)
    s2 = ensemble.ensemble_entropy_2d(ens2)
    ln_w2 = combinatorics.multiplicity_2d_rotated(PathClassND(200, 100, 100)).log_value
    rel2 = abs(s2 - ln_w2) / ln_w2
    checks.append(_Check("stirling_entropy_2d", rel2 <= 0.02, rel2, 0.02))

    ens = ensemble.SpinEnsemble1D.from_path_class(PathClass1D(3, 2), 0.7)
    mom_e = ensemble.energy_moments(ens)
    mom_x = stats.moments_1d(PathClass1D(3, 2), 0.7)
    mirror = (
        mom_e.mean == mom_x.mean
        and mom_e.mean_square == mom_x.mean_square
        and mom_e.variance == mom_x.variance
    )
    checks.append(_Check("moment_mirror", mirror, 0.0 if mirror else 1.0, 0))

    ens0 = ensemble.SpinEnsemble1D.from_path_class(PathClass1D(2, 0), 1.0)
    ok = (
        math.isinf(ens0.beta)
        and math.isinf(ensemble.partition_1d(ens0.beta, ens0.E))
        and ensemble.ensemble_entropy_large_n(ens0) == 0.0
    )
    checks.append(_Check("ordered_case_conventions", ok, 0.0 if ok else 1.0, 0))

    worst = 0.0
    for x in (20.0, 25.0, 30.0):
        z = ensemble.partition_1d(x, 1.0)
        worst = max(worst, abs(z - math.exp(x)) / math.exp(x))
    checks.append(_Check("classical_limit_float", worst <= 1e-15, worst, 1e-15))

    ens2 = ensemble.SpinEnsemble2D.from_path_class(PathClassND(2, 1, 1), 1.0, 1.0)
    log_z = ensemble.combined_partition_2d(ens2)
    n1, n2 = ens2.n_species1, ens2.n_species2
    direct = (
        ensemble.partition_1d(ens2.beta1, ens2.E1) ** n1
        * ensemble.partition_1d(ens2.beta2, ens2.E2) ** n2
    )
    err = abs(math.exp(log_z - ensemble.mixing_log_count(n1, n2)) - direct) / direct
    ok = err <= 1e-10 and ensemble.restriction_check(ens2)
    checks.append(_Check("combined_partition_consistent", ok, err, 1e-10))
    return checks


_SCOPES = {
    "core": _checks_core,
    "combinatorics": _checks_combinatorics,
    "kernel": _checks_kernel,
    "stats": _checks_stats,
    "ensemble": _checks_ensemble,
}


def cmd_validate(args) -> int:
    scopes = list(_SCOPES) if args.scope == "all" else [args.scope]
    checks: list[tuple[str, _Check]] = []
    for scope in scopes:
        for check in _SCOPES[scope]():
            checks.append((scope, check))

    all_passed = all(check.passed for _, check in checks)
    if args.format == "json":
        payload = {
            "scope": args.scope,
            "all_passed": all_passed,
            "checks": [
                {
                    "scope": scope,
                    "name": check.name,
                    "passed": check.passed,
                    "measured": check.measured,
                    "tolerance": check.tolerance,
                }
                for scope, check in checks
            ],
        }
        _write_text(args.out, json.dumps(_jsonable(payload), indent=2) + "\n")
    else:
        lines = []
        for scope, check in checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(
                f"{status} {scope}.{check.name}"
                f" measured={_fmt(check.measured, args.digits)}"
                f" tolerance={_fmt(check.tolerance, args.digits)}"
            )
        lines.append(f"all_passed={all_passed}")
        _write_text(args.out, "\n".join(lines) + "\n")

    if not all_passed:
        for scope, check in checks:
            if not check.passed:
                print(f"validation failed: {scope}.{check.name}", file=sys.stderr)
        return 1
    return 0


def _add_common(parser, default_format: str = "csv", formats=("csv", "json")) -> None:
    parser.add_argument("--out", default=None, help="output file (default: stdout)")
    parser.add_argument(
        "--format", choices=formats, default=default_format, help="output format"
    )
    parser.add_argument(
        "--digits", type=int, default=15,
        help="printed float precision; 17 or more round-trips exactly",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathsum",
        description="Lattice path-class counts, kernel sums, probabilities, ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiplicity", help="count walks in one path class")
    p.add_argument("--dim", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--m", type=int, default=None, help="1D net displacement")
    p.add_argument("--m1", type=int, default=None, help="first-axis net displacement")
    p.add_argument("--m2", type=int, default=None, help="second-axis net displacement (2D full)")
    p.add_argument("--j", type=int, default=None, help="backward steps on the net axis")
    p.add_argument("--k", type=int, default=None, help="transverse round trips")
    p.add_argument("--l", type=int, default=None, help="second transverse round trips (3D)")
    p.add_argument("--kb", type=float, default=CODATA_KB, help="Boltzmann constant")
    _add_common(p, default_format="text", formats=("text", "json"))
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("scan", help="sum/limit ratio over a grid of b values")
    p.add_argument("--m-list", default="1,2,3", help="comma-separated net displacements")
    p.add_argument("--b-min", type=float, default=0.01)
    p.add_argument("--b-max", type=float, default=2.0)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-12)
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("probs", help="normalized class probabilities per m")
    p.add_argument("--m-list", default="2,5,10,50,100")
    p.add_argument("--j-max", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-12)
    _add_common(p)
    p.set_defaults(func=cmd_probs)

    p = sub.add_parser("paths", help="enumerate the walks of a class explicitly")
    p.add_argument("--dim", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--net", required=True, help="comma-separated net displacement")
    p.add_argument("--total", type=int, required=True, help="total step count")
    p.add_argument("--cap", type=int, default=combinatorics.DEFAULT_ENUMERATION_CAP)
    p.add_argument("--flips", default=None, help="only this backward-step class, e.g. 1,0")
    _add_common(p, default_format="text", formats=("text", "json"))
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("ensemble", help="two-level ensemble report for a 1D class")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--E", type=float, default=1.0, help="level spacing")
    p.add_argument("--kb", type=float, default=CODATA_KB, help="Boltzmann constant")
    _add_common(p, default_format="text", formats=("text", "json"))
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("prob2d", help="probability of one 2D class with tail bound")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument(
        "--reference-pct", type=float, default=None,
        help="externally reported percent value to compare against",
    )
    _add_common(p, default_format="text", formats=("text", "json"))
    p.set_defaults(func=cmd_prob2d)

    p = sub.add_parser("validate", help="run the built-in consistency checks")
    p.add_argument("--scope", choices=["all", *_SCOPES], default="all")
    _add_common(p, default_format="text", formats=("text", "json"))
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, DivergenceError) as exc:
        print(f"error: invalid argument ({exc})", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"error: resource cap exceeded ({exc})", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
