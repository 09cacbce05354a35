"""Counting lattice walks by class, exactly and in log space.

A class fixes the net displacement and the number of steps spent moving
against it (or in transverse round trips); the count is the number of
distinct step orderings, a multinomial. Counts are exact big integers up
to EXACT_STEP_LIMIT total steps and switch to lgamma-based logarithms
above, where the exact integers would be astronomically large but their
logarithms remain ordinary floats.

An enumeration oracle is included: count_paths_by_flips tallies every
step sequence by dynamic programming without using any closed formula,
and enumerate_paths materializes the sequences themselves. They exist so
the multinomial forms can be checked against brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    BigCount,
    EnumerationCapError,
    PathClass1D,
    PathClassND,
    ValidationError,
    _require_int,
)

EXACT_STEP_LIMIT = 2000
DEFAULT_ENUMERATION_CAP = 10**6

_AXIS_NAMES = "xyz"
LN2 = math.log(2.0)


def _multinomial(total: int, parts: tuple[int, ...]) -> BigCount:
    """total! / prod(part!) as a BigCount. parts must sum to total."""
    if total <= EXACT_STEP_LIMIT:
        den = 1
        for p in parts:
            den *= math.factorial(p)
        exact = math.factorial(total) // den
        return BigCount(log_value=math.log(exact), exact=exact)
    log_value = math.lgamma(total + 1) - sum(math.lgamma(p + 1) for p in parts)
    return BigCount.from_log(log_value)


def multiplicity_1d(cls: PathClass1D) -> BigCount:
    """Number of 1D walks with net displacement m out of N = m + 2j steps.

    Equals N! / ((m+j)! j!), the orderings of m+j forward and j backward
    steps.
    """
    return _multinomial(cls.n_steps, (cls.n_up, cls.n_down))


def multiplicity_2d_full(m1: int, m2: int, j: int, k: int) -> BigCount:
    """2D walks with net displacement (m1, m2), j and k backward steps per axis."""
    _require_int("m1", m1)
    _require_int("m2", m2)
    _require_int("j", j)
    _require_int("k", k)
    if m1 < 1:
        raise ValidationError("m1", f"must be >= 1, got {m1}")
    if m2 < 0:
        raise ValidationError("m2", f"must be >= 0, got {m2}")
    if j < 0:
        raise ValidationError("j", f"must be >= 0, got {j}")
    if k < 0:
        raise ValidationError("k", f"must be >= 0, got {k}")
    total = m1 + m2 + 2 * j + 2 * k
    return _multinomial(total, (m1 + j, j, m2 + k, k))


def multiplicity_2d_rotated(cls: PathClassND) -> BigCount:
    """2D walks in axes aligned with the displacement: net (m1, 0).

    The transverse axis contributes k steps each way, so the count is
    N! / ((m1+j)! j! (k!)^2) with N = m1 + 2j + 2k.
    """
    if cls.dimension != 2:
        raise ValidationError("l", "rotated 2D count requires a 2D class (l is None)")
    return _multinomial(cls.n_steps, (cls.m1 + cls.j, cls.j, cls.k, cls.k))


def multiplicity_3d(cls: PathClassND) -> BigCount:
    """3D walks with net displacement along one axis: N!/((m1+j)! j! (k!)^2 (l!)^2)."""
    if cls.dimension != 3:
        raise ValidationError("l", "3D count requires l to be set")
    return _multinomial(
        cls.n_steps, (cls.m1 + cls.j, cls.j, cls.k, cls.k, cls.l, cls.l)
    )


def minimum_distance_count(m1: int, m2: int) -> BigCount:
    """Shortest 2D walks to (m1, m2): (m1+m2)!/(m1! m2!), no wasted steps."""
    _require_int("m1", m1)
    _require_int("m2", m2)
    if m1 < 0 or m2 < 0:
        raise ValidationError("m1" if m1 < 0 else "m2", "must be >= 0")
    if m1 + m2 < 1:
        raise ValidationError("m1", "need a nonzero displacement")
    return _multinomial(m1 + m2, (m1, m2))


def entropy_1d(cls: PathClass1D, kB: float = 1.0) -> float:
    """Boltzmann entropy kB * ln W of a 1D path class."""
    return kB * multiplicity_1d(cls).log_value


def entropy_2d(m1: int, m2: int, j: int, k: int, kB: float = 1.0) -> float:
    return kB * multiplicity_2d_full(m1, m2, j, k).log_value


def entropy_rate(cls: PathClass1D, kB: float = 1.0) -> float:
    """Entropy per step, kB * ln W / N. Approaches kB*ln 2 for j >> m."""
    return kB * multiplicity_1d(cls).log_value / cls.n_steps


@dataclass(frozen=True)
class StepSequence:
    """One concrete walk: a tuple of (axis, direction) steps, direction +1 or -1."""

    steps: tuple[tuple[int, int], ...]

    def net(self, dimension: int) -> tuple[int, ...]:
        totals = [0] * dimension
        for axis, sign in self.steps:
            totals[axis] += sign
        return tuple(totals)

    def down_counts(self, dimension: int) -> tuple[int, ...]:
        """Per-axis count of steps in the -1 direction."""
        downs = [0] * dimension
        for axis, sign in self.steps:
            if sign < 0:
                downs[axis] += 1
        return tuple(downs)

    def to_text(self) -> str:
        return " ".join(
            f"{'+' if sign > 0 else '-'}{_AXIS_NAMES[axis]}" for axis, sign in self.steps
        )


def _check_walk_args(dimension: int, net, total_steps: int) -> tuple[int, ...]:
    _require_int("dimension", dimension)
    if dimension not in (1, 2, 3):
        raise ValidationError("dimension", f"must be 1, 2, or 3, got {dimension}")
    net = tuple(net)
    if len(net) != dimension:
        raise ValidationError("net", f"needs {dimension} components, got {len(net)}")
    for comp in net:
        _require_int("net", comp)
        if comp < 0:
            raise ValidationError("net", f"components must be >= 0, got {comp}")
    _require_int("total_steps", total_steps)
    span = sum(net)
    if total_steps < span:
        raise ValidationError(
            "total_steps", f"{total_steps} steps cannot reach displacement {net}"
        )
    if (total_steps - span) % 2 != 0:
        raise ValidationError(
            "total_steps", f"parity mismatch: {total_steps} steps, displacement {net}"
        )
    return net


def count_paths_by_flips(dimension: int, net, total_steps: int) -> dict[tuple[int, ...], int]:
    """Tally all walks reaching `net` in `total_steps`, keyed by per-axis backward steps.

    Dynamic programming over per-axis (up, down) step counts; every sequence
    is counted exactly once and no closed-form factorial is used, so this
    serves as an independent oracle for the multiplicity functions. Keys are
    tuples (j,), (j, k), or (j, k, l) of backward-step counts per axis.
    """
    net = _check_walk_args(dimension, net, total_steps)
    start = tuple((0, 0) for _ in range(dimension))
    states: dict[tuple, int] = {start: 1}
    for _ in range(total_steps):
        nxt: dict[tuple, int] = {}
        for state, count in states.items():
            for axis in range(dimension):
                up, down = state[axis]
                for bumped in ((up + 1, down), (up, down + 1)):
                    key = state[:axis] + (bumped,) + state[axis + 1 :]
                    nxt[key] = nxt.get(key, 0) + count
        states = nxt
    result: dict[tuple[int, ...], int] = {}
    for state, count in states.items():
        if all(up - down == want for (up, down), want in zip(state, net)):
            result[tuple(down for _, down in state)] = count
    return result


def enumerate_paths(
    dimension: int,
    net,
    total_steps: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[StepSequence]:
    """Materialize every walk reaching `net` in `total_steps`, in a fixed order.

    Steps are generated in the move order +x, -x, +y, -y, +z, -z, so the
    output is deterministic. The total count is computed first; if it would
    exceed `cap`, EnumerationCapError is raised rather than truncating.
    """
    net = _check_walk_args(dimension, net, total_steps)
    _require_int("cap", cap)
    if cap < 1:
        raise ValidationError("cap", f"must be >= 1, got {cap}")
    total = sum(count_paths_by_flips(dimension, net, total_steps).values())
    if total > cap:
        raise EnumerationCapError(
            f"{total} sequences for net={net}, steps={total_steps} exceeds cap {cap}"
        )

    moves = [(axis, sign) for axis in range(dimension) for sign in (+1, -1)]
    out: list[StepSequence] = []
    prefix: list[tuple[int, int]] = []
    position = [0] * dimension

    def walk(remaining: int) -> None:
        if remaining == 0:
            if all(position[a] == net[a] for a in range(dimension)):
                out.append(StepSequence(tuple(prefix)))
            return
        # too far from the target to get back in time
        if sum(abs(net[a] - position[a]) for a in range(dimension)) > remaining:
            return
        for axis, sign in moves:
            position[axis] += sign
            prefix.append((axis, sign))
            walk(remaining - 1)
            prefix.pop()
            position[axis] -= sign

    walk(total_steps)
    return out
