"""Gaussian kernel sums over path classes, with certified truncation.

The weight of a class decays as exp(-b N^2) in its step count N, where
b = M dx^2/(2 dt hbar) collects all physical parameters. Sums over classes
are evaluated in ascending order with Neumaier compensated summation and
stopped by a geometric tail majorant, so every result carries a rigorous
bound on what was left out.

The scan utilities map where the j = 0 term dominates the full sum; the
closed-form diffusion propagator and its finite-difference residual provide
the continuum cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    DivergenceError,
    PathClass1D,
    PhysicalParams,
    SeriesCapError,
    SumResult,
    ValidationError,
    _require_int,
    max_series_terms,
)


def _gauss_term(b: float, n: int) -> float:
    # Shared by series terms and scan limit values. The j = 0 term and the
    # limit must be bit-identical floats (ratio >= 1 is promised exactly),
    # and -b*(n*n) and (-b*n)*n round differently.
    return math.exp(-b * (n * n))


class _Neumaier:
    """Compensated accumulator; error stays O(eps) independent of term count."""

    __slots__ = ("partial", "carry")

    def __init__(self):
        self.partial = 0.0
        self.carry = 0.0

    def add(self, term: float) -> None:
        new = self.partial + term
        if abs(self.partial) >= abs(term):
            self.carry += (self.partial - new) + term
        else:
            self.carry += (term - new) + self.partial
        self.partial = new

    def value(self) -> float:
        return self.partial + self.carry


def _check_sum_args(b: float, m: int, m_name: str, tol: float) -> None:
    if isinstance(b, bool) or not isinstance(b, (int, float)):
        raise ValidationError("b", f"must be a real number, got {b!r}")
    if math.isnan(b):
        raise ValidationError("b", "must not be NaN")
    if b <= 0:
        raise DivergenceError(f"series diverges for b = {b}; need b > 0")
    _require_int(m_name, m)
    if m < 1:
        raise ValidationError(m_name, f"must be >= 1, got {m}")
    if not (tol > 0) or math.isnan(tol):
        raise ValidationError("tol", f"must be > 0, got {tol!r}")


def kernel_sum_1d(b: float, m: int, tol: float = 1e-12) -> SumResult:
    """Sum of exp(-b (m+2j)^2) over j >= 0, truncated with a certified bound.

    Terms fall strictly geometrically, so once the next term t' and ratio
    r = t'/t are known, the tail is at most t'/(1-r). Summation stops when
    that majorant drops to tol times the partial sum.
    """
    _check_sum_args(b, m, "m", tol)
    cap = max_series_terms()
    acc = _Neumaier()
    j = 0
    term = _gauss_term(b, m)
    while True:
        acc.add(term)
        terms_used = j + 1
        nxt = _gauss_term(b, m + 2 * (j + 1))
        ratio = nxt / term if term > 0 else 0.0
        bound = nxt / (1.0 - ratio) if ratio < 1.0 else math.inf
        value = acc.value()
        if bound <= tol * value:
            return SumResult(value=value, terms_used=terms_used, truncation_bound=bound)
        if terms_used >= cap:
            raise SeriesCapError(
                f"kernel_sum_1d(b={b}, m={m}) hit the {cap}-term cap at tol={tol}"
            )
        j += 1
        term = nxt


def kernel_sum_2d(b: float, m1: int, tol: float = 1e-12) -> SumResult:
    """Sum of exp(-b (m1+2j+2k)^2) over j, k >= 0, via exact reindexing.

    Collecting the (j, k) pairs with j + k = n gives the single series
    sum_n (n+1) exp(-b (m1+2n)^2). The linear weight lets early terms grow
    when b is small, so the geometric stop is applied only once the term
    ratio falls below 1; from there it decreases monotonically and the
    tail majorant is valid.
    """
    _check_sum_args(b, m1, "m1", tol)
    cap = max_series_terms()
    acc = _Neumaier()
    n = 0
    term = _gauss_term(b, m1)  # (n+1) weight is 1 at n = 0
    while True:
        acc.add(term)
        terms_used = n + 1
        nxt = (n + 2) * _gauss_term(b, m1 + 2 * (n + 1))
        value = acc.value()
        if term > 0.0:
            ratio = nxt / term
            if ratio < 1.0:
                bound = nxt / (1.0 - ratio)
                if bound <= tol * value:
                    return SumResult(
                        value=value, terms_used=terms_used, truncation_bound=bound
                    )
        else:
            # fully underflowed tail
            return SumResult(value=value, terms_used=terms_used, truncation_bound=0.0)
        if terms_used >= cap:
            raise SeriesCapError(
                f"kernel_sum_2d(b={b}, m1={m1}) hit the {cap}-term cap at tol={tol}"
            )
        n += 1
        term = nxt


@dataclass(frozen=True)
class KernelScanRow:
    """One scan point: the full sum against its j = 0 limit value."""

    m: int
    b: float
    sum_value: float
    limit_value: float
    ratio: float
    terms_used: int

    @property
    def bm(self) -> float:
        return self.b * self.m


def threshold_scan(
    m_values,
    b_min: float,
    b_max: float,
    n_points: int,
    tol: float = 1e-12,
) -> list[KernelScanRow]:
    """Evaluate sum/limit ratios on a uniform b grid for each m.

    ratio >= 1.0 holds exactly for every row, and for fixed m it is
    non-increasing in b; rows are ordered by m, then ascending b.
    """
    m_list = list(m_values)
    if not m_list:
        raise ValidationError("m_values", "must be non-empty")
    for m in m_list:
        _require_int("m_values", m)
        if m < 1:
            raise ValidationError("m_values", f"entries must be >= 1, got {m}")
    for name, val in (("b_min", b_min), ("b_max", b_max)):
        if not (val > 0) or math.isinf(val) or math.isnan(val):
            raise ValidationError(name, f"must be finite and > 0, got {val!r}")
    if not b_min < b_max:
        raise ValidationError("b_max", f"need b_min < b_max, got {b_min} >= {b_max}")
    _require_int("n_points", n_points)
    if n_points < 2:
        raise ValidationError("n_points", f"must be >= 2, got {n_points}")

    rows = []
    last = n_points - 1
    for m in m_list:
        for i in range(n_points):
            # convex blend keeps both endpoints exact in floating point
            b = (b_min * (last - i) + b_max * i) / last
            res = kernel_sum_1d(b, m, tol)
            limit = _gauss_term(b, m)
            rows.append(
                KernelScanRow(
                    m=m,
                    b=b,
                    sum_value=res.value,
                    limit_value=limit,
                    ratio=res.value / limit,
                    terms_used=res.terms_used,
                )
            )
    return rows


def action_1d(params: PhysicalParams, cls: PathClass1D) -> float:
    """Action of covering N steps' worth of distance in one time interval.

    M (N dx)^2 / (2 dt); dividing by hbar reproduces b * N^2.
    """
    n = cls.n_steps
    return params.step_action * (n * n)


def propagator_closed(params: PhysicalParams, x: float, t: float) -> float:
    """Normalized diffusion kernel with diffusivity hbar/(2M)."""
    if not (t > 0) or math.isinf(t) or math.isnan(t):
        raise ValidationError("t", f"must be finite and > 0, got {t!r}")
    if math.isnan(x) or math.isinf(x):
        raise ValidationError("x", f"must be finite, got {x!r}")
    variance = params.hbar * t / params.M
    return math.exp(-x * x / (2.0 * variance)) / math.sqrt(2.0 * math.pi * variance)


def heat_residual(params: PhysicalParams, x: float, t: float, h: float) -> float:
    """|d/dt K - (hbar/2M) d2/dx2 K| by central differences with spacing h.

    O(h^2) accurate; halving h should shrink it about fourfold.
    """
    if not (h > 0) or math.isinf(h) or math.isnan(h):
        raise ValidationError("h", f"must be finite and > 0, got {h!r}")
    if not t > 2 * h:
        raise ValidationError("t", f"need t > 2h for the time stencil, got t={t}, h={h}")
    diffusivity = params.hbar / (2.0 * params.M)

    def k(xx: float, tt: float) -> float:
        return propagator_closed(params, xx, tt)

    dt_deriv = (k(x, t + h) - k(x, t - h)) / (2.0 * h)
    dxx_deriv = (k(x + h, t) - 2.0 * k(x, t) + k(x - h, t)) / (h * h)
    return abs(dt_deriv - diffusivity * dxx_deriv)


def propagator_normalization(
    params: PhysicalParams,
    t: float,
    panels: int = 4096,
    half_width_sigmas: float = 12.0,
) -> float:
    """Integral of the closed-form kernel over x, by composite Simpson.

    The window spans half_width_sigmas standard deviations each side, wide
    enough that the omitted Gaussian tails sit far below 1e-9.
    """
    _require_int("panels", panels)
    if panels < 2 or panels % 2 != 0:
        raise ValidationError("panels", f"must be an even integer >= 2, got {panels}")
    if not (half_width_sigmas > 0):
        raise ValidationError("half_width_sigmas", f"must be > 0, got {half_width_sigmas!r}")
    sigma = math.sqrt(params.hbar * t / params.M)
    half = half_width_sigmas * sigma
    step = 2.0 * half / panels
    acc = _Neumaier()
    acc.add(propagator_closed(params, -half, t))
    acc.add(propagator_closed(params, half, t))
    for i in range(1, panels):
        x = -half + i * step
        weight = 4.0 if i % 2 == 1 else 2.0
        acc.add(weight * propagator_closed(params, x, t))
    return acc.value() * step / 3.0
