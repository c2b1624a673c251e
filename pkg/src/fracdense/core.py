"""Quotient-set enumeration, epsilon-net coverage, and the brute-force
region checker used as the independent oracle for every certificate.

Real-line comparisons are exact rational; complex comparisons reduce to
exact integer arithmetic on norms (annulus membership depends only on
N(u)/N(v)) or on squared distances in ring coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, ParameterError
from .regions import Annulus, Interval, Region


@dataclass(frozen=True)
class CoverageReport:
    """Result of an epsilon-net density check.

    `best` holds, per target, the exact best achieved |xi - r| in real mode
    and |xi - r|^2 in complex mode (squared distances stay rational there);
    `covered` is the exact comparison against epsilon resp. epsilon^2.
    A None entry means the scan certified only that no quotient comes within
    epsilon (exact), without computing the minimum beyond that threshold.
    """

    mode: str  # "real" | "complex"
    epsilon: Fraction
    targets: tuple
    best: tuple
    covered: tuple[bool, ...]

    @property
    def coverage_fraction(self) -> Fraction:
        return Fraction(sum(self.covered), len(self.covered))


@dataclass(frozen=True)
class GapCheckResult:
    hit: bool
    witness: tuple | None  # (numerator element, denominator element)
    ratio: Fraction | None  # u/v for intervals, N(u)/N(v) for annuli
    bound: int


def quotient_set(numer_set, denom_set, bound: int) -> list[Fraction]:
    """All reduced ratios u/v with u, v enumerated up to `bound`; sorted,
    duplicate-free (quotient sets are sets)."""
    us = numer_set.enumerate_upto(bound)
    vs = denom_set.enumerate_upto(bound)
    if len(us) == 0 or len(vs) == 0:
        raise DomainError("quotient set needs nonempty enumerations")
    if int(vs[0]) == 0:
        raise DomainError("denominator enumeration contains 0")
    out = {Fraction(int(u), int(v)) for u in us for v in vs}
    return sorted(out)


def coverage_check(numer_set, denom_set, grid, epsilon: Fraction, bound: int) -> CoverageReport:
    """Coverage of a rational grid by the truncated quotient set, with exact
    best-error per target.  Complex-set pairs dispatch to the lattice engine."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ParameterError("epsilon must be positive")
    if not grid:
        raise ParameterError("grid must be nonempty")
    if hasattr(numer_set, "elements_upto"):  # complex-side descriptor
        from .quadratic import complex_coverage

        return complex_coverage(numer_set, denom_set, grid, epsilon, bound)
    els_n = numer_set.enumerate_upto(bound)
    els_d = denom_set.enumerate_upto(bound)
    if len(els_n) == 0 or len(els_d) == 0:
        raise DomainError("coverage needs nonempty enumerations")
    if int(els_d[0]) == 0:
        els_d = els_d[els_d > 0]
        if len(els_d) == 0:
            raise DomainError("denominator enumeration contains only 0")
    best = []
    covered = []
    for xi in grid:
        xi = Fraction(xi)
        err = _best_error_pair(els_n, els_d, xi)
        best.append(err)
        covered.append(err < epsilon)
    return CoverageReport(
        mode="real",
        epsilon=epsilon,
        targets=tuple(Fraction(x) for x in grid),
        best=tuple(best),
        covered=tuple(covered),
    )


def _best_error_pair(els_n: np.ndarray, els_d: np.ndarray, target: Fraction) -> Fraction:
    best: Fraction | None = None
    tn, td = target.numerator, target.denominator
    scaled = els_n.astype(object) * td
    for v in els_d.tolist():
        v = int(v)
        x = tn * v
        idx = int(np.searchsorted(scaled, x))
        for j in (idx - 1, idx):
            if 0 <= j < len(els_n):
                err = abs(target - Fraction(int(els_n[j]), v))
                if best is None or err < best:
                    best = err
        if best == 0:
            break
    assert best is not None
    return best


def brute_force_gap_check(
    numer_set, denom_set, region: Region, bound: int, distinct_only: bool = False
) -> GapCheckResult:
    """Exhaustively decide whether any quotient of enumerated elements lies
    strictly inside the region.  Interval regions take integer-set pairs;
    annulus regions take ring-element descriptors and compare norm ratios.
    With distinct_only, ratios of an element with itself are skipped (used
    by selected-family certificates whose claim ranges over distinct pairs).
    """
    if isinstance(region, Annulus):
        from .quadratic import annulus_gap_check

        return annulus_gap_check(numer_set, denom_set, region, bound, distinct_only)
    if not isinstance(region, Interval):
        raise ParameterError(f"unsupported region {region!r}")
    us = numer_set.enumerate_upto(bound)
    vs = denom_set.enumerate_upto(bound)
    if len(us) == 0 or len(vs) == 0:
        raise DomainError("gap check needs nonempty enumerations")
    if len(vs) and int(vs[0]) == 0:
        raise DomainError("denominator enumeration contains 0")
    p_lo, q_lo = region.lo.numerator, region.lo.denominator
    p_hi, q_hi = region.hi.numerator, region.hi.denominator
    # u > lo*v  <=>  u >= floor(p_lo*v/q_lo) + 1 ; u < hi*v <=> u <= ceil - 1
    low_idx = np.searchsorted(us, (p_lo * vs) // q_lo + 1, side="left")
    high_idx = np.searchsorted(us, -((-p_hi * vs) // q_hi) - 1, side="right")
    hits = np.nonzero(low_idx < high_idx)[0]
    for i in hits.tolist():
        v = int(vs[i])
        for j in range(int(low_idx[i]), int(high_idx[i])):
            u = int(us[j])
            if distinct_only and u == v:
                continue
            ratio = Fraction(u, v)
            if region.contains(ratio):
                return GapCheckResult(hit=True, witness=(u, v), ratio=ratio, bound=bound)
    return GapCheckResult(hit=False, witness=None, ratio=None, bound=bound)
