"""Leading-block families: the density dichotomy, the constructive
approximation, and gap certificates for the power-free family.

For B = A union {b^k}, the closure of the quotient set R(B) is the union,
over integer scales u, of three closed interval families:

    window/window   [a/c * b^u, c/a * b^u]
    window/power    [a * b^u,   c * b^u]
    power/window    [b^u / c,   b^u / a]

(each window contributes ratios dense in its interval as scales grow, and
powers of b are limit points of all three).  Density of R(B) in the
positive reals is therefore equivalent to these intervals chaining across
one multiplicative period, which reduces to

    (a*b <= c^2 and a^2 <= b)  or  (a^2 <= c and b <= c^2).

This corrects the bare a*b < c^2 test, which admits families such as
(a, c, b) = (3, 4, 4) whose quotient closure provably misses (4/3, 3):
brute force at any bound finds nothing there, and the interval analysis
shows why.  classify() therefore only ever reports dense-with-powers when
approximate() can actually deliver arbitrarily good approximations, and
not-dense exactly when gap certificates exist (a^2*b > c^2 follows).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .certificates import GapCertificate
from .errors import (
    CertificationError,
    NoElementWithinEpsilonError,
    ParameterError,
)
from .exact import ceil_div_frac, floor_div_frac, ilog, nearest_int
from .regions import Interval
from .sets import DigitPrefixSet

DigitPrefixFamily = DigitPrefixSet


class Classification(enum.Enum):
    DENSE_WITH_POWERS = "dense-with-powers"
    NOT_DENSE = "not-dense"
    INDETERMINATE = "indeterminate"


def classify(family: DigitPrefixFamily) -> Classification:
    """Density dichotomy for B = A union powers of b.

    The two buckets are both constructively backed: dense families admit
    approximate() at every target and tolerance, and every other family
    satisfies a^2*b > c^2, so gap_certificate() yields verifiable gaps for
    the power-free family A.  The indeterminate bucket is retained for
    interface stability but is provably unreachable under this test.
    """
    a, c, b = family.a, family.c, family.b
    dense = (a * b <= c * c and a * a <= b) or (a * a <= c and b <= c * c)
    if dense:
        return Classification.DENSE_WITH_POWERS
    # not dense implies a^2*b > c^2: if a*b > c^2 then a^2*b >= a*b > c^2;
    # otherwise a^2 > b >= c forces a^2*b >= (b+1)*b > b^2 >= c^2.
    assert a * a * b > c * c
    return Classification.NOT_DENSE


@dataclass(frozen=True)
class ApproxResult:
    numerator: int
    denominator: int
    value: Fraction
    achieved_error: Fraction


@dataclass(frozen=True)
class _RegionSpec:
    """One closed interval of the quotient closure, with the window shapes
    that realize it: each side is either a digit window at level w (+shift)
    or the single power b^w (+shift)."""

    lo: Fraction
    hi: Fraction
    num_is_window: bool
    den_is_window: bool
    shift: int  # numerator level minus denominator level


def _closure_regions(family: DigitPrefixFamily, u: int) -> list[_RegionSpec]:
    a, c, b = family.a, family.c, family.b
    bu = Fraction(b) ** u
    return [
        _RegionSpec(Fraction(a, c) * bu, Fraction(c, a) * bu, True, True, u),
        _RegionSpec(a * bu, c * bu, True, False, u),
        _RegionSpec(bu / c, bu / a, False, True, u),
    ]


def nearest_reachable(family: DigitPrefixFamily, xi: Fraction) -> tuple[Fraction, Fraction, _RegionSpec]:
    """Exact distance from xi to the closure of R(B), with the closest point
    and the region realizing it.  Scales u within 4 of log_b(xi) suffice:
    every region at scale u lies inside [b^(u-1), b^(u+1)], and b^k itself
    is always reachable, so farther scales cannot improve on |xi - b^k|."""
    xi = Fraction(xi)
    if xi <= 0:
        raise ParameterError("targets must be positive")
    k0 = ilog(xi, family.b)
    best = None
    for u in range(k0 - 4, k0 + 5):
        for spec in _closure_regions(family, u):
            point = min(max(xi, spec.lo), spec.hi)
            dist = abs(xi - point)
            key = (dist, spec.lo)
            if best is None or key < best[0]:
                best = (key, point, spec)
    assert best is not None
    return best[0][0], best[1], best[2]


def _window_bounds(family: DigitPrefixFamily, is_window: bool, level: int) -> tuple[int, int]:
    a, c, b = family.a, family.c, family.b
    if is_window:
        return a * b**level, c * b**level - 1
    return b**level, b**level


def _best_in_region(
    family: DigitPrefixFamily,
    spec: _RegionSpec,
    target: Fraction,
    xi: Fraction,
    eps: Fraction,
) -> ApproxResult | None:
    """Search the region's window pair at growing scale for x/y with
    |xi - x/y| < eps.  Candidate denominators are the window ends and the
    projections of the numerator-window ends through the target."""
    b = family.b
    w = max(0, -spec.shift)
    for _ in range(96):
        n_lo, n_hi = _window_bounds(family, spec.num_is_window, w + spec.shift)
        d_lo, d_hi = _window_bounds(family, spec.den_is_window, w)
        cands = {d_lo, d_hi}
        if target > 0:
            cands.add(min(max(ceil_div_frac(Fraction(n_lo) / target), d_lo), d_hi))
            cands.add(min(max(floor_div_frac(Fraction(n_hi) / target), d_lo), d_hi))
        best: ApproxResult | None = None
        for y in sorted(cands):
            x = min(max(nearest_int(target * y), n_lo), n_hi)
            value = Fraction(x, y)
            err = abs(xi - value)
            if best is None or err < best.achieved_error:
                best = ApproxResult(x, y, value, err)
        assert best is not None
        if best.achieved_error < eps:
            return best
        w += 1
    return None


def approximate(family: DigitPrefixFamily, xi: Fraction, eps: Fraction) -> ApproxResult:
    """An element of R(B) within eps of xi, both parts passing membership.

    Works at any target whose distance to the quotient closure is below
    eps; in particular it always succeeds for dense-classified families.
    When the target sits inside a certified closure gap at distance >= eps,
    the search refuses with the exact distance rather than looping: that
    situation is a provable impossibility, not a missing search budget.
    """
    if not family.include_powers:
        raise ParameterError("approximation runs over the family with powers")
    xi, eps = Fraction(xi), Fraction(eps)
    if xi <= 0:
        raise ParameterError("target must be positive")
    if eps <= 0:
        raise ParameterError("epsilon must be positive")
    cls = classify(family)
    a, c, b = family.a, family.c, family.b
    if cls is not Classification.DENSE_WITH_POWERS and a * b > c * c:
        raise CertificationError(
            f"family (a={a}, c={c}, b={b}) has a*b > c^2 and is not dense; "
            "use gap_certificate on the power-free family instead"
        )
    dist, point, spec = nearest_reachable(family, xi)
    if dist >= eps:
        raise NoElementWithinEpsilonError(
            f"no quotient of family (a={a}, c={c}, b={b}) lies within "
            f"{eps} of {xi}: the quotient closure misses the target by "
            f"exactly {dist}",
            nearest=point,
            distance=dist,
        )
    result = _best_in_region(family, spec, point, xi, eps)
    if result is None:  # target on a region edge; neighboring scales reach it
        k0 = ilog(xi, b)
        tried = []
        for u in range(k0 - 4, k0 + 5):
            for other in _closure_regions(family, u):
                gap = max(other.lo - xi, xi - other.hi, Fraction(0))
                tried.append((gap, other))
        for gap, other in sorted(tried, key=lambda t: (t[0], t[1].lo)):
            if gap >= eps:
                break
            t = min(max(xi, other.lo), other.hi)
            result = _best_in_region(family, other, t, xi, eps)
            if result is not None:
                break
    assert result is not None, "construction failed inside a covered region"
    assert family.member(result.numerator) and family.member(result.denominator)
    assert result.achieved_error < eps
    return result


def gap_certificate(family: DigitPrefixFamily, j: int) -> GapCertificate:
    """The open interval (c/a * b^j, a/c * b^(j+1)) missed by R(A) for the
    power-free family when a^2*b > c^2 strictly.  Every quotient x/y of
    window elements satisfies a/c * b^l < x/y < c/a * b^l for the level
    difference l, and the strict inequality c/a < (a/c)*b keeps consecutive
    ratio bands disjoint; the constructor checks it exactly."""
    if family.include_powers:
        raise ParameterError(
            "gap certificates quantify over the power-free family; "
            "construct it with include_powers=False"
        )
    a, c, b = family.a, family.c, family.b
    if a * a * b <= c * c:
        raise CertificationError(
            f"family (a={a}, c={c}, b={b}) has a^2*b <= c^2: no gap is claimed"
        )
    lo = Fraction(c, a) * Fraction(b) ** j
    hi = Fraction(a, c) * Fraction(b) ** (j + 1)
    assert lo < hi  # equivalent to a^2*b > c^2
    return GapCertificate(
        region=Interval(lo, hi),
        source="theorem1-part2",
        params={"a": a, "c": c, "b": b, "j": j},
        verified_to_bound=0,
    )
