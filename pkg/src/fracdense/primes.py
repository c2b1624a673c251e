"""Prime infrastructure: sieves, primes in arithmetic progressions, the
geometric-interval search, the counting diagnostic G(x), and the two-class
prime-ratio construction.

All interval endpoints are exact rationals; a prime p belongs to
[alpha^n, alpha^(n+1)] iff the integer cross-multiplied comparisons hold.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BoundedSearchExhausted, CapacityError, ParameterError
from .exact import ceil_div_frac, floor_div_frac, isqrt_floor_ratio

DEFAULT_SIEVE_CEILING = 10**8

_sieve_cache: dict[str, np.ndarray] = {}


def _boolean_sieve(n: int) -> np.ndarray:
    """Prime indicator array of length n+1.  Cached and grown monotonically."""
    cached = _sieve_cache.get("sieve")
    if cached is not None and len(cached) > n:
        return cached
    size = max(n + 1, 2 * len(cached) if cached is not None else 0, 1 << 16)
    sieve = np.ones(size, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(size - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    _sieve_cache["sieve"] = sieve
    return sieve


def primes_upto(n: int) -> np.ndarray:
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = _boolean_sieve(n)
    return np.nonzero(sieve[: n + 1])[0].astype(np.int64)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 1 << 22:
        return bool(_boolean_sieve(n)[n])
    r = math.isqrt(n)
    for p in primes_upto(r):
        if n % int(p) == 0:
            return False
    return True


def segment_primes(lo: int, hi: int, ceiling: int = DEFAULT_SIEVE_CEILING) -> np.ndarray:
    """All primes in [lo, hi] via a segmented sieve."""
    if hi > ceiling:
        raise CapacityError(f"upper bound {hi} exceeds sieve ceiling {ceiling}")
    lo = max(lo, 2)
    if hi < lo:
        return np.empty(0, dtype=np.int64)
    if hi < 1 << 22:
        base = primes_upto(hi)
        return base[base >= lo]
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in primes_upto(math.isqrt(hi)):
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        seg[start - lo :: p] = False
    return (np.nonzero(seg)[0] + lo).astype(np.int64)


def prime_count(x: int) -> int:
    return len(primes_upto(x))


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


@dataclass(frozen=True)
class APFamily:
    """Primes congruent to `residue` modulo `modulus`; requires gcd = 1,
    otherwise the family is finite and rejected."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ParameterError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)
        if math.gcd(self.residue, self.modulus) != 1:
            raise ParameterError(
                f"gcd({self.residue}, {self.modulus}) != 1: "
                "class contains at most one prime"
            )

    def contains(self, p: int) -> bool:
        return is_prime(p) and p % self.modulus == self.residue


def primes_in_interval(
    family: APFamily, lo: int, hi: int, ceiling: int = DEFAULT_SIEVE_CEILING
) -> list[int]:
    """Sorted primes p = residue (mod modulus) with lo <= p <= hi."""
    if not 2 <= lo <= hi:
        raise ParameterError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    ps = segment_primes(lo, hi, ceiling)
    return [int(p) for p in ps[ps % family.modulus == family.residue]]


def class_prime_count(family: APFamily, x: int) -> int:
    """pi(a, m, x): primes p <= x in the class."""
    ps = primes_upto(x)
    return int((ps % family.modulus == family.residue).sum())


@dataclass(frozen=True)
class GeometricIntervalResult:
    n: int
    lo: Fraction
    hi: Fraction
    prime: int | None  # least class prime in [alpha^n, alpha^(n+1)], or None


def primes_in_geometric_intervals(
    family: APFamily,
    alpha: Fraction,
    n_range: range,
    ceiling: int = DEFAULT_SIEVE_CEILING,
) -> list[GeometricIntervalResult]:
    """For each n, the least class prime in [alpha^n, alpha^(n+1)] with exact
    rational endpoint comparisons, or an explicit empty marker."""
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise ParameterError(f"alpha must exceed 1, got {alpha}")
    out = []
    for n in n_range:
        lo = alpha**n
        hi = alpha ** (n + 1)
        if hi > ceiling:
            raise CapacityError(
                f"alpha^{n + 1} = {float(hi):.4g} exceeds sieve ceiling {ceiling}"
            )
        p_lo = max(2, ceil_div_frac(lo))
        p_hi = floor_div_frac(hi)
        found = None
        if p_lo <= p_hi:
            hits = primes_in_interval(family, p_lo, p_hi, ceiling)
            if hits:
                found = hits[0]
        out.append(GeometricIntervalResult(n=n, lo=lo, hi=hi, prime=found))
    return out


@dataclass(frozen=True)
class CountDiagnostic:
    """G(x) = phi(m) * pi(a,m,x) * log(x) / x at one evaluation point.

    log(x) is the IEEE-754 double of math.log converted to an exact rational,
    so G itself is an exact rational of that stated approximation.  L is the
    base-alpha logarithm of G, reported as a float (illustrative only).
    """

    x: int
    class_count: int
    G: Fraction
    L: float | None


def prime_count_diagnostic(
    family: APFamily, x_points: list[int], alpha: Fraction | None = None
) -> list[CountDiagnostic]:
    out = []
    phi = euler_phi(family.modulus)
    for x in x_points:
        if x <= 1:
            raise ParameterError(f"evaluation points must exceed 1, got {x}")
        cnt = class_prime_count(family, x)
        G = Fraction(phi * cnt) * Fraction(math.log(x)) / x
        L = None
        if alpha is not None and G > 0:
            L = math.log(float(G)) / math.log(float(alpha))
        out.append(CountDiagnostic(x=x, class_count=cnt, G=G, L=L))
    return out


def _pick_alpha(ratio: Fraction) -> Fraction:
    """Largest alpha = 1 + k/2^t (t = 4, 5, ...) with alpha^2 < ratio and
    k >= 1.  Dyadic steps below 1/16 are needed once ratio < (17/16)^2."""
    if ratio <= 1:
        raise ParameterError("window ratio must exceed 1")
    t = 4
    while True:
        scale = 1 << t
        # largest k with (scale + k)^2 * ratio.den < ratio.num * scale^2
        target_num = ratio.numerator * scale * scale
        k = isqrt_floor_ratio(target_num, ratio.denominator) - scale
        while (scale + k) ** 2 * ratio.denominator >= target_num:
            k -= 1
        if k >= 1:
            return Fraction(scale + k, scale)
        t += 1
        if t > 64:
            raise ParameterError(f"window ratio {ratio} too close to 1")


@dataclass(frozen=True)
class PrimeRatioResult:
    p: int
    q: int
    ratio: Fraction
    alpha: Fraction
    exponent: int
    q_tries: int


def prime_ratio_in_window(
    fam_p: APFamily,
    fam_q: APFamily,
    window_lo: Fraction,
    window_hi: Fraction,
    ceiling: int = DEFAULT_SIEVE_CEILING,
) -> PrimeRatioResult:
    """Primes p, q in the two classes with window_lo <= p/q <= window_hi.

    Picks a rational alpha with 1 < alpha^2 < hi/lo, then for ascending
    class primes q finds the least integer exponent l with alpha^l >= lo*q;
    length > 2 of the logarithmic window guarantees alpha^(l+1) <= hi*q, so
    any class prime in [alpha^l, alpha^(l+1)] gives p/q in the window.  The
    interval may be prime-free for small q; retry with the next q.  The
    existence threshold is non-effective, so exhaustion of the sieve ceiling
    raises rather than refutes.
    """
    c, d = Fraction(window_lo), Fraction(window_hi)
    if not 0 < c < d:
        raise ParameterError(f"window must satisfy 0 < lo < hi, got [{c}, {d}]")
    alpha = _pick_alpha(d / c)
    assert alpha * alpha < d / c

    q_iter_lo = 2
    tries = 0
    power = Fraction(1)
    exponent = 0
    while True:
        seg_hi = min(ceiling, q_iter_lo * 64)
        qs = primes_in_interval(fam_q, q_iter_lo, seg_hi, ceiling)
        for q in qs:
            tries += 1
            if d * q > ceiling:
                raise BoundedSearchExhausted(
                    f"denominator {q} pushes the numerator window past the "
                    f"sieve ceiling {ceiling} after {tries} attempts"
                )
            target = c * q
            while power < target:
                power *= alpha
                exponent += 1
            while power / alpha >= target:
                power /= alpha
                exponent -= 1
            hi_power = power * alpha
            assert power >= c * q and hi_power <= d * q
            p_lo = max(2, ceil_div_frac(power))
            p_hi = floor_div_frac(hi_power)
            if p_lo <= p_hi:
                hits = primes_in_interval(fam_p, p_lo, p_hi, ceiling)
                if hits:
                    p = hits[0]
                    ratio = Fraction(p, q)
                    assert c <= ratio <= d
                    return PrimeRatioResult(
                        p=p, q=q, ratio=ratio, alpha=alpha,
                        exponent=exponent, q_tries=tries,
                    )
        if seg_hi >= ceiling:
            raise BoundedSearchExhausted(
                f"no denominator below sieve ceiling {ceiling} succeeded "
                f"({tries} attempts)"
            )
        q_iter_lo = seg_hi + 1
