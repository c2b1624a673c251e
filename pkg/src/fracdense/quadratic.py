"""Arithmetic in Z[sqrt(-d)] and the complex-plane constructions: ideal
lattice enumeration, the norm-band three-partition with its gap annuli,
prime-element selection in geometrically growing norm bands, the
away-from-zero rounding witnesses, and empirical two-partition coverage.

Complex comparisons never touch floats: annulus membership depends only on
the exact integer norm ratio, and distances to rational targets expressed
in ring coordinates (t1 + t2*sqrt(-d) with rational t1, t2) have rational
squared modulus.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .certificates import GapCertificate
from .core import CoverageReport, GapCheckResult
from .errors import (
    BandEmptyError,
    DomainError,
    ParameterError,
)
from .exact import ceil_div_frac, floor_div_frac, fmt_rational
from .primes import _boolean_sieve, primes_upto
from .regions import Annulus


def _is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def away_round(x) -> int:
    """Away-from-zero rounding: ceiling for positive, floor for negative,
    zero at zero (so the map is odd and fixes integers)."""
    x = Fraction(x)
    if x > 0:
        return ceil_div_frac(x)
    if x < 0:
        return floor_div_frac(x)
    return 0


@dataclass(frozen=True)
class QuadInt:
    """x + y*sqrt(-d) with integer coordinates; d squarefree positive."""

    x: int
    y: int
    d: int

    def __post_init__(self):
        if not _is_squarefree(self.d):
            raise ParameterError(f"d must be squarefree and positive, got {self.d}")

    @property
    def norm(self) -> int:
        return self.x * self.x + self.d * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.x + other.x, self.y + other.y, self.d)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.x - other.x, self.y - other.y, self.d)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(
            self.x * other.x - self.d * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.d,
        )

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.x, -self.y, self.d)

    def conj(self) -> "QuadInt":
        return QuadInt(self.x, -self.y, self.d)

    def _check(self, other: "QuadInt"):
        if self.d != other.d:
            raise ParameterError(f"mixed rings: d={self.d} vs d={other.d}")

    def associates(self) -> tuple["QuadInt", ...]:
        if self.d == 1:  # units 1, i, -1, -i
            return (
                self,
                QuadInt(-self.y, self.x, 1),
                -self,
                QuadInt(self.y, -self.x, 1),
            )
        return (self, -self)

    def canonical(self) -> "QuadInt":
        """Associate-class representative: prefer x > 0, then y >= 0, then
        least y (then least x) — deterministic per class."""
        return min(
            self.associates(),
            key=lambda z: (0 if z.x > 0 else 1, 0 if z.y >= 0 else 1, z.y, z.x),
        )

    def to_rat(self) -> "QuadRat":
        return QuadRat(Fraction(self.x), Fraction(self.y), self.d)

    def __str__(self):
        return f"{self.x}{self.y:+}*sqrt(-{self.d})"


@dataclass(frozen=True)
class QuadRat:
    """x + y*sqrt(-d) with rational coordinates: the exact ambient points
    the rounding witnesses quantify over."""

    x: Fraction
    y: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if not _is_squarefree(self.d):
            raise ParameterError(f"d must be squarefree and positive, got {self.d}")

    @property
    def norm(self) -> Fraction:
        return self.x * self.x + self.d * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def _check(self, other: "QuadRat"):
        if self.d != other.d:
            raise ParameterError(f"mixed rings: d={self.d} vs d={other.d}")

    def __add__(self, other: "QuadRat") -> "QuadRat":
        self._check(other)
        return QuadRat(self.x + other.x, self.y + other.y, self.d)

    def __sub__(self, other: "QuadRat") -> "QuadRat":
        self._check(other)
        return QuadRat(self.x - other.x, self.y - other.y, self.d)

    def __mul__(self, other: "QuadRat") -> "QuadRat":
        self._check(other)
        return QuadRat(
            self.x * other.x - self.d * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.d,
        )

    def __truediv__(self, other: "QuadRat") -> "QuadRat":
        self._check(other)
        n = other.norm
        if n == 0:
            raise ParameterError("division by zero ring element")
        return QuadRat(
            (self.x * other.x + self.d * self.y * other.y) / n,
            (self.y * other.x - self.x * other.y) / n,
            self.d,
        )


def _extgcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = _extgcd(b, a % b)
    return (g, t, s - (a // b) * t)


@dataclass(frozen=True)
class Ideal:
    """Two-generator ideal of Z[sqrt(-d)], stored with its Hermite normal
    form basis (p, 0), (q, r) over the coordinate lattice: membership and
    enumeration are exact lattice arithmetic."""

    gen1: QuadInt
    gen2: QuadInt

    def __post_init__(self):
        if self.gen1.d != self.gen2.d:
            raise ParameterError("ideal generators live in different rings")
        if self.gen1.is_zero() and self.gen2.is_zero():
            raise ParameterError("ideal generators must not both be zero")

    @property
    def d(self) -> int:
        return self.gen1.d

    @cached_property
    def hnf(self) -> tuple[int, int, int]:
        """(p, q, r): lattice basis (p, 0), (q, r) with p, r > 0, 0 <= q < p."""
        d = self.d
        vecs = []
        for g in (self.gen1, self.gen2):
            if not g.is_zero():
                vecs.append((g.x, g.y))
                vecs.append((-d * g.y, g.x))  # sqrt(-d) * g
        # combine to a single vector carrying gcd of y-components
        rx, ry = vecs[0]
        for vx, vy in vecs[1:]:
            if vy == 0:
                continue
            if ry == 0:
                rx, ry = vx, vy
                continue
            g, s, t = _extgcd(ry, vy)
            rx, ry = s * rx + t * vx, g
        xs = [vx - (vy // ry) * rx for vx, vy in vecs] if ry else [vx for vx, _ in vecs]
        p = 0
        for xv in xs:
            p = math.gcd(p, abs(xv))
        if ry < 0:
            rx, ry = -rx, -ry
        assert p > 0 and ry > 0
        q = rx % p
        return (p, q, ry)

    def member(self, z: QuadInt) -> bool:
        if z.d != self.d:
            return False
        p, q, r = self.hnf
        if z.y % r != 0:
            return False
        return (z.x - (z.y // r) * q) % p == 0

    def elements_upto(self, norm_bound: int, include_zero: bool = True) -> list[QuadInt]:
        """All ideal elements of norm <= bound, sorted by (norm, x, y).
        Zero is an ideal element and is included by default, flagged only by
        its norm; quotient machinery must exclude it from denominators."""
        xs, ys, norms = self.element_arrays(norm_bound)
        out = [
            QuadInt(int(x), int(y), self.d) for x, y in zip(xs.tolist(), ys.tolist())
        ]
        if not include_zero:
            out = [z for z in out if not z.is_zero()]
        return out

    def element_arrays(self, norm_bound: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if norm_bound < 0:
            raise ParameterError("norm bound must be nonnegative")
        p, q, r = self.hnf
        d = self.d
        xs_parts, ys_parts = [], []
        t_max = math.isqrt(norm_bound // (d * r * r)) if norm_bound else 0
        for t in range(-t_max, t_max + 1):
            y = r * t
            remainder = norm_bound - d * y * y
            if remainder < 0:
                continue
            x_abs = math.isqrt(remainder)
            x0 = q * t
            lo = -((x_abs + x0) // p)  # least s with x0 + p*s >= -x_abs
            hi = (x_abs - x0) // p
            if lo > hi:
                continue
            s = np.arange(lo, hi + 1, dtype=np.int64)
            xs_parts.append(x0 + p * s)
            ys_parts.append(np.full(len(s), y, dtype=np.int64))
        if not xs_parts:
            empty = np.empty(0, dtype=np.int64)
            return empty, empty, empty
        xs = np.concatenate(xs_parts)
        ys = np.concatenate(ys_parts)
        norms = xs * xs + d * ys * ys
        keep = norms <= norm_bound
        xs, ys, norms = xs[keep], ys[keep], norms[keep]
        order = np.lexsort((ys, xs, norms))
        return xs[order], ys[order], norms[order]


def whole_ring(d: int) -> Ideal:
    return Ideal(QuadInt(1, 0, d), QuadInt(0, 0, d))


# ---------------------------------------------------------------------------
# norm bands


BAND_POSITIONS = {"A": (1, 2), "B": (2, 3), "C": (3, 5)}


def band_of_norm(n: int) -> str | None:
    """A/B/C bucket of a positive norm by its position within [5^k, 5^(k+1));
    None for n < 1."""
    if n < 1:
        return None
    power = 1
    while power * 5 <= n:
        power *= 5
    if n < 2 * power:
        return "A"
    if n < 3 * power:
        return "B"
    return "C"


def classify_band(z: QuadInt) -> str | None:
    return band_of_norm(z.norm)


def band_gap_annulus(band: str, level: int) -> Annulus:
    """The open annulus between consecutive ratio bands of one class: norms
    of class members sit in [lo*5^k, hi*5^k), so squared moduli of class
    quotients sit in (lo/hi * 5^u, hi/lo * 5^u); the complementary annuli
    (hi/lo * 5^l, lo/hi * 5^(l+1)) are certified gaps."""
    if band not in BAND_POSITIONS:
        raise ParameterError(f"band must be A, B or C, got {band!r}")
    lo, hi = BAND_POSITIONS[band]
    five = Fraction(5) ** level
    return Annulus(Fraction(hi, lo) * five, Fraction(lo, hi) * five * 5)


def band_gap_certificates(d: int, band: str, levels: range) -> list[GapCertificate]:
    if not _is_squarefree(d):
        raise ParameterError(f"d must be squarefree and positive, got {d}")
    out = []
    for level in levels:
        out.append(
            GapCertificate(
                region=band_gap_annulus(band, level),
                source=f"band-{band}",
                params={"d": d, "band": band, "l": level},
                verified_to_bound=0,
            )
        )
    return out


# ---------------------------------------------------------------------------
# descriptors over the complex side


@lru_cache(maxsize=32)
def _ring_norms_cached(d: int, bound: int) -> tuple[np.ndarray, np.ndarray]:
    """Sorted unique norms x^2 + d*y^2 <= bound with multiplicities counted
    over the full ring (all four/two associate quadrants)."""
    xmax = math.isqrt(bound)
    ymax = math.isqrt(bound // d)
    x = np.arange(0, xmax + 1, dtype=np.int64)
    y = np.arange(0, ymax + 1, dtype=np.int64)
    grid = x[:, None] ** 2 + d * (y[None, :] ** 2)
    # multiplicity over signed coordinates: 2 per nonzero coordinate
    mult = np.ones(grid.shape, dtype=np.int64)
    mult[1:, :] *= 2
    mult[:, 1:] *= 2
    mask = grid <= bound
    norms = grid[mask].ravel()
    mults = mult[mask].ravel()
    order = np.argsort(norms, kind="stable")
    norms, mults = norms[order], mults[order]
    uniq, starts = np.unique(norms, return_index=True)
    counts = np.add.reduceat(mults, starts)
    return uniq, counts


class _ComplexSet:
    """Shared surface for complex-side descriptors: ring-coordinate element
    arrays, norm multisets, and elements recoverable from a norm."""

    d: int

    def elements_upto(self, bound: int) -> list[QuadInt]:
        raise NotImplementedError

    def norms_upto(self, bound: int) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def elements_with_norm(self, n: int, bound: int, limit: int = 2) -> list[QuadInt]:
        out = []
        for z in self.elements_upto(bound):
            if z.norm == n:
                out.append(z)
                if len(out) >= limit:
                    break
        return out


@dataclass(frozen=True)
class QuadIdealSet(_ComplexSet):
    """Nonzero elements of an ideal (whole ring by default), by norm."""

    d: int
    ideal: Ideal | None = None

    kind = "quad-ideal"

    def _ideal(self) -> Ideal:
        return self.ideal if self.ideal is not None else whole_ring(self.d)

    def elements_upto(self, bound: int) -> list[QuadInt]:
        return self._ideal().elements_upto(bound, include_zero=False)

    def element_arrays(self, bound: int):
        xs, ys, norms = self._ideal().element_arrays(bound)
        keep = norms > 0
        return xs[keep], ys[keep], norms[keep]

    def norms_upto(self, bound: int) -> tuple[np.ndarray, np.ndarray]:
        if self.ideal is None:
            uniq, counts = _ring_norms_cached(self.d, bound)
            keep = uniq > 0
            return uniq[keep], counts[keep]
        _, _, norms = self._ideal().element_arrays(bound)
        norms = norms[norms > 0]
        uniq, counts = np.unique(norms, return_counts=True)
        return uniq, counts

    def member(self, z: QuadInt) -> bool:
        return not z.is_zero() and self._ideal().member(z)


@dataclass(frozen=True)
class NormBandSet(_ComplexSet):
    """Elements of one norm band (A, B or C), over an ideal or the ring."""

    d: int
    band: str
    ideal: Ideal | None = None

    kind = "norm-band"

    def __post_init__(self):
        if self.band not in BAND_POSITIONS:
            raise ParameterError(f"band must be A, B or C, got {self.band!r}")

    def _band_mask(self, norms: np.ndarray) -> np.ndarray:
        lo, hi = BAND_POSITIONS[self.band]
        mask = np.zeros(len(norms), dtype=bool)
        power = 1
        top = int(norms[-1]) if len(norms) else 0
        while power <= top:
            mask |= (norms >= lo * power) & (norms < hi * power)
            power *= 5
        return mask

    def elements_upto(self, bound: int) -> list[QuadInt]:
        base = QuadIdealSet(self.d, self.ideal)
        return [z for z in base.elements_upto(bound) if band_of_norm(z.norm) == self.band]

    def element_arrays(self, bound: int):
        xs, ys, norms = QuadIdealSet(self.d, self.ideal).element_arrays(bound)
        keep = self._band_mask(norms)
        return xs[keep], ys[keep], norms[keep]

    def norms_upto(self, bound: int) -> tuple[np.ndarray, np.ndarray]:
        uniq, counts = QuadIdealSet(self.d, self.ideal).norms_upto(bound)
        keep = self._band_mask(uniq)
        return uniq[keep], counts[keep]

    def member(self, z: QuadInt) -> bool:
        return (
            QuadIdealSet(self.d, self.ideal).member(z)
            and band_of_norm(z.norm) == self.band
        )


# ---------------------------------------------------------------------------
# prime elements


def _prime_mask(values: np.ndarray) -> np.ndarray:
    top = int(values.max()) if len(values) else 2
    sieve = _boolean_sieve(top)
    return sieve[values]


@lru_cache(maxsize=16)
def quad_prime_elements(d: int, bound: int) -> tuple[QuadInt, ...]:
    """Prime elements of norm <= bound, one canonical representative per
    associate class, sorted by (norm, x, y).  For d in {1, 2} the ring is a
    PID: an element is prime iff its norm is a rational prime (split or
    ramified) or the square of an inert rational prime; inertness for these
    two rings is the classical congruence condition."""
    if d not in (1, 2):
        raise ParameterError(
            f"prime-element machinery supports d = 1 or 2 only, got {d}"
        )
    out: list[QuadInt] = []
    xmax = math.isqrt(bound)
    for x in range(1, xmax + 1):
        rem = bound - x * x
        ymax = math.isqrt(rem // d) if rem >= 0 else -1
        ys = range(0, ymax + 1) if d == 1 else range(-ymax, ymax + 1)
        for y in ys:
            n = x * x + d * y * y
            if n >= 2 and _boolean_sieve(n)[n]:
                out.append(QuadInt(x, y, d))
    if d == 2:  # pure sqrt(-2) multiples: canonical reps with x = 0, y > 0
        ymax = math.isqrt(bound // 2)
        for y in range(1, ymax + 1):
            n = 2 * y * y
            if _boolean_sieve(n)[n]:
                out.append(QuadInt(0, y, 2))
    inert_residues = {1: (3,), 2: (5, 7)}[d]
    modulus = 4 if d == 1 else 8
    for p in primes_upto(math.isqrt(bound)).tolist():
        if p % modulus in inert_residues:
            out.append(QuadInt(int(p), 0, d))
    out.sort(key=lambda z: (z.norm, z.x, z.y))
    return tuple(out)


@lru_cache(maxsize=16)
def quad_prime_norms(d: int, bound: int) -> np.ndarray:
    norms = sorted({z.norm for z in quad_prime_elements(d, bound)})
    return np.array(norms, dtype=np.int64)


@dataclass(frozen=True)
class ProbeResult:
    ok: bool
    counterexample: Fraction | None
    grid_points: int


def bertrand_probe(d: int, bertrand: Fraction, x_lo, x_hi) -> ProbeResult:
    """Empirical check that every interval [x, B*x], x on the geometric grid
    {x_lo * B^k}, contains a prime-element norm.  Evidence only: a pass
    never claims B bounds the true constant globally."""
    B = Fraction(bertrand)
    if B <= 1:
        raise ParameterError(f"Bertrand parameter must exceed 1, got {B}")
    x_lo, x_hi = Fraction(x_lo), Fraction(x_hi)
    if not 0 < x_lo <= x_hi:
        raise ParameterError("need 0 < x_lo <= x_hi")
    norms = quad_prime_norms(d, ceil_div_frac(B * x_hi) + 1)
    x = x_lo
    points = 0
    while x <= x_hi:
        points += 1
        lo_i = ceil_div_frac(x)
        hi_i = floor_div_frac(B * x)
        idx = int(np.searchsorted(norms, lo_i, side="left"))
        if idx >= len(norms) or int(norms[idx]) > hi_i:
            return ProbeResult(ok=False, counterexample=x, grid_points=points)
        x = x * B
    return ProbeResult(ok=True, counterexample=None, grid_points=points)


@dataclass(frozen=True)
class PrimeBandSelection:
    d: int
    bertrand: Fraction
    elements: tuple[QuadInt, ...]
    bands: tuple[tuple[Fraction, Fraction], ...]
    certificate: GapCertificate
    pairwise_verified: bool


def banded_prime_selection(d: int, bertrand: Fraction, n_max: int) -> PrimeBandSelection:
    """One prime element per norm band [B^(2n-1), B^(2n)], n = 1..n_max,
    choosing the least norm in each band (least (x, y) on norm ties), plus
    the annulus 1/B < |z|^2 < B that no ratio of two distinct selected
    elements can enter: consecutive bands are separated by a factor B."""
    B = Fraction(bertrand)
    if B <= 1:
        raise ParameterError(f"Bertrand parameter must exceed 1, got {B}")
    if n_max < 1:
        raise ParameterError("n_max must be >= 1")
    bound = ceil_div_frac(B ** (2 * n_max))
    norms = quad_prime_norms(d, bound)
    elements = []
    bands = []
    for n in range(1, n_max + 1):
        lo = B ** (2 * n - 1)
        hi = B ** (2 * n)
        bands.append((lo, hi))
        n_lo, n_hi = ceil_div_frac(lo), floor_div_frac(hi)
        idx = int(np.searchsorted(norms, n_lo, side="left"))
        if idx >= len(norms) or int(norms[idx]) > n_hi:
            raise BandEmptyError(
                f"band [{fmt_rational(lo)}, {fmt_rational(hi)}] (n={n}) holds "
                "no prime-element norm; the Bertrand parameter is too small",
                n=n,
            )
        target_norm = int(norms[idx])
        pick = next(z for z in quad_prime_elements(d, bound) if z.norm == target_norm)
        elements.append(pick)
    annulus = Annulus(1 / B, B)
    ok = True
    for i, zm in enumerate(elements):
        for zn in elements[i + 1 :]:
            r = Fraction(zm.norm, zn.norm)
            if annulus.lo_sq < r < annulus.hi_sq or annulus.lo_sq < 1 / r < annulus.hi_sq:
                ok = False
    cert = GapCertificate(
        region=annulus,
        source="theorem6-annulus",
        params={"d": d, "B": fmt_rational(B), "n_max": n_max},
        verified_to_bound=0,
    )
    return PrimeBandSelection(
        d=d,
        bertrand=B,
        elements=tuple(elements),
        bands=tuple(bands),
        certificate=cert,
        pairwise_verified=ok,
    )


@dataclass(frozen=True)
class QuadPrimeBandSet(_ComplexSet):
    """The selected banded prime family as an enumerable descriptor."""

    d: int
    bertrand: Fraction
    n_max: int

    kind = "quad-prime-band"

    def _selection(self) -> PrimeBandSelection:
        return banded_prime_selection(self.d, self.bertrand, self.n_max)

    def elements_upto(self, bound: int) -> list[QuadInt]:
        return [z for z in self._selection().elements if z.norm <= bound]

    def norms_upto(self, bound: int) -> tuple[np.ndarray, np.ndarray]:
        ns = [z.norm for z in self.elements_upto(bound)]
        return np.array(ns, dtype=np.int64), np.ones(len(ns), dtype=np.int64)

    def member(self, z: QuadInt) -> bool:
        return any(z == w for w in self._selection().elements)


# ---------------------------------------------------------------------------
# annulus gap oracle


def annulus_gap_check(
    numer_set, denom_set, region: Annulus, bound: int, distinct_only: bool = False
) -> GapCheckResult:
    """Does any ratio of enumerated elements have |u/v|^2 strictly inside the
    annulus?  Equivalent to an exact integer check on the norm pair.  With
    distinct_only, a same-norm hit requires two distinct elements of that
    norm (certificates over selected families quantify over distinct pairs).
    """
    n_norms, n_counts = numer_set.norms_upto(bound)
    d_norms, _ = denom_set.norms_upto(bound)
    if len(n_norms) == 0 or len(d_norms) == 0:
        raise DomainError("annulus check needs nonempty enumerations")
    p_lo, q_lo = region.lo_sq.numerator, region.lo_sq.denominator
    p_hi, q_hi = region.hi_sq.numerator, region.hi_sq.denominator
    same_sets = numer_set is denom_set or numer_set == denom_set
    lows = (p_lo * d_norms) // q_lo + 1  # n1 > lo*n2
    highs = -((-p_hi * d_norms) // q_hi) - 1  # n1 < hi*n2
    lo_idx = np.searchsorted(n_norms, lows, side="left")
    hi_idx = np.searchsorted(n_norms, highs, side="right")
    for i in np.nonzero(lo_idx < hi_idx)[0].tolist():
        n2 = int(d_norms[i])
        for j in range(int(lo_idx[i]), int(hi_idx[i])):
            n1 = int(n_norms[j])
            if not region.contains_norm_ratio(n1, n2):
                continue
            if distinct_only and same_sets and n1 == n2 and int(n_counts[j]) < 2:
                continue
            want = 2 if (distinct_only and n1 == n2 and same_sets) else 1
            us = numer_set.elements_with_norm(n1, bound, limit=want)
            vs = denom_set.elements_with_norm(n2, bound, limit=want)
            u = us[0]
            v = vs[-1] if (n1 == n2 and distinct_only and same_sets) else vs[0]
            return GapCheckResult(
                hit=True, witness=(u, v), ratio=Fraction(n1, n2), bound=bound
            )
    return GapCheckResult(hit=False, witness=None, ratio=None, bound=bound)


# ---------------------------------------------------------------------------
# rounding witnesses


@dataclass(frozen=True)
class RoundedWitnesses:
    s: QuadInt
    t: QuadInt
    t_prime: QuadInt
    defect_s_sq: Fraction  # |s - gamma/(alpha*beta)|^2
    defect_t_sq: Fraction  # |t - alpha*s|^2
    defect_tp_sq: Fraction  # |t' - beta*s|^2
    envelope_sq: Fraction  # shared exact bound on all three defects
    n0: int | None  # per-instance threshold when epsilon is supplied
    gamma_large_enough: bool | None


def _decompose(w: QuadRat, ideal: Ideal) -> tuple[QuadRat, QuadRat]:
    """w = g1*gen1 + g2*gen2 with the fixed simple choice g2 = 0 when the
    first generator is nonzero (any decomposition works after rounding)."""
    zero = QuadRat(Fraction(0), Fraction(0), w.d)
    if not ideal.gen1.is_zero():
        return w / ideal.gen1.to_rat(), zero
    return zero, w / ideal.gen2.to_rat()


def _round_combo(w: QuadRat, ideal: Ideal) -> QuadInt:
    g1, g2 = _decompose(w, ideal)
    r1 = QuadInt(away_round(g1.x), away_round(g1.y), w.d)
    r2 = QuadInt(away_round(g2.x), away_round(g2.y), w.d)
    return r1 * ideal.gen1 + r2 * ideal.gen2


def ideal_rounding_witnesses(
    gamma: QuadInt,
    alpha: QuadRat,
    beta: QuadRat,
    ideal: Ideal,
    epsilon: Fraction | None = None,
) -> RoundedWitnesses:
    """The three rounded lattice witnesses: s near gamma/(alpha*beta), t
    near alpha*s, t' near beta*s, all in the ideal by construction, with
    exact squared defects.  Each defect is at most
    2 * N(1 + sqrt(-d)) * (N(gen1) + N(gen2)): the rounding error on each
    generator coefficient has squared modulus below 1 + d, and the safe
    two-term triangle bound avoids the cancellation that can null N(a + b).
    With epsilon supplied, also the per-instance threshold n0 making the
    defect-over-norm estimates smaller than epsilon, and whether gamma
    clears it."""
    d = ideal.d
    if gamma.d != d or alpha.d != d or beta.d != d:
        raise ParameterError("gamma, alpha, beta and the ideal must share d")
    ab = alpha * beta
    if ab.is_zero():
        raise ParameterError("alpha*beta must be nonzero")
    w_s = gamma.to_rat() / ab
    s = _round_combo(w_s, ideal)
    t = _round_combo(alpha * s.to_rat(), ideal)
    t_prime = _round_combo(beta * s.to_rat(), ideal)
    defect_s = (s.to_rat() - w_s).norm
    defect_t = (t.to_rat() - alpha * s.to_rat()).norm
    defect_tp = (t_prime.to_rat() - beta * s.to_rat()).norm
    envelope = Fraction(2 * (1 + d) * (ideal.gen1.norm + ideal.gen2.norm))
    for defect in (defect_s, defect_t, defect_tp):
        assert defect <= envelope
    n0 = None
    gamma_ok = None
    if epsilon is not None:
        epsilon = Fraction(epsilon)
        if epsilon <= 0:
            raise ParameterError("epsilon must be positive")
        base = Fraction((1 + d) * (ideal.gen1 + ideal.gen2).norm)
        na, nb = alpha.norm, beta.norm
        bound1 = 3 * base * (1 + nb + na * nb)
        bound2 = 2 * base * (na + na * nb)
        n0 = floor_div_frac(max(bound1, bound2) / epsilon) + 1
        g2 = Fraction(gamma.norm)
        gamma_ok = (
            g2 > n0 * na and g2 > n0 * nb and g2 > n0 * na * nb
        )
    return RoundedWitnesses(
        s=s,
        t=t,
        t_prime=t_prime,
        defect_s_sq=defect_s,
        defect_t_sq=defect_t,
        defect_tp_sq=defect_tp,
        envelope_sq=envelope,
        n0=n0,
        gamma_large_enough=gamma_ok,
    )


# ---------------------------------------------------------------------------
# complex coverage


def _target_pair(target) -> tuple[Fraction, Fraction]:
    if isinstance(target, QuadRat):
        return target.x, target.y
    t1, t2 = target
    return Fraction(t1), Fraction(t2)


def complex_coverage(numer_set, denom_set, grid, epsilon: Fraction, bound: int) -> CoverageReport:
    """Exact epsilon-coverage of ring-coordinate rational targets by ratios
    u/v of enumerated elements.  Distances are compared via the rational
    identity |t - u/v|^2 = |t*v - u|^2 / N(v).  Per denominator the integer
    candidates u inside the epsilon-disc around t*v are enumerated
    completely, so the covered/uncovered decision is exact at this bound;
    the recorded best is the exact minimum whenever it is below epsilon
    (None means only "nothing within epsilon" was established)."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ParameterError("epsilon must be positive")
    if not grid:
        raise ParameterError("grid must be nonempty")
    d = numer_set.d
    if denom_set.d != d:
        raise ParameterError("set pair must share the ring")
    denoms = denom_set.elements_upto(bound)
    if not denoms:
        raise DomainError("denominator enumeration is empty")
    num_members = {(z.x, z.y) for z in numer_set.elements_upto(bound)}
    if not num_members:
        raise DomainError("numerator enumeration is empty")
    eps_sq = epsilon * epsilon
    best_list: list[Fraction | None] = []
    covered_list: list[bool] = []
    targets = []
    for target in grid:
        t1, t2 = _target_pair(target)
        targets.append((t1, t2))
        q = math.lcm(t1.denominator, t2.denominator)
        a1, a2 = t1.numerator * (q // t1.denominator), t2.numerator * (q // t2.denominator)
        best: Fraction | None = None
        for v in denoms:
            if v.is_zero():
                continue
            nv = v.norm
            # t*v in ring coordinates, scaled by q
            X1 = a1 * v.x - d * a2 * v.y
            X2 = a1 * v.y + a2 * v.x
            # search all integer u with |t*v - u|^2 < eps^2 * N(v):
            # (X1 - q*u1)^2 + d*(X2 - q*u2)^2 < eps^2 * q^2 * N(v)
            budget = eps_sq * q * q * nv
            if best is not None:
                budget = min(budget, best * q * q * nv)
            r1 = _int_range(X1, q, budget)
            if r1 is None:
                continue
            for u1 in r1:
                rem = budget - Fraction((X1 - q * u1) ** 2)
                if rem <= 0:
                    continue
                r2 = _int_range(X2, q, rem / d)
                if r2 is None:
                    continue
                for u2 in r2:
                    if (u1, u2) not in num_members:
                        continue
                    err_sq = Fraction(
                        (X1 - q * u1) ** 2 + d * (X2 - q * u2) ** 2, q * q * nv
                    )
                    if err_sq < eps_sq and (best is None or err_sq < best):
                        best = err_sq
            if best == 0:
                break
        best_list.append(best)
        covered_list.append(best is not None and best < eps_sq)
    return CoverageReport(
        mode="complex",
        epsilon=epsilon,
        targets=tuple(targets),
        best=tuple(best_list),
        covered=tuple(covered_list),
    )


def _int_range(X: int, q: int, budget_sq: Fraction):
    """Integers u with (X - q*u)^2 < budget_sq, i.e. u within sqrt(budget)/q
    of X/q.  None when empty."""
    if budget_sq <= 0:
        return None
    # (X - q*u)^2 < budget  <=>  |X - q*u| <= ceil(sqrt(budget)) - 1 ... use
    # exact integer square root on the rational bound.
    num, den = budget_sq.numerator, budget_sq.denominator
    # largest integer m with m^2 * den < num  (strict)
    m = math.isqrt(num // den)
    while (m + 1) * (m + 1) * den < num:
        m += 1
    while m >= 0 and m * m * den >= num:
        m -= 1
    if m < 0:
        return None
    lo = -((-(X - m)) // q)  # ceil((X - m)/q)
    hi = (X + m) // q
    if lo > hi:
        return None
    return range(lo, hi + 1)


@dataclass(frozen=True)
class PartitionReport:
    dense_side: str  # "C" | "D" | "both" | "none"
    c_report: CoverageReport
    d_report: CoverageReport
    c_size: int
    d_size: int


@dataclass(frozen=True)
class _ExplicitComplexSet(_ComplexSet):
    d: int
    elements: tuple[QuadInt, ...]

    kind = "explicit-complex"

    def elements_upto(self, bound: int) -> list[QuadInt]:
        return [z for z in self.elements if z.norm <= bound]

    def norms_upto(self, bound: int):
        ns = sorted(z.norm for z in self.elements if 0 < z.norm <= bound)
        arr = np.array(ns, dtype=np.int64)
        uniq, counts = np.unique(arr, return_counts=True)
        return uniq, counts

    def member(self, z: QuadInt) -> bool:
        return z in self.elements


def partition_coverage_check(
    ideal: Ideal,
    coloring,
    grid,
    epsilon: Fraction,
    norm_bound: int,
) -> PartitionReport:
    """Color every nonzero ideal element up to the bound with the caller's
    total rule, then run exact coverage for both quotient sets.  The report
    says which side(s) reach full coverage at this bound; it never claims
    non-density, which bounded evidence cannot show."""
    elements = ideal.elements_upto(norm_bound, include_zero=False)
    if not elements:
        raise DomainError("ideal enumeration is empty at this bound")
    c_els, d_els = [], []
    for z in elements:
        side = coloring(z)
        if side == "C":
            c_els.append(z)
        elif side == "D":
            d_els.append(z)
        else:
            raise ParameterError(
                f"coloring must return 'C' or 'D', got {side!r} for {z}"
            )
    sets = []
    for members in (c_els, d_els):
        sets.append(
            _ExplicitComplexSet(d=ideal.d, elements=tuple(sorted(
                members, key=lambda z: (z.norm, z.x, z.y)
            )))
        )
    reports = []
    for s in sets:
        if s.elements:
            reports.append(complex_coverage(s, s, grid, epsilon, norm_bound))
        else:
            reports.append(
                CoverageReport(
                    mode="complex",
                    epsilon=Fraction(epsilon),
                    targets=tuple(_target_pair(t) for t in grid),
                    best=tuple(None for _ in grid),
                    covered=tuple(False for _ in grid),
                )
            )
    c_full = reports[0].coverage_fraction == 1
    d_full = reports[1].coverage_fraction == 1
    dense_side = {
        (True, True): "both",
        (True, False): "C",
        (False, True): "D",
        (False, False): "none",
    }[(c_full, d_full)]
    return PartitionReport(
        dense_side=dense_side,
        c_report=reports[0],
        d_report=reports[1],
        c_size=len(c_els),
        d_size=len(d_els),
    )
