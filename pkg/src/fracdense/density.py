"""Density estimation and the constructive u/v window search.

Density positivity is a caller-supplied hypothesis: finite data cannot
certify that a limit exists, so `gamma_hat` is recorded, never inferred.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .certificates import GapCertificate
from .errors import (
    BoundedSearchExhausted,
    DegenerateTargetError,
    DomainError,
    ParameterError,
)
from .exact import fmt_rational
from .primes import is_prime, prime_count
from .regions import Interval
from .sets import ExplicitSet, nearest_member


@dataclass(frozen=True)
class DensityEstimate:
    set_kind: str
    mode: str  # "natural" | "lower" | "relative"
    points: tuple[int, ...]
    counts: tuple[int, ...]
    ratios: tuple[Fraction, ...]
    running_min: tuple[Fraction, ...] | None  # populated in lower mode


def density_estimate(s, mode: str, points: list[int]) -> DensityEstimate:
    """Exact counts |A(X)| and ratios against X (natural/lower) or against
    pi(X) (relative; requires the set to contain only primes)."""
    if mode not in ("natural", "lower", "relative"):
        raise ParameterError(f"unknown density mode {mode!r}")
    if not points or any(p <= 0 for p in points):
        raise ParameterError("sample points must be positive")
    if list(points) != sorted(set(points)):
        raise ParameterError("sample points must be strictly increasing")
    top = points[-1]
    els = s.enumerate_upto(top)
    if mode == "relative":
        for e in els.tolist():
            if not is_prime(int(e)):
                raise DomainError(
                    f"relative density needs a prime subset; {int(e)} is composite"
                )
    counts = [int(np.searchsorted(els, x, side="right")) for x in points]
    if any(c2 < c1 for c1, c2 in zip(counts, counts[1:])):
        raise AssertionError("counts must be non-decreasing")
    if mode == "relative":
        ratios = [Fraction(c, prime_count(x)) for c, x in zip(counts, points)]
    else:
        ratios = [Fraction(c, x) for c, x in zip(counts, points)]
    running = None
    if mode == "lower":
        acc = []
        cur = None
        for r in ratios:
            cur = r if cur is None else min(cur, r)
            acc.append(cur)
        running = tuple(acc)
    return DensityEstimate(
        set_kind=s.kind,
        mode=mode,
        points=tuple(points),
        counts=tuple(counts),
        ratios=tuple(ratios),
        running_min=running,
    )


@dataclass(frozen=True)
class WindowRatio:
    u: int
    v: int
    ratio: Fraction
    gamma_hat: Fraction


def ratio_in_window(
    u_set,
    v_set,
    window_lo: Fraction,
    window_hi: Fraction,
    gamma_hat: Fraction,
    bound: int = 10**6,
) -> WindowRatio:
    """u in U, v in V with lo < u/v <= hi, by the counting scheme: walk v
    upward until the window (lo*v, hi*v] captures a U element.  gamma_hat
    is the caller's density hypothesis; it is recorded, not verified.
    Exhausting the bound is reported as such, never as a refutation."""
    a, b = Fraction(window_lo), Fraction(window_hi)
    if not 0 < a < b:
        raise ParameterError(f"window must satisfy 0 < lo < hi, got ({a}, {b}]")
    if Fraction(gamma_hat) <= 0:
        raise ParameterError("gamma_hat must be a positive density hypothesis")
    us = u_set.enumerate_upto(bound)
    vs = v_set.enumerate_upto(bound)
    if len(us) == 0 or len(vs) == 0:
        raise DomainError("window search needs nonempty enumerations")
    us_obj = us.astype(object)
    for v in vs.tolist():
        v = int(v)
        if v == 0:
            continue
        if a * v > bound:
            break  # window lies entirely above the enumeration bound
        # u > a*v  and  u <= b*v, exactly
        lo_excl = (a.numerator * v) // a.denominator  # u must exceed this
        hi_incl = min((b.numerator * v) // b.denominator, bound)
        i = int(np.searchsorted(us_obj, lo_excl, side="right"))
        if i < len(us) and int(us[i]) <= hi_incl:
            u = int(us[i])
            r = Fraction(u, v)
            if a < r <= b:
                return WindowRatio(u=u, v=v, ratio=r, gamma_hat=Fraction(gamma_hat))
    raise BoundedSearchExhausted(
        f"no u/v in ({fmt_rational(a)}, {fmt_rational(b)}] with elements "
        f"below bound {bound}; not a density refutation"
    )


def finite_denominator_gap(u_set, v_set: ExplicitSet, target: Fraction) -> GapCertificate:
    """An open interval around `target` provably free of U/V for finite V:
    radius = min over v of dist(target*v, nearest U member)/v.  A target
    exactly of the form u/v admits no such neighborhood and is rejected."""
    t = Fraction(target)
    if t <= 0:
        raise ParameterError("target must be positive")
    if not isinstance(v_set, ExplicitSet):
        raise ParameterError("denominator set must be finite and explicit")
    vs = [v for v in v_set.values if v > 0]
    if not vs:
        raise DomainError("denominator set has no positive members")
    radius: Fraction | None = None
    for v in vs:
        x = t * v
        m = nearest_member(u_set, x)
        dist = abs(x - m)
        if dist == 0:
            raise DegenerateTargetError(
                f"target {fmt_rational(t)} equals {m}/{v}; no punctured "
                "neighborhood exists"
            )
        r = dist / v
        if radius is None or r < radius:
            radius = r
    assert radius is not None and radius > 0
    params = {
        "u_kind": u_set.kind,
        "v_values": list(v_set.values),
        "target": fmt_rational(t),
    }
    return GapCertificate(
        region=Interval(t - radius, t + radius),
        source="finite-V",
        params=params,
        verified_to_bound=0,
    )
