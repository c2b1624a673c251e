"""Exact rational helpers.

`Ratio` is an alias for `fractions.Fraction`: arbitrary-precision integer
numerator, positive denominator, canonical reduced form, exact
cross-multiplication ordering.  All comparisons in the library go through
rational (or pure integer) arithmetic; floats appear only in reports.
"""
from __future__ import annotations

import math
from fractions import Fraction

Ratio = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact rational.  Floats are rejected."""
    from .errors import ParameterError

    s = text.strip()
    if not s:
        raise ParameterError("empty rational literal")
    if any(ch in s for ch in ".eE"):
        raise ParameterError(
            f"float literal {text!r} rejected; pass an exact rational like 'p/q'"
        )
    try:
        if "/" in s:
            p, q = s.split("/", 1)
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"cannot parse rational {text!r}: {exc}") from exc


def fmt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def floor_div_frac(q: Fraction) -> int:
    return q.numerator // q.denominator


def ceil_div_frac(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def nearest_int(q: Fraction) -> int:
    """Nearest integer to q; ties round up.  Exact."""
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


def ilog(value: Fraction, base: int) -> int:
    """Largest k with base**k <= value, for value > 0 and integer base >= 2."""
    if value <= 0:
        raise ValueError("ilog needs a positive value")
    k = 0
    if value >= 1:
        while base ** (k + 1) <= value:
            k += 1
        return k
    while Fraction(1, base ** (-k + 1)) > value:
        k -= 1
    # now base**(k-1) <= value is not guaranteed; fix up by direct scan
    while Fraction(base) ** k > value:
        k -= 1
    return k


def isqrt_floor_ratio(num: int, den: int) -> int:
    """floor(sqrt(num/den)) for nonnegative num, positive den.  Exact."""
    if num < 0 or den <= 0:
        raise ValueError("isqrt_floor_ratio needs num >= 0, den > 0")
    r = math.isqrt(num // den)
    while (r + 1) * (r + 1) * den <= num:
        r += 1
    while r * r * den > num:
        r -= 1
    return r
