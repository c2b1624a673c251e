"""Open regions that gap certificates claim to be free of quotients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi) on the positive real line, exact endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ParameterError(f"empty interval: lo={self.lo} >= hi={self.hi}")

    def contains(self, q: Fraction) -> bool:
        return self.lo < q < self.hi


@dataclass(frozen=True)
class Annulus:
    """Open annulus in the complex plane given by squared-modulus bounds:
    lo_sq < |z|^2 < hi_sq.  A quotient u/v of ring elements lies inside
    iff lo_sq < N(u)/N(v) < hi_sq, which is an exact rational comparison."""

    lo_sq: Fraction
    hi_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo_sq", Fraction(self.lo_sq))
        object.__setattr__(self, "hi_sq", Fraction(self.hi_sq))
        if self.lo_sq < 0:
            raise ParameterError("annulus lower bound must be nonnegative")
        if not self.lo_sq < self.hi_sq:
            raise ParameterError(
                f"empty annulus: lo_sq={self.lo_sq} >= hi_sq={self.hi_sq}"
            )

    def contains_norm_ratio(self, num_norm: int, den_norm: int) -> bool:
        if den_norm <= 0:
            raise ParameterError("denominator norm must be positive")
        r = Fraction(num_norm, den_norm)
        return self.lo_sq < r < self.hi_sq


Region = Interval | Annulus
