"""Finite, enumerable descriptions of structured subsets of the naturals.

Every descriptor enumerates its members up to a bound (finite, sorted,
duplicate-free) and answers exact membership; enumeration and membership
always agree.  Descriptors are immutable and safe to share.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError, ParameterError
from .primes import APFamily, primes_upto


@dataclass(frozen=True)
class DigitPrefixSet:
    """Naturals n with a*b^k <= n < c*b^k for some k >= 0 (base-b numbers
    whose leading block lies in [a, c)); optionally the powers b^k too."""

    a: int
    c: int
    b: int
    include_powers: bool = False

    def __post_init__(self):
        if self.b < 2:
            raise ParameterError(f"base must be >= 2, got {self.b}")
        if not 1 <= self.a < self.c <= self.b:
            raise ParameterError(
                f"need 1 <= a < c <= b, got a={self.a} c={self.c} b={self.b}"
            )

    @property
    def kind(self) -> str:
        return "digit-prefix-with-powers" if self.include_powers else "digit-prefix"

    def windows_upto(self, bound: int):
        k = 0
        while self.a * self.b**k <= bound:
            yield self.a * self.b**k, min(self.c * self.b**k - 1, bound)
            k += 1

    def enumerate_upto(self, bound: int) -> np.ndarray:
        if bound < 1:
            raise ParameterError("element bound must be >= 1")
        chunks = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in self.windows_upto(bound)]
        if self.include_powers:
            pows = []
            p = 1
            while p <= bound:
                pows.append(p)
                p *= self.b
            chunks.append(np.array(pows, dtype=np.int64))
        if not chunks:
            return np.empty(0, dtype=np.int64)
        return np.unique(np.concatenate(chunks))

    def member(self, n: int) -> bool:
        if n < 1:
            return False
        if self.include_powers:
            p = 1
            while p < n:
                p *= self.b
            if p == n:
                return True
        scaled_a, scaled_c = self.a, self.c
        while scaled_a <= n:
            if scaled_a <= n < scaled_c:
                return True
            scaled_a *= self.b
            scaled_c *= self.b
        return False


@dataclass(frozen=True)
class APIntegerSet:
    """Naturals n >= 1 with n = residue (mod modulus)."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ParameterError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    kind = "ap-integers"

    def enumerate_upto(self, bound: int) -> np.ndarray:
        if bound < 1:
            raise ParameterError("element bound must be >= 1")
        start = self.residue if self.residue >= 1 else self.modulus
        return np.arange(start, bound + 1, self.modulus, dtype=np.int64)

    def member(self, n: int) -> bool:
        return n >= 1 and n % self.modulus == self.residue


@dataclass(frozen=True)
class APPrimeSet:
    """Primes p = residue (mod modulus); gcd(residue, modulus) = 1 enforced
    by APFamily."""

    family: APFamily

    kind = "ap-primes"

    def enumerate_upto(self, bound: int) -> np.ndarray:
        if bound < 1:
            raise ParameterError("element bound must be >= 1")
        ps = primes_upto(bound)
        return ps[ps % self.family.modulus == self.family.residue]

    def member(self, n: int) -> bool:
        return self.family.contains(n)


@dataclass(frozen=True)
class ExplicitSet:
    """A finite explicit set of positive integers."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(sorted(set(int(v) for v in self.values)))
        if any(v < 0 for v in vals):
            raise ParameterError("explicit sets hold nonnegative integers")
        object.__setattr__(self, "values", vals)

    kind = "explicit-list"

    def enumerate_upto(self, bound: int) -> np.ndarray:
        if bound < 1:
            raise ParameterError("element bound must be >= 1")
        arr = np.array(self.values, dtype=np.int64)
        return arr[arr <= bound]

    def member(self, n: int) -> bool:
        return n in self.values


IntegerSet = DigitPrefixSet | APIntegerSet | APPrimeSet | ExplicitSet


def nearest_member(s, x: Fraction, search_cap: int = 10**9) -> int:
    """The member of `s` nearest to x (> 0); ties resolve to the smaller.
    For unbounded kinds the enumeration is extended until a member above x
    is seen, so the answer is exact, not an artifact of truncation."""
    if x <= 0:
        raise DomainError("nearest_member needs a positive target")
    bound = max(2 * math.ceil(x), 16)
    while bound <= search_cap:
        els = s.enumerate_upto(bound)
        if len(els) and Fraction(int(els[-1])) > x:
            idx = int(np.searchsorted(els, math.floor(x) + 1))
            cands = [int(els[j]) for j in (idx - 1, idx) if 0 <= j < len(els)]
            return min(cands, key=lambda m: (abs(Fraction(m) - x), m))
        if isinstance(s, ExplicitSet):
            if not len(els):
                raise DomainError("explicit set is empty")
            return int(els[-1])
        bound *= 4
    raise DomainError(f"no member above {x} found below search cap {search_cap}")


def make_integer_set(kind: str, params: dict):
    """Build a descriptor from its serialized kind/params form."""
    if kind == "digit-prefix":
        return DigitPrefixSet(params["a"], params["c"], params["b"], False)
    if kind == "digit-prefix-with-powers":
        return DigitPrefixSet(params["a"], params["c"], params["b"], True)
    if kind == "ap-integers":
        return APIntegerSet(params["residue"], params["modulus"])
    if kind == "ap-primes":
        return APPrimeSet(APFamily(params["residue"], params["modulus"]))
    if kind == "explicit-list":
        return ExplicitSet(tuple(params["values"]))
    raise ParameterError(f"unknown integer set kind {kind!r}")
