"""Quotient-set core: enumeration, quotients, coverage, brute-force oracle."""
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fracdense.core import brute_force_gap_check, coverage_check, quotient_set
from fracdense.errors import DomainError, ParameterError
from fracdense.regions import Interval
from fracdense.sets import (
    APIntegerSet,
    APPrimeSet,
    DigitPrefixSet,
    ExplicitSet,
)
from fracdense.primes import APFamily

from .oracles import (
    naive_best_error,
    naive_digit_prefix_members,
    naive_interval_hit,
    naive_quotient_set,
)


class TestEnumerate:
    def test_digit_prefix_base10(self):
        s = DigitPrefixSet(1, 2, 10)
        assert s.enumerate_upto(25).tolist() == [1] + list(range(10, 20))

    def test_explicit_sorts_and_dedups(self):
        s = ExplicitSet((3, 1, 2, 2))
        assert s.enumerate_upto(10).tolist() == [1, 2, 3]

    def test_digit_prefix_2_3_10(self):
        expected = naive_digit_prefix_members(2, 3, 10, powers=False, bound=30)
        s = DigitPrefixSet(2, 3, 10)
        got = s.enumerate_upto(30).tolist()
        assert got == expected == [2] + list(range(20, 30))

    def test_invalid_params_rejected(self):
        with pytest.raises(ParameterError):
            DigitPrefixSet(3, 3, 10)
        with pytest.raises(ParameterError):
            DigitPrefixSet(2, 3, 1)

    @pytest.mark.parametrize("powers", [False, True])
    @pytest.mark.parametrize("a,c,b", [(1, 2, 10), (2, 3, 4), (3, 5, 7), (1, 2, 2)])
    def test_membership_matches_enumeration(self, a, c, b, powers):
        s = DigitPrefixSet(a, c, b, include_powers=powers)
        els = set(s.enumerate_upto(500).tolist())
        for n in range(1, 501):
            assert (n in els) == s.member(n)

    def test_ap_primes_membership(self):
        s = APPrimeSet(APFamily(1, 4))
        els = set(s.enumerate_upto(300).tolist())
        for n in range(1, 301):
            assert (n in els) == s.member(n)


class TestQuotientSet:
    def test_tiny(self):
        s = ExplicitSet((1, 2))
        assert quotient_set(s, s, 10) == [F(1, 2), F(1), F(2)]

    def test_dedup_exhaustive(self):
        s = ExplicitSet((1, 10, 11))
        got = quotient_set(s, s, 100)
        assert got == naive_quotient_set([1, 10, 11], [1, 10, 11])
        assert len(got) == 7

    def test_reduction(self):
        assert quotient_set(ExplicitSet((2,)), ExplicitSet((4,)), 10) == [F(1, 2)]

    def test_zero_denominator_rejected(self):
        with pytest.raises(DomainError):
            quotient_set(ExplicitSet((1,)), ExplicitSet((0, 2)), 10)

    @given(
        st.lists(st.integers(1, 200), min_size=1, max_size=12),
        st.lists(st.integers(1, 200), min_size=1, max_size=12),
    )
    def test_matches_naive(self, us, vs):
        got = quotient_set(ExplicitSet(tuple(us)), ExplicitSet(tuple(vs)), 200)
        assert got == naive_quotient_set(sorted(set(us)), sorted(set(vs)))


class TestRatioInvariants:
    @given(st.integers(-10**12, 10**12), st.integers(1, 10**12), st.integers(1, 10**6))
    def test_reduction_idempotence(self, n, d, k):
        assert F(k * n, k * d) == F(n, d)

    @given(st.fractions(), st.fractions())
    def test_ordering_is_cross_multiplication(self, p, q):
        lhs = p < q
        rhs = p.numerator * q.denominator < q.numerator * p.denominator
        assert lhs == rhs


class TestCoverage:
    def test_naturals_cover_halves(self):
        s = APIntegerSet(0, 1)
        rep = coverage_check(s, s, [F(1, 2), F(3, 2), F(5, 2)], F(1, 100), 100)
        assert rep.coverage_fraction == 1

    def test_digit_prefix_gap_target(self):
        s = DigitPrefixSet(1, 2, 10)
        for bound in (100, 1000, 10**4):
            rep = coverage_check(s, s, [F(3)], F(2, 5), bound)
            assert rep.coverage_fraction == 0

    def test_singleton(self):
        s = ExplicitSet((1,))
        rep = coverage_check(s, s, [F(1)], F(1, 10), 10)
        assert rep.coverage_fraction == 1
        assert rep.best[0] == 0

    def test_best_error_matches_naive(self):
        s = DigitPrefixSet(1, 2, 10)
        els = s.enumerate_upto(200).tolist()
        for target in (F(3), F(17, 10), F(1, 3)):
            rep = coverage_check(s, s, [target], F(1, 100), 200)
            assert rep.best[0] == naive_best_error(els, els, target)

    def test_monotone_in_bound(self):
        s = DigitPrefixSet(1, 2, 3, include_powers=True)
        grid = [F(k, 7) for k in range(1, 30)]
        fractions = []
        for bound in (10, 100, 1000, 10**4):
            rep = coverage_check(s, s, grid, F(1, 50), bound)
            fractions.append(rep.coverage_fraction)
        assert fractions == sorted(fractions)

    def test_empty_grid_rejected(self):
        s = ExplicitSet((1,))
        with pytest.raises(ParameterError):
            coverage_check(s, s, [], F(1, 10), 10)


class TestBruteForce:
    def test_digit_prefix_certified_gap(self):
        s = DigitPrefixSet(1, 2, 10)
        res = brute_force_gap_check(s, s, Interval(F(2), F(5)), 10**4)
        assert not res.hit
        els = s.enumerate_upto(10**4).tolist()
        assert naive_interval_hit(els, els, F(2), F(5)) is None

    def test_naturals_hit(self):
        s = APIntegerSet(0, 1)
        res = brute_force_gap_check(s, s, Interval(F(2), F(5)), 100)
        assert res.hit
        u, v = res.witness
        assert F(2) < F(u, v) < F(5)

    def test_witness_soundness_randomized(self):
        rng = np.random.default_rng(1234)
        for _ in range(50):
            us = sorted(set(rng.integers(1, 500, size=8).tolist()))
            vs = sorted(set(rng.integers(1, 500, size=8).tolist()))
            lo = F(int(rng.integers(1, 40)), int(rng.integers(1, 12)))
            hi = lo + F(int(rng.integers(1, 30)), int(rng.integers(1, 6)))
            su, sv = ExplicitSet(tuple(us)), ExplicitSet(tuple(vs))
            res = brute_force_gap_check(su, sv, Interval(lo, hi), 500)
            naive = naive_interval_hit(us, vs, lo, hi)
            assert res.hit == (naive is not None)
            if res.hit:
                u, v = res.witness
                assert su.member(u) and sv.member(v)
                assert lo < F(u, v) < hi
