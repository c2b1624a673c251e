"""Density estimates and the window search."""
import math
from fractions import Fraction as F

import pytest

from fracdense.certificates import verify
from fracdense.core import coverage_check
from fracdense.density import (
    density_estimate,
    finite_denominator_gap,
    ratio_in_window,
)
from fracdense.errors import (
    BoundedSearchExhausted,
    DegenerateTargetError,
    DomainError,
    ParameterError,
)
from fracdense.primes import APFamily, euler_phi
from fracdense.sets import APIntegerSet, APPrimeSet, ExplicitSet


class TestDensityEstimate:
    def test_evens(self):
        est = density_estimate(APIntegerSet(0, 2), "natural", [1000])
        assert est.ratios == (F(1, 2),)

    def test_multiples_of_three(self):
        est = density_estimate(APIntegerSet(0, 3), "natural", [999])
        assert est.ratios == (F(1, 3),)

    def test_relative_density_class(self):
        est = density_estimate(APPrimeSet(APFamily(1, 4)), "relative", [10**4])
        assert abs(est.ratios[0] - F(1, 2)) < F(1, 20)

    def test_relative_rejects_composites(self):
        with pytest.raises(DomainError, match="4"):
            density_estimate(ExplicitSet((2, 3, 4)), "relative", [10])

    def test_counts_nondecreasing_and_lower_mode(self):
        est = density_estimate(APIntegerSet(1, 3), "lower", [10, 100, 1000])
        assert list(est.counts) == sorted(est.counts)
        assert est.running_min is not None
        assert all(m <= r for m, r in zip(est.running_min, est.ratios))

    def test_bad_points(self):
        with pytest.raises(ParameterError):
            density_estimate(APIntegerSet(0, 2), "natural", [100, 50])

    def test_residue_classes_near_reciprocal_phi(self):
        # relative densities of coprime classes approach 1/phi(m)
        for m in range(2, 13):
            for a in range(1, m):
                if math.gcd(a, m) != 1:
                    continue
                est = density_estimate(APPrimeSet(APFamily(a, m)), "relative", [10**5])
                assert abs(est.ratios[0] - F(1, euler_phi(m))) < F(1, 20), (a, m)


class TestRatioInWindow:
    def test_evens_over_ten(self):
        res = ratio_in_window(APIntegerSet(0, 2), ExplicitSet((10,)), F(1), F(2), F(1, 2))
        assert (res.u, res.v) == (12, 10)
        assert res.ratio == F(6, 5)

    def test_naturals(self):
        res = ratio_in_window(APIntegerSet(0, 1), ExplicitSet((1,)), F(2), F(3), F(1))
        assert res.ratio == F(3)

    def test_prime_classes(self):
        res = ratio_in_window(
            APPrimeSet(APFamily(1, 4)), APPrimeSet(APFamily(3, 4)), F(1), F(2), F(1, 10)
        )
        assert res.u % 4 == 1 and res.v % 4 == 3
        assert F(1) < res.ratio <= F(2)

    def test_window_exactness_randomized(self):
        import random

        rng = random.Random(5)
        for _ in range(40):
            m = rng.randint(1, 6)
            r = rng.randint(0, m - 1)
            u_set = APIntegerSet(r, m)
            v_set = ExplicitSet(tuple(sorted(rng.sample(range(1, 400), 4))))
            lo = F(rng.randint(1, 50), rng.randint(1, 10))
            hi = lo + F(rng.randint(1, 20), rng.randint(1, 4))
            res = ratio_in_window(u_set, v_set, lo, hi, F(1, 10), 10**5)
            assert u_set.member(res.u) and v_set.member(res.v)
            assert lo < res.ratio <= hi

    def test_exhaustion_is_reported(self):
        with pytest.raises(BoundedSearchExhausted):
            ratio_in_window(
                ExplicitSet((1,)), ExplicitSet((1,)), F(5), F(6), F(1, 2), bound=10
            )

    def test_invalid_window(self):
        with pytest.raises(ParameterError):
            ratio_in_window(APIntegerSet(0, 2), ExplicitSet((1,)), F(2), F(2), F(1))


class TestFiniteDenominatorGap:
    def test_naturals_over_two(self):
        cert = finite_denominator_gap(APIntegerSet(0, 1), ExplicitSet((2,)), F(1, 4))
        assert (cert.region.lo, cert.region.hi) == (F(0), F(1, 2))

    def test_naturals_over_one(self):
        cert = finite_denominator_gap(APIntegerSet(0, 1), ExplicitSet((1,)), F(1, 2))
        assert cert.region.hi - cert.region.lo == F(1)  # radius 1/2

    def test_odds_over_three(self):
        cert = finite_denominator_gap(APIntegerSet(1, 2), ExplicitSet((3,)), F(2, 3))
        assert (cert.region.lo, cert.region.hi) == (F(1, 3), F(1))

    def test_degenerate_target(self):
        with pytest.raises(DegenerateTargetError):
            finite_denominator_gap(APIntegerSet(0, 1), ExplicitSet((2,)), F(3, 2))

    @pytest.mark.parametrize(
        "u,vs,t",
        [
            (APIntegerSet(0, 1), (2, 3), F(1, 5)),
            (APIntegerSet(1, 2), (3,), F(2, 3)),
            (APIntegerSet(0, 2), (5, 7), F(3, 10)),
            (APPrimeSet(APFamily(1, 4)), (4,), F(3, 2)),
        ],
    )
    def test_certificates_survive_brute_force(self, u, vs, t):
        v = ExplicitSet(vs)
        cert = finite_denominator_gap(u, v, t)
        outcome = verify(cert, u, v, 10**5)
        assert outcome.verified


class TestDensityDirection:
    def test_positive_density_over_infinite_v_covers(self):
        # a set of density 1/7 over an infinite denominator set reaches full
        # coverage on a coarse grid once the bound grows
        u = APIntegerSet(1, 7)
        v = APIntegerSet(0, 3)
        grid = [F(k, 10) for k in range(2, 100, 7)]
        fractions = []
        for bound in (100, 1000, 10**4, 10**5):
            rep = coverage_check(u, v, grid, F(1, 20), bound)
            fractions.append(rep.coverage_fraction)
        assert fractions == sorted(fractions)
        assert fractions[-1] == 1
