"""Certificate serialization, round-trip, and verification semantics."""
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from fracdense.certificates import (
    GapCertificate,
    default_sets_for,
    deserialize,
    serialize,
    verify,
)
from fracdense.digit_prefix import gap_certificate
from fracdense.errors import ParameterError, SerializationError
from fracdense.quadratic import band_gap_certificates
from fracdense.regions import Annulus, Interval
from fracdense.sets import DigitPrefixSet


def interval_cert(lo, hi, j=0):
    return GapCertificate(
        region=Interval(F(lo), F(hi)),
        source="theorem1-part2",
        params={"a": 1, "c": 2, "b": 10, "j": j},
        verified_to_bound=0,
    )


class TestRoundTrip:
    def test_interval(self):
        cert = interval_cert(2, 5)
        assert deserialize(serialize(cert)) == cert

    def test_annulus(self):
        cert = band_gap_certificates(1, "C", range(0, 1))[0]
        assert deserialize(serialize(cert)) == cert

    def test_negative_level_fractions(self):
        cert = band_gap_certificates(2, "B", range(-3, -2))[0]
        line = serialize(cert)
        assert "/" in line
        assert deserialize(line) == cert

    @given(
        st.fractions(min_value=F(1, 1000), max_value=F(1000)),
        st.fractions(min_value=F(1, 1000), max_value=F(1000)),
        st.integers(0, 10**6),
    )
    def test_roundtrip_property(self, lo, hi, bound):
        if lo == hi:
            return
        lo, hi = min(lo, hi), max(lo, hi)
        cert = GapCertificate(
            region=Annulus(lo, hi),
            source="band-A",
            params={"d": 1, "band": "A", "l": 0},
            verified_to_bound=bound,
        )
        assert deserialize(serialize(cert)) == cert

    def test_verified_field_preserved(self):
        cert = interval_cert(2, 5)
        fam = DigitPrefixSet(1, 2, 10)
        outcome = verify(cert, fam, fam, 1000)
        line = serialize(outcome.certificate)
        assert "verified=1000" in line
        assert deserialize(line).verified_to_bound == 1000


class TestParsing:
    def test_truncated(self):
        with pytest.raises(SerializationError):
            deserialize("gapcert v1 theorem1-part2 region=interval lo=2")

    def test_garbage_prefix_position(self):
        with pytest.raises(SerializationError) as exc:
            deserialize("gapcerX nonsense")
        assert exc.value.position == 6  # first divergent character

    def test_inverted_bounds(self):
        with pytest.raises(SerializationError):
            deserialize(
                'gapcert v1 band-A region=annulus lo=5 hi=2 params={} verified=0'
            )

    def test_unknown_source(self):
        with pytest.raises(ParameterError):
            deserialize(
                'gapcert v1 unheard-of region=interval lo=1 hi=2 params={} verified=0'
            )

    def test_bad_params_json(self):
        with pytest.raises(SerializationError):
            deserialize(
                'gapcert v1 band-A region=annulus lo=1 hi=2 params={"x":} verified=0'
            )


class TestVerification:
    def test_monotone_bound(self):
        fam = DigitPrefixSet(1, 2, 10)
        cert = interval_cert(2, 5)
        first = verify(cert, fam, fam, 10**4)
        assert first.verified
        with pytest.raises(ParameterError):
            verify(first.certificate, fam, fam, 100)
        again = verify(first.certificate, fam, fam, 10**5)
        assert again.verified

    def test_passes_at_lower_bounds_too(self):
        fam = DigitPrefixSet(1, 2, 10)
        for bound in (10, 100, 1000, 10**4):
            assert verify(interval_cert(2, 5), fam, fam, bound).verified

    def test_default_sets_reconstruction(self):
        cert = gap_certificate(DigitPrefixSet(1, 2, 10), 0)
        numer, denom = default_sets_for(cert)
        assert verify(cert, numer, denom, 10**4).verified
        band = band_gap_certificates(1, "C", range(0, 1))[0]
        numer, denom = default_sets_for(band)
        assert verify(band, numer, denom, 10**4).verified

    def test_refutation_reports_witness(self):
        fam = DigitPrefixSet(1, 2, 10)
        outcome = verify(interval_cert(1, 2), fam, fam, 10**4)
        assert not outcome.verified
        assert outcome.witness_ratio is not None
        assert F(1) < outcome.witness_ratio < F(2)
