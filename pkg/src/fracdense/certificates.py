"""Uniform gap-certificate representation, verification, and the canonical
line-oriented text format.

A certificate's mathematical claim ranges over all elements; the artifact
only ever checks it up to an enumeration bound, and `verified_to_bound`
records exactly how far that bounded verification has gone.  Conflating the
two is forbidden in all output text.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import ParameterError, SerializationError
from .exact import fmt_rational, parse_rational
from .regions import Annulus, Interval, Region

SOURCES = (
    "theorem1-part2",
    "finite-V",
    "band-A",
    "band-B",
    "band-C",
    "theorem6-annulus",
)


@dataclass(frozen=True)
class GapCertificate:
    region: Region
    source: str
    params: dict
    verified_to_bound: int = 0

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ParameterError(f"unknown certificate source {self.source!r}")

    def __eq__(self, other):
        if not isinstance(other, GapCertificate):
            return NotImplemented
        return (
            self.region == other.region
            and self.source == other.source
            and self.params == other.params
            and self.verified_to_bound == other.verified_to_bound
        )

    def __hash__(self):
        return hash((self.region, self.source, self.verified_to_bound))


@dataclass(frozen=True)
class VerificationOutcome:
    verified: bool
    certificate: GapCertificate  # updated bound on success, original on failure
    witness: tuple | None
    witness_ratio: Fraction | None


def verify(cert: GapCertificate, numer_set, denom_set, bound: int) -> VerificationOutcome:
    """Run the brute-force oracle against the certificate's region.  On pass
    the certificate's verified bound advances; on failure the witness ratio
    refutes the region claim at this bound."""
    from .core import brute_force_gap_check

    if bound < cert.verified_to_bound:
        raise ParameterError(
            f"bound {bound} below previously verified bound {cert.verified_to_bound}"
        )
    distinct_only = cert.source == "theorem6-annulus"
    res = brute_force_gap_check(numer_set, denom_set, cert.region, bound, distinct_only)
    if res.hit:
        return VerificationOutcome(
            verified=False, certificate=cert, witness=res.witness, witness_ratio=res.ratio
        )
    return VerificationOutcome(
        verified=True,
        certificate=replace(cert, verified_to_bound=bound),
        witness=None,
        witness_ratio=None,
    )


def default_sets_for(cert: GapCertificate):
    """The natural (numerator, denominator) set pair a certificate's claim
    quantifies over, reconstructed from its parameters."""
    from .sets import DigitPrefixSet, ExplicitSet, make_integer_set

    p = cert.params
    if cert.source == "theorem1-part2":
        s = DigitPrefixSet(p["a"], p["c"], p["b"], include_powers=False)
        return s, s
    if cert.source == "finite-V":
        u = make_integer_set(p["u_kind"], p.get("u_params", {}))
        v = ExplicitSet(tuple(p["v_values"]))
        return u, v
    if cert.source in ("band-A", "band-B", "band-C"):
        from .quadratic import NormBandSet

        s = NormBandSet(d=p["d"], band=p["band"])
        return s, s
    if cert.source == "theorem6-annulus":
        from .quadratic import QuadPrimeBandSet

        s = QuadPrimeBandSet(
            d=p["d"], bertrand=parse_rational(p["B"]), n_max=p["n_max"]
        )
        return s, s
    raise ParameterError(f"no default set pair for source {cert.source!r}")


_LINE_RE = re.compile(
    r"^gapcert v1 (?P<source>[\w\-.]+) region=(?P<rtype>interval|annulus) "
    r"lo=(?P<lo>-?\d+(?:/\d+)?) hi=(?P<hi>-?\d+(?:/\d+)?) "
    r"params=(?P<params>\{.*\}) verified=(?P<verified>\d+)$"
)


def serialize(cert: GapCertificate) -> str:
    """Canonical single-line record; endpoints as exact integer pairs."""
    if isinstance(cert.region, Interval):
        rtype, lo, hi = "interval", cert.region.lo, cert.region.hi
    elif isinstance(cert.region, Annulus):
        rtype, lo, hi = "annulus", cert.region.lo_sq, cert.region.hi_sq
    else:
        raise ParameterError(f"unsupported region {cert.region!r}")
    params = json.dumps(cert.params, sort_keys=True, separators=(",", ":"))
    return (
        f"gapcert v1 {cert.source} region={rtype} "
        f"lo={fmt_rational(lo)} hi={fmt_rational(hi)} "
        f"params={params} verified={cert.verified_to_bound}"
    )


def deserialize(text: str) -> GapCertificate:
    line = text.strip()
    m = _LINE_RE.match(line)
    if not m:
        pos = _first_mismatch(line)
        raise SerializationError(
            f"malformed certificate record near position {pos}: {line[pos:pos+20]!r}",
            position=pos,
        )
    lo = parse_rational(m.group("lo"))
    hi = parse_rational(m.group("hi"))
    if hi <= lo:
        raise SerializationError(
            f"invalid region bounds: hi={fmt_rational(hi)} <= lo={fmt_rational(lo)}",
            position=m.start("hi"),
        )
    try:
        params = json.loads(m.group("params"))
    except json.JSONDecodeError as exc:
        raise SerializationError(
            f"bad params JSON: {exc}", position=m.start("params") + exc.pos
        ) from exc
    region: Region
    if m.group("rtype") == "interval":
        region = Interval(lo, hi)
    else:
        region = Annulus(lo, hi)
    return GapCertificate(
        region=region,
        source=m.group("source"),
        params=params,
        verified_to_bound=int(m.group("verified")),
    )


def _first_mismatch(line: str) -> int:
    probe = "gapcert v1 "
    for i, (x, y) in enumerate(zip(line, probe)):
        if x != y:
            return i
    return min(len(line), len(probe))
