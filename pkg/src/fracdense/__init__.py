"""fracdense: quotient-set density experiments with exact arithmetic and
machine-verifiable gap certificates."""

from .certificates import GapCertificate, deserialize, serialize, verify
from .core import CoverageReport, brute_force_gap_check, coverage_check, quotient_set
from .density import density_estimate, finite_denominator_gap, ratio_in_window
from .digit_prefix import (
    ApproxResult,
    Classification,
    DigitPrefixFamily,
    approximate,
    classify,
    gap_certificate,
)
from .exact import Ratio, parse_rational
from .primes import (
    APFamily,
    prime_count_diagnostic,
    prime_ratio_in_window,
    primes_in_geometric_intervals,
    primes_in_interval,
)
from .quadratic import (
    Ideal,
    QuadInt,
    QuadRat,
    away_round,
    band_gap_certificates,
    banded_prime_selection,
    bertrand_probe,
    classify_band,
    ideal_rounding_witnesses,
    partition_coverage_check,
    quad_prime_elements,
)
from .regions import Annulus, Interval
from .sets import APIntegerSet, APPrimeSet, DigitPrefixSet, ExplicitSet

__version__ = "0.1.0"
