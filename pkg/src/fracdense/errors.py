"""Exception hierarchy shared by all fracdense modules.

Exit-code mapping for the CLI: ParameterError/DomainError families map to
exit 1, BoundedSearchExhausted to exit 2.
"""


class FracdenseError(Exception):
    """Base class for all library errors."""


class ParameterError(FracdenseError):
    """Invalid argument values (bad family parameters, malformed input)."""


class DomainError(FracdenseError):
    """Structurally valid input outside an operation's domain."""


class CertificationError(FracdenseError):
    """A construction was refused because the opposite certificate applies."""


class NoElementWithinEpsilonError(FracdenseError):
    """No quotient lies within epsilon of the target; carries the certified
    distance to the nearest reachable point."""

    def __init__(self, message, nearest=None, distance=None):
        super().__init__(message)
        self.nearest = nearest
        self.distance = distance


class DegenerateTargetError(DomainError):
    """Target is exactly representable, so no punctured neighborhood exists."""


class BoundedSearchExhausted(FracdenseError):
    """Search hit its configured bound without success; not a refutation."""


class CapacityError(ParameterError):
    """Requested range exceeds the configured sieve ceiling."""


class BandEmptyError(FracdenseError):
    """A norm band contains no prime-element norm (constant too small)."""

    def __init__(self, message, n=None):
        super().__init__(message)
        self.n = n


class SerializationError(FracdenseError):
    """Malformed certificate text; carries the offending position."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position
