"""Exception types shared across the package."""


class KronstabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPartition(KronstabError, ValueError):
    """Input sequence is not a weakly decreasing list of non-negative integers."""


class NotPaddable(KronstabError, ValueError):
    """Requested total is too small to prepend a first row to the core."""


class SizeMismatch(KronstabError, ValueError):
    """Operands that must partition the same integer do not."""


class DegreeTooLarge(KronstabError):
    """Requested symmetric group degree exceeds the configured cap."""


class NotStabilized(KronstabError):
    """Stable-limit probe values disagree; the probe point is below the onset."""


class StoreCorrupt(KronstabError):
    """A persisted coefficient record failed validation."""
