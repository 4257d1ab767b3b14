"""Exception hierarchy shared by every module."""


class SymbError(Exception):
    """Base class for all errors raised by :mod:`symb`."""


class NonPositiveEntry(SymbError, ValueError):
    pass


class DimensionMismatch(SymbError, ValueError):
    pass


class OutOfInterval(SymbError, ValueError):
    pass


class NonTermination(SymbError, RuntimeError):
    """A loop guard was hit. The folding loops provably terminate, so this
    points at a numerical problem rather than a legitimate input."""


class NotCoprime(SymbError, ValueError):
    pass


class InvalidK(SymbError, ValueError):
    pass


class CapTooSmall(SymbError, ValueError):
    pass


class RatioExceedsOne(SymbError, ValueError):
    pass


class UnsupportedKind(SymbError, ValueError):
    pass


class InvalidCohomologyClass(SymbError, ValueError):
    pass


class NoSignChange(SymbError, ValueError):
    pass
