"""Exception hierarchy shared by all modules."""


class XPError(Exception):
    """Base class for errors raised by xpzeros."""

    kind = "error"


class DomainError(XPError, ValueError):
    kind = "domain"


class PoleError(DomainError):
    kind = "pole"


class RangeError(DomainError):
    kind = "range"


class AccuracyError(XPError, ArithmeticError):
    """The requested tolerance cannot be met in double precision."""

    kind = "accuracy"


class ConvergenceError(XPError, ArithmeticError):
    kind = "convergence"


class StepSizeError(ConvergenceError):
    kind = "step-size"


class GridResolutionError(XPError, ArithmeticError):
    kind = "grid-resolution"


class TailTruncationError(XPError, ArithmeticError):
    kind = "tail-truncation"


class NoSolutionError(XPError, ValueError):
    kind = "no-solution"


class UnsupportedCharacterError(XPError, ValueError):
    kind = "unsupported-character"


class MissedRootWarning(UserWarning):
    """Root count disagrees with the smooth level-count prediction."""
