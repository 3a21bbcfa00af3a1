"""Exception types raised by the engine."""


class QTSystemError(Exception):
    """Base class for all errors raised by this package."""


class TruncationError(QTSystemError):
    """A series coefficient beyond the truncation order was requested."""


class DivisionError(QTSystemError):
    """Exact left division failed: the numerator is not divisible."""


class WindowError(QTSystemError):
    """A boundary cell fell outside every case window, or seam values disagree."""


class DominanceError(QTSystemError):
    """A monomial expected to be dominant has a negative exponent."""


class OverlapError(QTSystemError):
    """Two applicable cases of a piecewise assignment disagree."""
