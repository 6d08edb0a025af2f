"""Exception hierarchy shared by every module."""


class DualSpaceError(Exception):
    """Base class for all errors raised by dualspace."""


class FieldMismatch(DualSpaceError, TypeError):
    pass


class DimensionMismatch(DualSpaceError, ValueError):
    pass


class DivisionByZero(DualSpaceError, ZeroDivisionError):
    pass


class IndexOutOfRange(DualSpaceError, IndexError):
    pass


class BadTruncation(DualSpaceError, ValueError):
    pass


class IncompatibleThread(DualSpaceError, ValueError):
    pass


class TruncationTooSmall(DualSpaceError, ValueError):
    pass


class PreconditionViolated(DualSpaceError, ValueError):
    pass


class InvariantViolation(DualSpaceError, ValueError):
    """A value or file breaks a representation invariant (stored zero, duplicate, unsorted...)."""


class ParseError(DualSpaceError, ValueError):
    """Malformed text input; carries the 1-based line number."""

    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
