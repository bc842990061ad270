"""Exception hierarchy shared by every module."""


class TreeAvoidError(Exception):
    """Base class for all package errors."""


class ArityMismatch(TreeAvoidError, ValueError):
    pass


class ParseError(TreeAvoidError, ValueError):
    """A literal failed to parse; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None, text: str | None = None):
        self.offset = offset
        self.text = text
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class MalformedWordSet(ParseError):
    """Word set violates prefix-freeness or uses letters outside 1..m."""


class DomainError(TreeAvoidError, ValueError):
    """An operation's precondition on its input does not hold."""


class UnsupportedPattern(DomainError):
    pass


class DivergenceError(TreeAvoidError, RuntimeError):
    pass


class DegeneracyError(TreeAvoidError, RuntimeError):
    pass


class InconsistencyError(TreeAvoidError, RuntimeError):
    pass
