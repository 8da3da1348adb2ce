"""Exception hierarchy.

Parse-time problems derive from :class:`ParseError` and carry the offending
line number; everything else is a :class:`DomainError`.
"""


class TangleColorError(Exception):
    """Base class for every error raised by this package."""

    category = "error"


class ParseError(TangleColorError, ValueError):
    category = "parse"

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        self.message = message
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NotationSyntaxError(ParseError):
    category = "syntax"


class LabelArityError(ParseError):
    category = "label-arity"


class MissingBoundaryError(ParseError):
    category = "missing-boundary"


class OddBoundaryError(ParseError):
    category = "odd-boundary"


class EmptyWordError(ParseError):
    category = "empty-word"


class DomainError(TangleColorError, ValueError):
    category = "domain"


class NotPrimeError(DomainError):
    category = "not-prime"


class BadModulusError(DomainError):
    category = "bad-modulus"


class ArityError(DomainError):
    """A 2-string tangle was required."""

    category = "arity"


class ArityMismatchError(DomainError):
    category = "arity-mismatch"


class DisconnectedError(DomainError):
    category = "disconnected"


class EmptyDiagramError(DomainError):
    category = "empty-diagram"


class NotClosedError(DomainError):
    category = "not-closed"


class TooLargeError(DomainError):
    category = "too-large"
