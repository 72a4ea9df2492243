"""Exception types shared across the package."""


class BfuncError(Exception):
    """Base class for all package errors."""


class InputError(BfuncError):
    """Invalid user input: malformed expressions, arity mismatches, bad config."""


class ParseError(InputError):
    """Syntax error in an expression, with source position."""

    def __init__(self, message, line=1, col=0):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class ZeroLeadingTermError(InputError):
    """Leading data requested from the zero polynomial or operator."""


class ResourceLimitError(BfuncError):
    """Truncation degree exceeded its configured maximum before certification."""

    def __init__(self, message, candidate=None, n_used=None):
        super().__init__(message)
        self.candidate = candidate
        self.n_used = n_used
