"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package errors."""


class ParseError(Error):
    """Malformed input text (term grammar, semigroup file, system file)."""


class AlgebraError(Error):
    """Structurally invalid algebraic data, e.g. a non-associative table."""


class EvalError(Error):
    """A term or word uses symbols the generator map does not cover."""


class CapError(Error):
    """A requested object exceeds a configured size cap."""


class PreconditionError(Error):
    """An operation was invoked outside its stated domain."""


class RejectedSolution(Error):
    """A candidate solution failed the verification that gates a pipeline step."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict
