"""
Exception hierarchy for ptnfa.

Services raise these; the command-line layer maps every PtnfaError to
exit code 2.
"""
from typing import Any, Optional


class PtnfaError(Exception):
    """Base class of all errors raised by the library."""


class AutomatonInputError(PtnfaError, ValueError):
    """Unknown state or letter, name clash, malformed formula or alphabet."""


class DocumentParseError(AutomatonInputError):
    """
    A document could not be parsed.

    Attributes:
        line: 1-based line of the offending input, when known.
        column: 1-based column, when known.
        field: Dotted path of the offending field, when known.
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        field: Optional[str] = None
    ):
        self.line = line
        self.column = column
        self.field = field

        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if field:
            location.append(f"field '{field}'")

        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)


class PreconditionError(PtnfaError):
    """An operation was applied outside the domain it is defined on."""


class ResourceExceededError(PtnfaError):
    """
    A configured search budget was exhausted.

    Attributes:
        budget: The limit that applied.
        observed: The size that exceeded it.
    """

    def __init__(self, message: str, budget: int, observed: int):
        self.budget = budget
        self.observed = observed
        super().__init__(f"{message} (budget {budget}, reached {observed})")


class NotPiecewiseTestableError(PtnfaError):
    """
    The language is not piecewise testable.

    Attributes:
        verdict: The negative verdict with its witness.
    """

    def __init__(self, message: str, verdict: Any = None):
        self.verdict = verdict
        super().__init__(message)


class InvariantViolationError(PtnfaError):
    """Two computations that must agree did not."""
