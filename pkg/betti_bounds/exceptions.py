"""Custom exceptions for the library and the CLI."""

from fractions import Fraction
from typing import Optional


class BettiError(Exception):
    """Base class for all application exceptions."""

    def __init__(self, message: str, original_error: Optional[Exception] = None):
        super().__init__(message)
        self.original_error = original_error


class TableValidationError(BettiError):
    """Base for raw entries that do not form a rational Betti table."""


class NegativeEntryError(TableValidationError):
    """An entry value is negative."""

    def __init__(self, i: int, j: int, value: Fraction):
        super().__init__(f"Entry ({i}, {j}) is negative: {value}")
        self.i = i
        self.j = j
        self.value = value


class BrokenChainError(TableValidationError):
    """An entry in column i > 0 has no smaller-degree entry in column i - 1."""

    def __init__(self, i: int, j: int):
        super().__init__(
            f"Entry ({i}, {j}) has no entry in column {i - 1} of degree below {j}"
        )
        self.i = i
        self.j = j


class EmptyTableError(TableValidationError):
    """The table has no nonzero entry."""

    def __init__(self):
        super().__init__("Betti table has no nonzero entries")


class DuplicateEntryError(TableValidationError):
    """The same (i, j) position was given twice."""

    def __init__(self, i: int, j: int):
        super().__init__(f"Entry ({i}, {j}) given more than once")
        self.i = i
        self.j = j


class InvalidDegreeSequenceError(BettiError):
    """Degrees are not strictly increasing or the sequence is too short."""


class NotCohenMacaulayConsistentError(BettiError):
    """A Peskine-Szpiro functional below the length does not vanish."""

    def __init__(self, l: int, value: Fraction):  # noqa: E741
        super().__init__(
            f"Peskine-Szpiro functional at l={l} is {value}, expected 0"
        )
        self.l = l
        self.value = value


class InvalidDualityDegreeError(BettiError):
    """N is smaller than d_0 + d_s."""


class DecompositionError(BettiError):
    """Base for failures of the chain decomposition and its symmetrization."""


class NotInConeError(DecompositionError):
    """The greedy remainder left the cone of Betti tables."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"Decomposition left the cone at step {step}: {reason}")
        self.step = step
        self.reason = reason


class NotDualClosedError(DecompositionError):
    """A chain term has no dual partner with the same coefficient."""


class EmptyDecompositionError(DecompositionError):
    """A decomposition without terms cannot be synthesized."""

    def __init__(self):
        super().__init__("Decomposition has no terms")


class BoundPreconditionError(BettiError):
    """Base for tables outside the domain of a bound formula."""


class NonZeroStartError(BoundPreconditionError):
    """The degree sequence does not start at 0."""


class NotDegreeZeroGeneratedError(BoundPreconditionError):
    """The table has generators in nonzero degree."""


class NotQuasiPureError(BoundPreconditionError):
    """Consecutive shift ranges interleave."""


class NotCodimThreeError(BoundPreconditionError):
    """The table length is not 3."""


class NotCyclicError(BoundPreconditionError):
    """Column 0 is not a single generator of degree 0."""


class NoSuchDegreeError(BoundPreconditionError):
    """No degree j has beta_{1,j} > beta_{2,j}."""


class UnsupportedLengthError(BoundPreconditionError):
    """The operation needs a table of length at least 1."""


class InvalidSearchRangeError(BettiError):
    """Survey range with s < 1 or max socle degree below s."""


class DocumentError(BettiError):
    """Base for malformed input documents."""


class TableSyntaxError(DocumentError):
    """A text document could not be parsed."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ConfigurationError(BettiError):
    """Critical startup configuration missing or invalid."""
