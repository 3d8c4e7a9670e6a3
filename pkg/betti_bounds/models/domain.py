from collections.abc import Iterator
from fractions import Fraction
from typing import Annotated, Optional

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    PlainSerializer,
    RootModel,
    model_validator,
)

from betti_bounds.exceptions import (
    BrokenChainError,
    EmptyTableError,
    InvalidDegreeSequenceError,
    NegativeEntryError,
    TableValidationError,
)
from betti_bounds.utils import format_rational, parse_rational

# Exact rational accepted as Fraction, int or "p/q"; serialized as "p/q".
Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]


class DegreeSequence(RootModel[tuple[int, ...]]):
    """Strictly increasing degrees d_0 < d_1 < ... < d_s with s >= 1."""

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_increasing(self) -> "DegreeSequence":
        degrees = self.root
        if len(degrees) < 2:
            raise InvalidDegreeSequenceError(
                f"Degree sequence {degrees} must have length s >= 1"
            )
        for previous, current in zip(degrees, degrees[1:]):
            if current <= previous:
                raise InvalidDegreeSequenceError(
                    f"Degree sequence {degrees} is not strictly increasing"
                )
        return self

    @property
    def length(self) -> int:
        return len(self.root) - 1

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(self.root)

    def __getitem__(self, index: int) -> int:
        return self.root[index]

    def __len__(self) -> int:
        return len(self.root)

    def is_below(self, other: "DegreeSequence") -> bool:
        """Componentwise d_i <= d'_i for sequences of equal length."""
        return len(self.root) == len(other.root) and all(
            a <= b for a, b in zip(self.root, other.root)
        )

    def is_strictly_below(self, other: "DegreeSequence") -> bool:
        """The partial order d < d': componentwise <= and d != d'."""
        return self.is_below(other) and self.root != other.root

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.root) + ")"


class BettiTable(BaseModel):
    """Sparse rational Betti table; absent positions are zero.

    Every stored value is strictly positive and the consecutiveness axiom holds:
    a nonzero entry (i, j) with i > 0 needs some (i - 1, j') with j' < j.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: dict[tuple[int, int], Rational]

    @model_validator(mode="after")
    def check_axioms(self) -> "BettiTable":
        if not self.entries:
            raise EmptyTableError()

        lowest: dict[int, int] = {}
        for (i, j), value in self.entries.items():
            if i < 0:
                raise TableValidationError(f"Homological index {i} is negative")
            if value < 0:
                raise NegativeEntryError(i, j, value)
            if value == 0:
                raise TableValidationError(f"Entry ({i}, {j}) stores a zero")
            if i not in lowest or j < lowest[i]:
                lowest[i] = j

        for i, j in sorted(self.entries):
            if i > 0 and not (i - 1 in lowest and lowest[i - 1] < j):
                raise BrokenChainError(i, j)
        return self

    @property
    def length(self) -> int:
        """Largest homological index with a nonzero entry."""
        return max(i for i, _ in self.entries)

    def column(self, i: int) -> list[int]:
        """Sorted degrees j with a nonzero entry in column i."""
        return sorted(j for (a, j) in self.entries if a == i)

    def value(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), Fraction(0))

    @property
    def beta_zero(self) -> Fraction:
        """Total number of generators: sum of column 0."""
        return sum(
            (value for (i, _), value in self.entries.items() if i == 0), Fraction(0)
        )

    def scaled(self, factor: Fraction) -> "BettiTable":
        """Multiply every entry by a positive rational."""
        return BettiTable(
            entries={key: value * factor for key, value in self.entries.items()}
        )

    def __add__(self, other: "BettiTable") -> "BettiTable":
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries.get(key, Fraction(0)) + value
        return BettiTable(entries=entries)

    def sorted_entries(self) -> list[tuple[int, int, Fraction]]:
        return [(i, j, self.entries[(i, j)]) for i, j in sorted(self.entries)]


class ShiftProfile(BaseModel):
    """Minimal and maximal shifts of each column of a table."""

    model_config = ConfigDict(frozen=True)

    length: int
    minimal: tuple[int, ...]
    maximal: tuple[int, ...]
    half_length: int
    duality_degree: int

    @model_validator(mode="after")
    def check_shifts(self) -> "ShiftProfile":
        if len(self.minimal) != self.length + 1 or len(self.maximal) != self.length + 1:
            raise ValueError("Shift vectors must have length s + 1")
        if any(lo > hi for lo, hi in zip(self.minimal, self.maximal)):
            raise ValueError("Minimal shift exceeds maximal shift")
        if self.half_length != self.length // 2:
            raise ValueError("half_length must equal floor(s / 2)")
        return self


class SelfDuality(BaseModel):
    """Outcome of the self-duality test; truthy iff the table is self-dual."""

    model_config = ConfigDict(frozen=True)

    self_dual: bool
    degree: Optional[int] = None

    def __bool__(self) -> bool:
        return self.self_dual
