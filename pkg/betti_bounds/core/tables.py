"""Construction and shift invariants of rational Betti tables."""

import logging
from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from betti_bounds.exceptions import (
    DuplicateEntryError,
    EmptyTableError,
    NegativeEntryError,
    TableValidationError,
)
from betti_bounds.models import BettiTable, ShiftProfile
from betti_bounds.utils import parse_rational

logger = logging.getLogger(__name__)


def validate_table(raw_entries: Iterable[tuple[int, int, Any]]) -> BettiTable:
    """Build a table from (i, j, value) triples.

    Zero values are dropped. Values may be Fractions, ints or "p/q" strings.

    Raises:
        NegativeEntryError: A value is negative.
        BrokenChainError: The consecutiveness axiom fails.
        EmptyTableError: No nonzero value remains.
        DuplicateEntryError: A position is given twice.
    """
    entries: dict[tuple[int, int], Fraction] = {}
    seen: set[tuple[int, int]] = set()
    for i, j, raw_value in raw_entries:
        if i < 0:
            raise TableValidationError(f"Homological index {i} is negative")
        if (i, j) in seen:
            raise DuplicateEntryError(i, j)
        seen.add((i, j))
        try:
            value = parse_rational(raw_value)
        except ValueError as e:
            raise TableValidationError(str(e), original_error=e) from e
        if value < 0:
            raise NegativeEntryError(i, j, value)
        if value != 0:
            entries[(i, j)] = value

    if not entries:
        raise EmptyTableError()
    return BettiTable(entries=entries)


def combine_tables(terms: Iterable[tuple[Fraction, BettiTable]]) -> BettiTable:
    """Exact sum of r * t over (coefficient, table) pairs."""
    entries: dict[tuple[int, int], Fraction] = {}
    for coefficient, table in terms:
        for key, value in table.entries.items():
            entries[key] = entries.get(key, Fraction(0)) + coefficient * value
    return validate_table((i, j, value) for (i, j), value in entries.items())


def shifts(table: BettiTable) -> ShiftProfile:
    """Minimal and maximal shift of every column, k = floor(s/2), N = M_s + m_0."""
    length = table.length
    columns = [table.column(i) for i in range(length + 1)]
    minimal = tuple(column[0] for column in columns)
    maximal = tuple(column[-1] for column in columns)
    return ShiftProfile(
        length=length,
        minimal=minimal,
        maximal=maximal,
        half_length=length // 2,
        duality_degree=maximal[length] + minimal[0],
    )


def is_quasi_pure(table: BettiTable) -> bool:
    """m_i >= M_{i-1} for all i = 2..s."""
    profile = shifts(table)
    return all(
        profile.minimal[i] >= profile.maximal[i - 1]
        for i in range(2, profile.length + 1)
    )
