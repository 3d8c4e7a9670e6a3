"""Peskine-Szpiro functionals and the multiplicity they determine."""

import logging
from fractions import Fraction
from math import factorial

from betti_bounds.exceptions import NotCohenMacaulayConsistentError
from betti_bounds.models import BettiTable

logger = logging.getLogger(__name__)


def ps_functional(table: BettiTable, l: int) -> Fraction:  # noqa: E741
    """Alternating power sum: sum over (i, j) of (-1)^i * beta_{i,j} * j^l."""
    if l < 0:
        raise ValueError(f"Exponent l must be nonnegative, got {l}")
    total = Fraction(0)
    for (i, j), value in table.entries.items():
        term = value * j**l
        total += -term if i % 2 else term
    return total


def ps_functionals(table: BettiTable) -> list[Fraction]:
    """Functionals for l = 0..s."""
    return [ps_functional(table, l) for l in range(table.length + 1)]


def first_nonvanishing_functional(table: BettiTable) -> tuple[int, Fraction] | None:
    """First l < s with a nonzero functional, or None for consistent tables."""
    for l in range(table.length):  # noqa: E741
        value = ps_functional(table, l)
        if value != 0:
            return l, value
    return None


def multiplicity(table: BettiTable, force: bool = False) -> Fraction:
    """Multiplicity (-1)^s * PS_s / s! of a Cohen-Macaulay consistent table.

    Args:
        table: The Betti table.
        force: Return the formal value even when a lower functional is nonzero.

    Raises:
        NotCohenMacaulayConsistentError: A functional with l < s does not vanish
            and force is not set.
    """
    length = table.length
    failure = first_nonvanishing_functional(table)
    if failure is not None:
        if not force:
            raise NotCohenMacaulayConsistentError(*failure)
        logger.warning(
            "Returning formal multiplicity: functional at l=%s is %s", *failure
        )
    value = ps_functional(table, length) / factorial(length)
    return -value if length % 2 else value
