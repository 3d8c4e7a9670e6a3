"""Greedy decomposition of a Cohen-Macaulay table along a chain of pure tables."""

import logging
from fractions import Fraction

from betti_bounds.core.multiplicity import first_nonvanishing_functional
from betti_bounds.core.pure import pure_value
from betti_bounds.exceptions import (
    InvalidDegreeSequenceError,
    NotCohenMacaulayConsistentError,
    NotInConeError,
    TableValidationError,
    UnsupportedLengthError,
)
from betti_bounds.models import (
    BettiTable,
    ChainDecomposition,
    ChainTerm,
    DegreeSequence,
)

logger = logging.getLogger(__name__)


def _minimal_shift_sequence(
    remainder: dict[tuple[int, int], Fraction], length: int, step: int
) -> DegreeSequence:
    lowest: dict[int, int] = {}
    for i, j in remainder:
        if i > length:
            raise NotInConeError(step, f"entry ({i}, {j}) beyond length {length}")
        if i not in lowest or j < lowest[i]:
            lowest[i] = j

    missing = [i for i in range(length + 1) if i not in lowest]
    if missing:
        raise NotInConeError(step, f"column {missing[0]} emptied before the others")

    try:
        return DegreeSequence(tuple(lowest[i] for i in range(length + 1)))
    except InvalidDegreeSequenceError as e:
        raise NotInConeError(
            step, "minimal shifts are not strictly increasing"
        ) from e


def es_decompose(table: BettiTable) -> ChainDecomposition:
    """Write the table as a sum of r * beta(d) over a chain of degree sequences.

    Each step takes the minimal shifts d of the remainder, subtracts the largest
    multiple of beta(d) that keeps every entry nonnegative, and stops when the
    remainder vanishes.

    Raises:
        NotCohenMacaulayConsistentError: A functional below the length is nonzero.
        UnsupportedLengthError: The table has length 0.
        NotInConeError: The remainder stops being a Betti table.
    """
    failure = first_nonvanishing_functional(table)
    if failure is not None:
        raise NotCohenMacaulayConsistentError(*failure)

    length = table.length
    if length < 1:
        raise UnsupportedLengthError("Decomposition needs a table of length >= 1")

    remainder = dict(table.entries)
    terms: list[ChainTerm] = []
    previous: DegreeSequence | None = None
    step = 0

    while remainder:
        step += 1
        try:
            BettiTable(entries=remainder)
        except TableValidationError as e:
            raise NotInConeError(step, str(e)) from e

        degrees = _minimal_shift_sequence(remainder, length, step)
        if previous is not None and not previous.is_strictly_below(degrees):
            raise NotInConeError(
                step, f"sequence {degrees} does not follow {previous} in the chain"
            )

        pure = [pure_value(degrees, i) for i in range(length + 1)]
        coefficient = min(
            remainder[(i, d_i)] / pure[i] for i, d_i in enumerate(degrees)
        )

        for i, d_i in enumerate(degrees):
            left = remainder[(i, d_i)] - coefficient * pure[i]
            if left < 0:
                raise NotInConeError(step, f"entry ({i}, {d_i}) became {left}")
            if left == 0:
                del remainder[(i, d_i)]
            else:
                remainder[(i, d_i)] = left

        logger.debug("Step %d: %s with coefficient %s", step, degrees, coefficient)
        terms.append(ChainTerm(degrees=degrees, coefficient=coefficient))
        previous = degrees

    return ChainDecomposition(length=length, terms=tuple(terms))
