"""Pairing chain terms into symmetrized pure tables, and the inverse synthesis."""

import logging
from fractions import Fraction

from betti_bounds.core.pure import dual_sequence, is_self_dual, symmetrized_pure_table
from betti_bounds.core.tables import combine_tables
from betti_bounds.decomposition.greedy import es_decompose
from betti_bounds.exceptions import EmptyDecompositionError, NotDualClosedError
from betti_bounds.models import (
    BettiTable,
    ChainDecomposition,
    DegreeSequence,
    SymmetrizedDecomposition,
    SymmetrizedTerm,
)

logger = logging.getLogger(__name__)


def symmetrize(chain: ChainDecomposition, n: int) -> SymmetrizedDecomposition:
    """Pair each chain sequence with its (s, N)-dual.

    A dual pair with common coefficient r becomes one term (d, r) keyed by the
    member met first along the chain. A self-dual sequence with coefficient r
    becomes (d, r/2), since beta_sym(d, N) = 2 * beta(d) in that case.

    Raises:
        NotDualClosedError: A dual is missing or carries another coefficient.
    """
    coefficients: dict[DegreeSequence, Fraction] = {
        term.degrees: term.coefficient for term in chain.terms
    }
    consumed: set[DegreeSequence] = set()
    terms: list[SymmetrizedTerm] = []

    for term in chain.terms:
        degrees = term.degrees
        if degrees in consumed:
            continue
        dual = dual_sequence(degrees, n)

        if dual == degrees:
            terms.append(
                SymmetrizedTerm(
                    degrees=degrees, coefficient=term.coefficient / 2, self_dual=True
                )
            )
            consumed.add(degrees)
            continue

        partner = coefficients.get(dual)
        if partner is None:
            raise NotDualClosedError(
                f"Dual {dual} of {degrees} with respect to N={n} is not in the chain"
            )
        if partner != term.coefficient:
            raise NotDualClosedError(
                f"{degrees} has coefficient {term.coefficient} "
                f"but its dual {dual} has {partner}"
            )
        terms.append(SymmetrizedTerm(degrees=degrees, coefficient=term.coefficient))
        consumed.update((degrees, dual))

    return SymmetrizedDecomposition(duality_degree=n, terms=tuple(terms))


def synthesize(decomposition: SymmetrizedDecomposition) -> BettiTable:
    """Sum of r * beta_sym(d, N) over the terms.

    Raises:
        EmptyDecompositionError: There are no terms.
        InvalidDualityDegreeError: Some term has d_0 + d_s > N.
    """
    if not decomposition.terms:
        raise EmptyDecompositionError()
    n = decomposition.duality_degree
    return combine_tables(
        (term.coefficient, symmetrized_pure_table(term.degrees, n))
        for term in decomposition.terms
    )


def decompose_self_dual(table: BettiTable) -> SymmetrizedDecomposition:
    """Symmetrized decomposition of a self-dual table, N taken from its shifts.

    Raises:
        NotDualClosedError: The table is not self-dual.
    """
    duality = is_self_dual(table)
    if not duality:
        raise NotDualClosedError("Table is not (s, N)-self-dual for N = M_s + m_0")
    logger.debug("Table is self-dual with N=%s", duality.degree)
    return symmetrize(es_decompose(table), duality.degree)
