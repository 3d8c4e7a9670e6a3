import random
from fractions import Fraction

from betti_bounds.bounds.enumeration import check_search_range, enumerate_sequences
from betti_bounds.core.pure import dual_sequence
from betti_bounds.models import (
    DegreeSequence,
    SymmetrizedDecomposition,
    SymmetrizedTerm,
)


def random_symmetrized_decomposition(
    rng: random.Random,
    length: int,
    max_socle: int,
    max_terms: int = 5,
    max_coefficient: int = 100,
) -> SymmetrizedDecomposition:
    """Draw a random chain of sequences with a common socle degree.

    N is uniform in [length, max_socle]. Candidates are the enumerated sequences
    with d_s = N, so each is below its own dual. A random subset is sorted and
    thinned to a chain. Coefficients are p/q with 1 <= p, q <= max_coefficient.

    Raises:
        InvalidSearchRangeError: length < 1 or max_socle < length.
    """
    check_search_range(length, max_socle)
    n = rng.randint(length, max_socle)
    candidates = [d for d in enumerate_sequences(length, n) if d[-1] == n]
    count = rng.randint(1, min(max_terms, len(candidates)))
    picks = sorted(rng.sample(candidates, count), key=lambda d: d.root)

    chain: list[DegreeSequence] = []
    for degrees in picks:
        if not chain or chain[-1].is_strictly_below(degrees):
            chain.append(degrees)

    terms = tuple(
        SymmetrizedTerm(
            degrees=degrees,
            coefficient=Fraction(
                rng.randint(1, max_coefficient), rng.randint(1, max_coefficient)
            ),
            self_dual=dual_sequence(degrees, n) == degrees,
        )
        for degrees in chain
    )
    return SymmetrizedDecomposition(duality_degree=n, terms=terms)
