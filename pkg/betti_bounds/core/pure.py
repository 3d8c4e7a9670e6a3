"""Pure tables, (s, N)-duality and symmetrized pure tables."""

from fractions import Fraction
from math import prod

from betti_bounds.core.tables import combine_tables, shifts
from betti_bounds.exceptions import InvalidDualityDegreeError, TableValidationError
from betti_bounds.models import BettiTable, DegreeSequence, SelfDuality


def pure_value(degrees: DegreeSequence, i: int) -> Fraction:
    """Herzog-Kuehl value 1 / prod_{l != i} |d_l - d_i|."""
    d_i = degrees[i]
    return Fraction(1, prod(abs(d_l - d_i) for l, d_l in enumerate(degrees) if l != i))


def pure_table(degrees: DegreeSequence) -> BettiTable:
    """Pure table supported on (i, d_i), normalized to multiplicity 1/s!."""
    return BettiTable(
        entries={(i, d_i): pure_value(degrees, i) for i, d_i in enumerate(degrees)}
    )


def dual_sequence(degrees: DegreeSequence, n: int) -> DegreeSequence:
    """(N - d_s, ..., N - d_0)."""
    return DegreeSequence(tuple(n - d for d in reversed(degrees.root)))


def dual_table(table: BettiTable, length: int, n: int) -> BettiTable:
    """Reflect entry (i, j) to (s - i, N - j).

    Raises:
        BrokenChainError: The reflection violates the consecutiveness axiom.
        TableValidationError: s is below the table length.
    """
    return BettiTable(
        entries={
            (length - i, n - j): value for (i, j), value in table.entries.items()
        }
    )


def is_self_dual(table: BettiTable) -> SelfDuality:
    """Test (s, N)-self-duality with s the length and N = M_s + m_0."""
    profile = shifts(table)
    n = profile.duality_degree
    try:
        dual = dual_table(table, profile.length, n)
    except TableValidationError:
        return SelfDuality(self_dual=False)
    if dual == table:
        return SelfDuality(self_dual=True, degree=n)
    return SelfDuality(self_dual=False)


def symmetrized_pure_table(degrees: DegreeSequence, n: int) -> BettiTable:
    """beta(d) + beta(d^{v,N}); equals 2 * beta(d) when d is self-dual.

    Raises:
        InvalidDualityDegreeError: N < d_0 + d_s.
    """
    if n < degrees[0] + degrees[-1]:
        raise InvalidDualityDegreeError(
            f"N={n} is below d_0 + d_s = {degrees[0] + degrees[-1]} for {degrees}"
        )
    one = Fraction(1)
    return combine_tables(
        [(one, pure_table(degrees)), (one, pure_table(dual_sequence(degrees, n)))]
    )
