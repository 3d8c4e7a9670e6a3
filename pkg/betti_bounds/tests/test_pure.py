from fractions import Fraction
from math import factorial

import hypothesis.strategies as st
import pytest
from hypothesis import given

from betti_bounds.core import (
    combine_tables,
    dual_sequence,
    dual_table,
    is_self_dual,
    multiplicity,
    ps_functional,
    pure_table,
    symmetrized_pure_table,
)
from betti_bounds.exceptions import InvalidDegreeSequenceError, InvalidDualityDegreeError
from betti_bounds.models import BettiTable, DegreeSequence
from betti_bounds.tests.conftest import make_table

# Lengths s = 1..6 with degrees up to 30.
degree_sequences = st.lists(
    st.integers(min_value=-6, max_value=30), min_size=2, max_size=7, unique=True
).map(lambda values: DegreeSequence(tuple(sorted(values))))


@st.composite
def chain_tables(draw) -> BettiTable:
    """Positive mixture of pure tables along a chain d^1 <= d^2 <= ..."""
    degrees = list(draw(degree_sequences))
    terms = []
    for _ in range(draw(st.integers(min_value=1, max_value=4))):
        coefficient = Fraction(
            draw(st.integers(min_value=1, max_value=50)),
            draw(st.integers(min_value=1, max_value=50)),
        )
        terms.append((coefficient, pure_table(DegreeSequence(tuple(degrees)))))
        i = draw(st.integers(min_value=0, max_value=len(degrees) - 1))
        if i == len(degrees) - 1 or degrees[i] + 1 < degrees[i + 1]:
            degrees[i] += 1
    return combine_tables(terms)


class TestDegreeSequence:
    @pytest.mark.parametrize("degrees", [(0,), (0, 0), (0, 3, 2), ()])
    def test_invalid(self, degrees):
        with pytest.raises(InvalidDegreeSequenceError):
            DegreeSequence(degrees)

    def test_partial_order(self):
        low = DegreeSequence((0, 2, 4, 8))
        high = DegreeSequence((0, 2, 6, 8))
        assert low.is_strictly_below(high)
        assert not high.is_below(low)
        assert low.is_below(low)
        assert not low.is_strictly_below(low)
        assert not low.is_below(DegreeSequence((0, 1)))

    def test_str(self):
        assert str(DegreeSequence((0, 2, 4, 8))) == "(0,2,4,8)"


class TestPureTable:
    @pytest.mark.parametrize(
        "degrees, expected",
        [
            ((0, 1, 2, 3), ["1/6", "1/2", "1/2", "1/6"]),
            ((0, 2, 4, 8), ["1/64", "1/24", "1/32", "1/192"]),
            ((0, 1), ["1", "1"]),
        ],
    )
    def test_values(self, degrees, expected):
        table = pure_table(DegreeSequence(degrees))
        assert [table.value(i, d) for i, d in enumerate(degrees)] == [
            Fraction(value) for value in expected
        ]

    @given(degree_sequences)
    def test_functionals_vanish_below_length(self, degrees):
        table = pure_table(degrees)
        for l in range(degrees.length):  # noqa: E741
            assert ps_functional(table, l) == 0

    @given(degree_sequences)
    def test_multiplicity_is_inverse_factorial(self, degrees):
        assert multiplicity(pure_table(degrees)) == Fraction(1, factorial(degrees.length))


class TestDuality:
    @given(degree_sequences, st.integers(min_value=-10, max_value=40))
    def test_dual_sequence_is_involution(self, degrees, n):
        assert dual_sequence(dual_sequence(degrees, n), n) == degrees

    @given(degree_sequences, st.integers(min_value=-10, max_value=40))
    def test_dual_of_pure_is_pure_of_dual(self, degrees, n):
        reflected = dual_table(pure_table(degrees), degrees.length, n)
        assert reflected == pure_table(dual_sequence(degrees, n))

    @given(chain_tables(), st.integers(min_value=-10, max_value=60))
    def test_dual_table_is_involution(self, table, n):
        reflected = dual_table(table, table.length, n)
        assert dual_table(reflected, table.length, n) == table
        assert multiplicity(reflected) == multiplicity(table)

    def test_e20_is_self_dual(self, e20_table):
        duality = is_self_dual(e20_table)
        assert duality
        assert duality.degree == 10

    def test_pfaffian_is_self_dual(self, pfaffian_table):
        assert is_self_dual(pfaffian_table).degree == 12

    def test_non_self_dual(self):
        table = make_table((0, 0, 1), (1, 2, 2), (1, 3, 1), (2, 5, 1))
        duality = is_self_dual(table)
        assert not duality
        assert duality.degree is None

    def test_reflection_moves_middle_column(self):
        """Reflecting at N = 3 sends beta_{1,1} to position (1, 2)."""
        table = make_table((0, 0, 1), (1, 1, 2), (2, 3, 1))
        assert dual_table(table, 2, 3) == make_table((0, 0, 1), (1, 2, 2), (2, 3, 1))
        assert not is_self_dual(table)

    def test_invalid_reflection_is_not_self_dual(self):
        """A generator above every relation reflects to a broken table."""
        table = make_table((0, 0, 1), (0, 5, 1), (1, 3, 1))
        assert not is_self_dual(table)


class TestSymmetrizedPureTable:
    def test_self_dual_sequence_doubles(self):
        degrees = DegreeSequence((0, 2, 6, 8))
        assert symmetrized_pure_table(degrees, 8) == pure_table(degrees).scaled(Fraction(2))

    @given(degree_sequences)
    def test_multiplicity(self, degrees):
        n = degrees[0] + degrees[-1] + 3
        table = symmetrized_pure_table(degrees, n)
        assert multiplicity(table) == Fraction(2, factorial(degrees.length))
        assert is_self_dual(table)

    def test_duality_degree_too_small(self):
        with pytest.raises(InvalidDualityDegreeError):
            symmetrized_pure_table(DegreeSequence((0, 2, 5)), 4)
