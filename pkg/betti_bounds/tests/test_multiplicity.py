import importlib
from fractions import Fraction
from unittest import mock

import pytest

from betti_bounds.core import (
    first_nonvanishing_functional,
    multiplicity,
    ps_functional,
    ps_functionals,
)
from betti_bounds.exceptions import NotCohenMacaulayConsistentError
from betti_bounds.tests.conftest import make_table

# The package re-exports the function under the module's name.
multiplicity_module = importlib.import_module("betti_bounds.core.multiplicity")


class TestPeskineSzpiro:
    def test_e20_functionals(self, e20_table):
        assert ps_functionals(e20_table) == [0, 0, 0, -120]

    def test_single_entry(self):
        assert ps_functional(make_table((0, 0, 1)), 0) == 1

    def test_negative_exponent_rejected(self, koszul_table):
        with pytest.raises(ValueError):
            ps_functional(koszul_table, -1)


class TestMultiplicity:
    @pytest.mark.parametrize(
        "fixture_name, expected",
        [
            ("e20_table", 20),
            ("ci_table", 16),
            ("koszul_table", 1),
            ("pfaffian_table", 66),
            ("interleaved_table", 16),
        ],
    )
    def test_known_values(self, request, fixture_name, expected):
        assert multiplicity(request.getfixturevalue(fixture_name)) == expected

    def test_length_zero_sums_generators(self):
        assert multiplicity(make_table((0, 0, 2), (0, 3, "1/2"))) == Fraction(5, 2)

    def test_refuses_inconsistent_table(self):
        """Two generators and one relation do not satisfy PS_0 = 0."""
        table = make_table((0, 0, 2), (1, 1, 1))
        with pytest.raises(NotCohenMacaulayConsistentError) as exc_info:
            multiplicity(table)
        assert exc_info.value.l == 0
        assert exc_info.value.value == 1
        assert first_nonvanishing_functional(table) == (0, 1)

    @mock.patch.object(multiplicity_module, "logger")
    def test_force_returns_formal_value(self, mock_logger):
        table = make_table((0, 0, 2), (1, 1, 1))
        assert multiplicity(table, force=True) == 1
        mock_logger.warning.assert_called_once()
        assert "formal multiplicity" in mock_logger.warning.call_args[0][0]

    def test_additive_and_homogeneous(self, ci_table, e20_table):
        combined = ci_table.scaled(Fraction(3)) + e20_table
        assert multiplicity(combined) == 3 * 16 + 20
