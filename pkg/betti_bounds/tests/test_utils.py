from fractions import Fraction

import pytest

from betti_bounds.utils import (
    format_decimal,
    format_rational,
    format_with_decimal,
    parse_rational,
)


class TestParseRational:
    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("3/4", Fraction(3, 4)),
            (" -2/6 ", Fraction(-1, 3)),
            ("+5", Fraction(5)),
            (7, Fraction(7)),
            (Fraction(1, 9), Fraction(1, 9)),
        ],
    )
    def test_valid(self, raw, expected):
        assert parse_rational(raw) == expected

    @pytest.mark.parametrize("raw", ["1.5", "1/0", "a/b", "", True, 0.5, None, "1/-2"])
    def test_invalid(self, raw):
        with pytest.raises(ValueError):
            parse_rational(raw)


class TestFormatting:
    @pytest.mark.parametrize(
        "value, expected",
        [(Fraction(64, 3), "64/3"), (Fraction(16), "16"), (Fraction(-1, 2), "-1/2")],
    )
    def test_format_rational(self, value, expected):
        assert format_rational(value) == expected

    @pytest.mark.parametrize(
        "value, expected",
        [
            (Fraction(64, 3), "21.333333"),
            (Fraction(2, 3), "0.666667"),
            (Fraction(-2, 3), "-0.666667"),
            (Fraction(1, 2_000_000), "0.000001"),
            (Fraction(7, 4), "1.750000"),
        ],
    )
    def test_format_decimal(self, value, expected):
        assert format_decimal(value) == expected

    def test_format_with_decimal(self):
        assert format_with_decimal(Fraction(64, 3)) == "64/3 (~21.333333)"
        assert format_with_decimal(Fraction(72)) == "72"
