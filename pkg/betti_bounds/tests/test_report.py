from fractions import Fraction

import pytest

from betti_bounds.bounds import bounds_report
from betti_bounds.core import pure_table, symmetrized_pure_table
from betti_bounds.exceptions import NotCohenMacaulayConsistentError
from betti_bounds.models import BoundKind, BoundStatus, DegreeSequence
from betti_bounds.tests.conftest import make_table


class TestBoundsReport:
    def test_e20_table(self, e20_table):
        report = bounds_report(e20_table)

        assert report.multiplicity == 20
        assert report.self_dual
        assert report.duality_degree == 10
        assert not report.quasi_pure
        assert report.theorem_bound == Fraction(125, 3)
        assert report.lower_probe == Fraction(160, 6)
        assert report.srinivasan_lower is None
        assert report.n1 == 7
        assert report.mnz_bound == Fraction(280, 3)
        assert report.codim3_bound == Fraction(125, 3)

        assert report.flags[BoundKind.THEOREM] == BoundStatus.HOLDS
        assert report.flags[BoundKind.SRINIVASAN_LOWER] == BoundStatus.NOT_APPLICABLE
        assert report.flags[BoundKind.SRINIVASAN_UPPER] == BoundStatus.NOT_APPLICABLE
        assert report.flags[BoundKind.LOWER_PROBE] == BoundStatus.VIOLATED
        assert report.flags[BoundKind.MNZ] == BoundStatus.HOLDS
        assert report.flags[BoundKind.CODIM3] == BoundStatus.HOLDS

    def test_complete_intersection(self, ci_table):
        report = bounds_report(ci_table)
        assert report.quasi_pure
        assert (report.srinivasan_lower, report.srinivasan_upper) == (16, Fraction(64, 3))
        assert all(status == BoundStatus.HOLDS for status in report.flags.values())

    def test_theorem_violation_in_length_two(self):
        table = symmetrized_pure_table(DegreeSequence((0, 1, 3)), 3).scaled(Fraction(2))
        report = bounds_report(table)
        assert report.multiplicity == 2
        assert report.theorem_bound == Fraction(3, 2)
        assert report.flags[BoundKind.THEOREM] == BoundStatus.VIOLATED
        assert report.flags[BoundKind.CODIM3] == BoundStatus.NOT_APPLICABLE
        assert report.codim3_bound is None

    def test_generators_in_positive_degree(self):
        report = bounds_report(pure_table(DegreeSequence((1, 2, 3))))
        assert report.theorem_bound is None
        assert report.flags[BoundKind.THEOREM] == BoundStatus.NOT_APPLICABLE

    def test_inconsistent_table(self):
        with pytest.raises(NotCohenMacaulayConsistentError):
            bounds_report(make_table((0, 0, 2), (1, 1, 1)))

    def test_json_dump_uses_exact_strings(self, e20_table):
        dumped = bounds_report(e20_table).model_dump(mode="json")
        assert dumped["theorem_bound"] == "125/3"
        assert dumped["multiplicity"] == "20"
        assert dumped["flags"]["lower_probe"] == "violated"
