import logging
from fractions import Fraction
from typing import Optional

from betti_bounds.bounds.formulas import (
    codim3_bound,
    is_cyclic,
    mnz_formula,
    n1,
    quasi_pure_lower,
    srinivasan_bounds,
    theorem_bound,
)
from betti_bounds.core.multiplicity import multiplicity
from betti_bounds.core.pure import is_self_dual
from betti_bounds.core.tables import is_quasi_pure, shifts
from betti_bounds.exceptions import NoSuchDegreeError
from betti_bounds.models import BettiTable, BoundKind, BoundsReport, BoundStatus

logger = logging.getLogger(__name__)


def _upper_status(e: Fraction, bound: Optional[Fraction]) -> BoundStatus:
    if bound is None:
        return BoundStatus.NOT_APPLICABLE
    return BoundStatus.HOLDS if e <= bound else BoundStatus.VIOLATED


def _lower_status(e: Fraction, bound: Optional[Fraction]) -> BoundStatus:
    if bound is None:
        return BoundStatus.NOT_APPLICABLE
    return BoundStatus.HOLDS if bound <= e else BoundStatus.VIOLATED


def bounds_report(table: BettiTable) -> BoundsReport:
    """Evaluate every bound whose preconditions the table meets.

    Bounds outside their domain are left empty and flagged not_applicable.
    The lower probe is the quasi-pure lower formula evaluated regardless of
    quasi-purity, so its violations show how far that formula extends.

    Raises:
        NotCohenMacaulayConsistentError: The multiplicity is not defined.
    """
    profile = shifts(table)
    e = multiplicity(table)
    duality = is_self_dual(table)
    quasi_pure = is_quasi_pure(table)
    degree_zero = profile.length >= 1 and profile.minimal[0] == 0

    theorem = theorem_bound(table) if degree_zero else None
    lower_probe = quasi_pure_lower(profile) if degree_zero else None

    srinivasan_lower = srinivasan_upper = None
    if degree_zero and quasi_pure:
        srinivasan_lower, srinivasan_upper = srinivasan_bounds(table)

    n1_degree = mnz = codim3 = None
    if profile.length == 3 and is_cyclic(table):
        codim3 = codim3_bound(table)
        try:
            n1_degree = n1(table)
        except NoSuchDegreeError:
            logger.debug("No degree with beta_1j > beta_2j, skipping the MNZ bound")
        else:
            mnz = mnz_formula(n1_degree, profile.maximal[2], profile.minimal[3])

    flags = {
        BoundKind.THEOREM: _upper_status(e, theorem),
        BoundKind.SRINIVASAN_LOWER: _lower_status(e, srinivasan_lower),
        BoundKind.SRINIVASAN_UPPER: _upper_status(e, srinivasan_upper),
        BoundKind.MNZ: _upper_status(e, mnz),
        BoundKind.CODIM3: _upper_status(e, codim3),
        BoundKind.LOWER_PROBE: _lower_status(e, lower_probe),
    }

    return BoundsReport(
        profile=profile,
        multiplicity=e,
        self_dual=duality.self_dual,
        duality_degree=duality.degree,
        quasi_pure=quasi_pure,
        theorem_bound=theorem,
        srinivasan_lower=srinivasan_lower,
        srinivasan_upper=srinivasan_upper,
        lower_probe=lower_probe,
        n1=n1_degree,
        mnz_bound=mnz,
        codim3_bound=codim3,
        flags=flags,
    )
