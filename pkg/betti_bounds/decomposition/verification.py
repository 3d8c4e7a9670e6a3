"""Independent checks of a symmetrized decomposition against its table."""

import logging
from fractions import Fraction
from itertools import combinations
from math import factorial

from betti_bounds.core.multiplicity import multiplicity
from betti_bounds.core.pure import dual_sequence
from betti_bounds.decomposition.symmetric import synthesize
from betti_bounds.exceptions import BettiError
from betti_bounds.models import (
    BettiTable,
    SymmetrizedDecomposition,
    VerificationCheck,
    VerificationReport,
)

logger = logging.getLogger(__name__)

CHECK_NAMES = (
    "synthesis",
    "common_length",
    "not_mutually_dual",
    "increasing",
    "below_dual",
    "self_dual_flags",
    "multiplicity",
)


def _check_synthesis(
    table: BettiTable, decomposition: SymmetrizedDecomposition
) -> VerificationCheck:
    try:
        synthesized = synthesize(decomposition)
    except BettiError as e:
        return VerificationCheck(name="synthesis", passed=False, detail=str(e))
    if synthesized != table:
        return VerificationCheck(
            name="synthesis",
            passed=False,
            detail="Sum of symmetrized pure tables differs from the table",
        )
    return VerificationCheck(name="synthesis", passed=True)


def _check_common_length(
    table: BettiTable, decomposition: SymmetrizedDecomposition
) -> VerificationCheck:
    wrong = [
        str(term.degrees)
        for term in decomposition.terms
        if term.degrees.length != table.length
    ]
    return VerificationCheck(
        name="common_length",
        passed=not wrong,
        detail=f"Length differs from {table.length}: {', '.join(wrong)}" if wrong else "",
    )


def _check_not_mutually_dual(decomposition: SymmetrizedDecomposition) -> VerificationCheck:
    n = decomposition.duality_degree
    for a, b in combinations(decomposition.terms, 2):
        if a.degrees.length == b.degrees.length and dual_sequence(a.degrees, n) == b.degrees:
            return VerificationCheck(
                name="not_mutually_dual",
                passed=False,
                detail=f"{a.degrees} and {b.degrees} are dual to each other",
            )
    return VerificationCheck(name="not_mutually_dual", passed=True)


def _check_increasing(decomposition: SymmetrizedDecomposition) -> VerificationCheck:
    terms = decomposition.terms
    for previous, current in zip(terms, terms[1:]):
        if not previous.degrees.is_strictly_below(current.degrees):
            return VerificationCheck(
                name="increasing",
                passed=False,
                detail=f"{previous.degrees} is not below {current.degrees}",
            )
    return VerificationCheck(name="increasing", passed=True)


def _check_below_dual(decomposition: SymmetrizedDecomposition) -> VerificationCheck:
    n = decomposition.duality_degree
    for term in decomposition.terms:
        d = term.degrees
        s = d.length
        if any(d[i] + d[s - i] > n for i in range(s + 1)):
            return VerificationCheck(
                name="below_dual",
                passed=False,
                detail=f"{d} is not below its dual for N={n}",
            )
    return VerificationCheck(name="below_dual", passed=True)


def _check_self_dual_flags(decomposition: SymmetrizedDecomposition) -> VerificationCheck:
    n = decomposition.duality_degree
    for term in decomposition.terms:
        actual = dual_sequence(term.degrees, n) == term.degrees
        if term.self_dual != actual:
            return VerificationCheck(
                name="self_dual_flags",
                passed=False,
                detail=f"{term.degrees} is flagged self_dual={term.self_dual}",
            )
    return VerificationCheck(name="self_dual_flags", passed=True)


def _check_multiplicity(
    table: BettiTable, decomposition: SymmetrizedDecomposition
) -> VerificationCheck:
    try:
        value = multiplicity(table)
    except BettiError as e:
        return VerificationCheck(name="multiplicity", passed=False, detail=str(e))
    expected = sum(
        (
            2 * term.coefficient / factorial(term.degrees.length)
            for term in decomposition.terms
        ),
        Fraction(0),
    )
    if value != expected:
        return VerificationCheck(
            name="multiplicity",
            passed=False,
            detail=f"e = {value} but the terms give {expected}",
        )
    return VerificationCheck(name="multiplicity", passed=True)


def verify_decomposition(
    table: BettiTable, decomposition: SymmetrizedDecomposition
) -> VerificationReport:
    """Run every check and report each one, failing or not."""
    report = VerificationReport(
        checks=[
            _check_synthesis(table, decomposition),
            _check_common_length(table, decomposition),
            _check_not_mutually_dual(decomposition),
            _check_increasing(decomposition),
            _check_below_dual(decomposition),
            _check_self_dual_flags(decomposition),
            _check_multiplicity(table, decomposition),
        ]
    )
    for check in report.checks:
        if not check.passed:
            logger.info("Check %s failed: %s", check.name, check.detail)
    return report
