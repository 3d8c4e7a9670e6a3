"""Exhaustive and randomized surveys of the inequalities behind the bounds.

Each survey splits its work into independent per-sequence (or per-trial) items,
evaluates them through a SurveyRunner and merges the outcomes in enumeration
order. Item checks are module-level functions so that worker processes can
unpickle them; shared context is bound with functools.partial.
"""

import logging
import random
from collections import defaultdict
from fractions import Fraction
from functools import partial
from typing import Optional

from betti_bounds.bounds.enumeration import check_search_range, enumerate_sequences
from betti_bounds.bounds.formulas import b_of, psi, theorem_bound, xi_identity
from betti_bounds.bounds.sampling import random_symmetrized_decomposition
from betti_bounds.core.multiplicity import multiplicity
from betti_bounds.decomposition.symmetric import synthesize
from betti_bounds.models import (
    DegreeSequence,
    SurveyCheck,
    SurveyRecord,
    SurveyResult,
    SurveyViolation,
    SymmetrizedDecomposition,
)
from betti_bounds.services.survey_runner import SurveyRunner

logger = logging.getLogger(__name__)

PROPOSITION_THRESHOLD = Fraction(2)


def _runner(runner: Optional[SurveyRunner]) -> SurveyRunner:
    return runner if runner is not None else SurveyRunner(workers=1)


def _check_lemma(
    item: tuple[DegreeSequence, Fraction],
    candidates: dict[int, list[tuple[DegreeSequence, Fraction]]],
) -> tuple[int, list[SurveyViolation]]:
    d, value = item
    checked = 0
    violations = []
    for other, other_value in candidates[d[-1]]:
        if not d.is_strictly_below(other):
            continue
        checked += 1
        if other_value > value:
            violations.append(
                SurveyViolation(
                    sequences=[d, other],
                    values={"psi": value, "psi_other": other_value},
                )
            )
    return checked, violations


def survey_lemma(
    length: int, max_socle: int, runner: Optional[SurveyRunner] = None
) -> SurveyResult:
    """Check that psi does not increase along d < d' with a common d_s."""
    sequences = list(enumerate_sequences(length, max_socle))
    items = [(d, psi(d)) for d in sequences]
    by_socle: dict[int, list[tuple[DegreeSequence, Fraction]]] = defaultdict(list)
    for d, value in items:
        by_socle[d[-1]].append((d, value))

    outcomes = _runner(runner).map(
        partial(_check_lemma, candidates=dict(by_socle)), items
    )
    return SurveyResult(
        check=SurveyCheck.LEMMA,
        length=length,
        max_socle=max_socle,
        sequences=len(sequences),
        checked=sum(checked for checked, _ in outcomes),
        violations=[v for _, found in outcomes for v in found],
    )


def _check_proposition(
    d: DegreeSequence,
) -> tuple[SurveyRecord, Optional[SurveyViolation]]:
    b = b_of(d)
    value = psi(d)
    product = b * value
    record = SurveyRecord(degrees=d, value=product)
    if product >= PROPOSITION_THRESHOLD:
        return record, None
    return record, SurveyViolation(
        sequences=[d], values={"b": b, "psi": value, "product": product}
    )


def survey_proposition(
    length: int, max_socle: int, runner: Optional[SurveyRunner] = None
) -> SurveyResult:
    """Record b_d * psi_d for every sequence; values below 2 are violations."""
    sequences = list(enumerate_sequences(length, max_socle))
    outcomes = _runner(runner).map(_check_proposition, sequences)
    return SurveyResult(
        check=SurveyCheck.PROP,
        length=length,
        max_socle=max_socle,
        sequences=len(sequences),
        checked=len(sequences),
        records=[record for record, _ in outcomes],
        violations=[v for _, v in outcomes if v is not None],
    )


def _check_theorem(
    decomposition: SymmetrizedDecomposition,
) -> Optional[SurveyViolation]:
    table = synthesize(decomposition)
    e = multiplicity(table)
    bound = theorem_bound(table)
    if e <= bound:
        return None
    return SurveyViolation(
        sequences=[term.degrees for term in decomposition.terms],
        values={"multiplicity": e, "theorem_bound": bound},
        decomposition=decomposition,
    )


def survey_theorem(
    length: int,
    max_socle: int,
    trials: int,
    seed: int,
    max_terms: int = 5,
    max_coefficient: int = 100,
    runner: Optional[SurveyRunner] = None,
) -> SurveyResult:
    """Compare e with the theorem bound on synthesized random self-dual tables.

    The decompositions are drawn up front from one seeded generator, so the
    sample does not depend on how the checks are scheduled.
    """
    check_search_range(length, max_socle)
    rng = random.Random(seed)
    samples = [
        random_symmetrized_decomposition(
            rng, length, max_socle, max_terms=max_terms, max_coefficient=max_coefficient
        )
        for _ in range(trials)
    ]

    outcomes = _runner(runner).map(_check_theorem, samples)
    return SurveyResult(
        check=SurveyCheck.THEOREM,
        length=length,
        max_socle=max_socle,
        sequences=sum(1 for _ in enumerate_sequences(length, max_socle)),
        checked=trials,
        seed=seed,
        trials=trials,
        violations=[v for v in outcomes if v is not None],
    )


def _check_xi(d: DegreeSequence) -> tuple[int, list[SurveyViolation]]:
    length = d.length
    checked = 0
    violations = []
    for j in range(length // 2 + 1, length):
        if d[j] + 1 >= d[j + 1]:
            continue
        checked += 1
        lhs, rhs = xi_identity(d, j)
        if lhs != rhs:
            violations.append(
                SurveyViolation(
                    sequences=[d],
                    values={"j": Fraction(j), "lhs": lhs, "rhs": rhs},
                )
            )
    return checked, violations


def survey_xi(
    length: int, max_socle: int, runner: Optional[SurveyRunner] = None
) -> SurveyResult:
    """Check the first-difference identity at every index j > k that can be raised."""
    sequences = list(enumerate_sequences(length, max_socle))
    outcomes = _runner(runner).map(_check_xi, sequences)
    return SurveyResult(
        check=SurveyCheck.XI,
        length=length,
        max_socle=max_socle,
        sequences=len(sequences),
        checked=sum(checked for checked, _ in outcomes),
        violations=[v for _, found in outcomes for v in found],
    )


def run_survey(
    check: SurveyCheck,
    length: int,
    max_socle: int,
    trials: int = 100,
    seed: int = 0,
    max_terms: int = 5,
    max_coefficient: int = 100,
    runner: Optional[SurveyRunner] = None,
) -> SurveyResult:
    """Dispatch to the survey named by check; trials and seed apply to theorem only."""
    logger.debug("Running %s survey: s=%d max_socle=%d", check, length, max_socle)
    if check == SurveyCheck.LEMMA:
        return survey_lemma(length, max_socle, runner=runner)
    if check == SurveyCheck.PROP:
        return survey_proposition(length, max_socle, runner=runner)
    if check == SurveyCheck.XI:
        return survey_xi(length, max_socle, runner=runner)
    return survey_theorem(
        length,
        max_socle,
        trials,
        seed,
        max_terms=max_terms,
        max_coefficient=max_coefficient,
        runner=runner,
    )
