from betti_bounds.bounds.enumeration import check_search_range, enumerate_sequences
from betti_bounds.bounds.formulas import (
    b_of,
    codim3_bound,
    codim3_formula,
    is_cyclic,
    mnz_bound,
    mnz_formula,
    n1,
    psi,
    quasi_pure_lower,
    srinivasan_bounds,
    theorem_bound,
    xi_identity,
)
from betti_bounds.bounds.report import bounds_report
from betti_bounds.bounds.sampling import random_symmetrized_decomposition
from betti_bounds.bounds.surveys import (
    run_survey,
    survey_lemma,
    survey_proposition,
    survey_theorem,
    survey_xi,
)

__all__ = [
    "b_of",
    "bounds_report",
    "check_search_range",
    "codim3_bound",
    "codim3_formula",
    "enumerate_sequences",
    "is_cyclic",
    "mnz_bound",
    "mnz_formula",
    "n1",
    "psi",
    "quasi_pure_lower",
    "random_symmetrized_decomposition",
    "run_survey",
    "srinivasan_bounds",
    "survey_lemma",
    "survey_proposition",
    "survey_theorem",
    "survey_xi",
    "theorem_bound",
    "xi_identity",
]
