import os

import pytest

from betti_bounds.core import validate_table
from betti_bounds.models import BettiTable


def make_table(*triples: tuple[int, int, int | str]) -> BettiTable:
    """Build a table from readable (i, j, value) triples.

    Example:
        >>> make_table((0, 0, 1), (1, 1, 2), (2, 2, 1))
    """
    return validate_table(triples)


@pytest.fixture(autouse=True)
def clean_env():
    """Ensure no config is loaded from env during tests."""
    vars_to_clear = [
        "DEBUG",
        "BETTI_THREADS",
        "BETTI_SURVEY_TRIALS",
        "BETTI_SURVEY_SEED",
        "BETTI_SURVEY_MAX_TERMS",
        "BETTI_SURVEY_MAX_COEFFICIENT",
        "SENTRY_DSN",
        "SENTRY_ENVIRONMENT",
        "SENTRY_TRACES_SAMPLE_RATE",
    ]
    stashed = {}
    for var in vars_to_clear:
        if var in os.environ:
            stashed[var] = os.environ.pop(var)

    yield

    os.environ.update(stashed)


@pytest.fixture
def koszul_table():
    """Koszul complex on three variables."""
    return make_table((0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1))


@pytest.fixture
def ci_table():
    """Complete intersection of degrees 2, 2, 4."""
    return make_table(
        (0, 0, 1), (1, 2, 2), (1, 4, 1), (2, 4, 1), (2, 6, 2), (3, 8, 1)
    )


@pytest.fixture
def e20_table():
    """Self-dual table of length 3 with multiplicity 20."""
    return make_table(
        (0, 0, 1), (1, 2, 3), (1, 7, 2), (2, 3, 2), (2, 8, 3), (3, 10, 1)
    )


@pytest.fixture
def pfaffian_table():
    """Pfaffian-type Gorenstein table with five generators."""
    return make_table(
        (0, 0, 1),
        (1, 4, 2),
        (1, 5, 2),
        (1, 6, 1),
        (2, 6, 1),
        (2, 7, 2),
        (2, 8, 2),
        (3, 12, 1),
    )


@pytest.fixture
def interleaved_table():
    """Self-dual, not quasi-pure, with M_1 = 5 > m_2 = 3."""
    return make_table(
        (0, 0, 1),
        (1, 2, 2),
        (1, 3, 1),
        (1, 4, 1),
        (1, 5, 1),
        (2, 3, 1),
        (2, 4, 1),
        (2, 5, 1),
        (2, 6, 2),
        (3, 8, 1),
    )
