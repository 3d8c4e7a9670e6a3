from collections.abc import Iterator
from itertools import combinations

from betti_bounds.exceptions import InvalidSearchRangeError
from betti_bounds.models import DegreeSequence


def check_search_range(length: int, max_socle: int) -> None:
    if length < 1:
        raise InvalidSearchRangeError(f"Length must be at least 1, got {length}")
    if max_socle < length:
        raise InvalidSearchRangeError(
            f"Max socle degree {max_socle} is below the length {length}"
        )


def _sequences(length: int, max_socle: int) -> Iterator[DegreeSequence]:
    for tail in combinations(range(1, max_socle + 1), length):
        n = tail[-1]
        degrees = (0, *tail)
        if all(degrees[i] + degrees[length - i] <= n for i in range(length + 1)):
            yield DegreeSequence(degrees)


def enumerate_sequences(length: int, max_socle: int) -> Iterator[DegreeSequence]:
    """Every d = (0, d_1, ..., d_s) with d_s <= max_socle and d below its (s, d_s)-dual.

    Sequences are yielded in lexicographic order of (d_1, ..., d_s). The range
    is checked before the iterator is returned.

    Raises:
        InvalidSearchRangeError: length < 1 or max_socle < length.
    """
    check_search_range(length, max_socle)
    return _sequences(length, max_socle)
