"""Closed-form quantities and multiplicity bounds read off shift data.

All values are exact rationals. Integer floors and ceilings of halves are
taken with floor division.
"""

from fractions import Fraction
from math import factorial, prod

from betti_bounds.core.tables import is_quasi_pure, shifts
from betti_bounds.exceptions import (
    InvalidDegreeSequenceError,
    NoSuchDegreeError,
    NonZeroStartError,
    NotCodimThreeError,
    NotCyclicError,
    NotDegreeZeroGeneratedError,
    NotQuasiPureError,
    UnsupportedLengthError,
)
from betti_bounds.models import BettiTable, DegreeSequence, ShiftProfile


def _floor_half(n: int) -> int:
    return n // 2


def _ceil_half(n: int) -> int:
    return -(-n // 2)


def _require_zero_start(degrees: DegreeSequence) -> None:
    if degrees[0] != 0:
        raise NonZeroStartError(f"Sequence {degrees} does not start at 0")


def _degree_zero_profile(table: BettiTable) -> ShiftProfile:
    profile = shifts(table)
    if profile.length < 1:
        raise UnsupportedLengthError("Bounds need a table of length >= 1")
    if profile.minimal[0] != 0:
        raise NotDegreeZeroGeneratedError(
            f"Minimal generator degree is {profile.minimal[0]}, expected 0"
        )
    return profile


def psi(degrees: DegreeSequence) -> Fraction:
    """prod_{i<=k} min(d_s - d_{s-i}, floor(d_s/2)) * prod_{i>k} max(d_i, ceil(d_s/2))."""
    _require_zero_start(degrees)
    s = degrees.length
    k = s // 2
    n = degrees[s]
    low = prod(min(n - degrees[s - i], _floor_half(n)) for i in range(1, k + 1))
    high = prod(max(degrees[i], _ceil_half(n)) for i in range(k + 1, s + 1))
    return Fraction(low * high)


def b_of(degrees: DegreeSequence) -> Fraction:
    """1/prod_{l=1..s} d_l + 1/(d_s * prod_{l=1..s-1} (d_s - d_l))."""
    _require_zero_start(degrees)
    s = degrees.length
    n = degrees[s]
    first = Fraction(1, prod(degrees[l] for l in range(1, s + 1)))
    second = Fraction(1, n * prod(n - degrees[l] for l in range(1, s)))
    return first + second


def theorem_bound(table: BettiTable) -> Fraction:
    """beta_0 / s! times the mixed shift product capped at half the socle degree.

    Raises:
        UnsupportedLengthError: The table has length 0.
        NotDegreeZeroGeneratedError: m_0 != 0.
    """
    profile = _degree_zero_profile(table)
    s = profile.length
    k = profile.half_length
    socle = profile.minimal[s]
    low = prod(min(profile.maximal[i], _floor_half(socle)) for i in range(1, k + 1))
    high = prod(max(profile.minimal[i], _ceil_half(socle)) for i in range(k + 1, s + 1))
    return table.beta_zero * Fraction(low * high, factorial(s))


def quasi_pure_lower(profile: ShiftProfile) -> Fraction:
    """prod_{i<=k} m_i * prod_{i>k} M_i / s!, evaluated for any shift data."""
    s = profile.length
    k = profile.half_length
    low = prod(profile.minimal[i] for i in range(1, k + 1))
    high = prod(profile.maximal[i] for i in range(k + 1, s + 1))
    return Fraction(low * high, factorial(s))


def srinivasan_bounds(table: BettiTable) -> tuple[Fraction, Fraction]:
    """Lower and upper bound for quasi-pure self-dual tables.

    Raises:
        NotQuasiPureError: Consecutive shift ranges interleave.
        NotDegreeZeroGeneratedError: m_0 != 0.
    """
    if not is_quasi_pure(table):
        raise NotQuasiPureError("Table is not quasi-pure")
    profile = _degree_zero_profile(table)
    s = profile.length
    k = profile.half_length
    upper = prod(profile.maximal[i] for i in range(1, k + 1)) * prod(
        profile.minimal[i] for i in range(k + 1, s + 1)
    )
    return quasi_pure_lower(profile), Fraction(upper, factorial(s))


def is_cyclic(table: BettiTable) -> bool:
    """Column 0 is exactly one generator in degree 0."""
    return table.column(0) == [0] and table.value(0, 0) == 1


def _require_cyclic_codim_three(table: BettiTable) -> ShiftProfile:
    if table.length != 3:
        raise NotCodimThreeError(f"Table has length {table.length}, expected 3")
    if not is_cyclic(table):
        raise NotCyclicError("Column 0 is not a single generator in degree 0")
    return shifts(table)


def n1(table: BettiTable) -> int:
    """Largest j with beta_{1,j} > beta_{2,j} in a cyclic table of length 3.

    Raises:
        NotCodimThreeError: The length is not 3.
        NotCyclicError: Column 0 is not a single degree 0 generator.
        NoSuchDegreeError: No such j exists.
    """
    _require_cyclic_codim_three(table)
    degrees = [j for j in table.column(1) if table.value(1, j) > table.value(2, j)]
    if not degrees:
        raise NoSuchDegreeError("No degree j has beta_{1,j} > beta_{2,j}")
    return max(degrees)


def mnz_formula(n1_degree: int, t2: int, socle: int) -> Fraction:
    """N_1 * T_2 * m_3 / 6."""
    return Fraction(n1_degree * t2 * socle, 6)


def mnz_bound(table: BettiTable) -> Fraction:
    """mnz_formula on N_1, T_2 = M_2 and m_3 of a cyclic table of length 3."""
    profile = _require_cyclic_codim_three(table)
    return mnz_formula(n1(table), profile.maximal[2], profile.minimal[3])


def codim3_formula(max_first: int, min_second: int, socle: int) -> Fraction:
    """M_1 m_2 m_3 / 6 when M_1 <= m_2, else floor(m_3/2) ceil(m_3/2) m_3 / 6."""
    if max_first <= min_second:
        return Fraction(max_first * min_second * socle, 6)
    return Fraction(_floor_half(socle) * _ceil_half(socle) * socle, 6)


def codim3_bound(table: BettiTable) -> Fraction:
    """The length 3 form of theorem_bound for cyclic tables.

    Raises:
        NotCodimThreeError: The length is not 3.
        NotCyclicError: Column 0 is not a single degree 0 generator.
    """
    profile = _require_cyclic_codim_three(table)
    return codim3_formula(profile.maximal[1], profile.minimal[2], profile.minimal[3])


def xi_identity(degrees: DegreeSequence, j: int) -> tuple[Fraction, Fraction]:
    """Both sides of the exact first-difference identity at index j.

    With d' the sequence d with d_j raised by one, the left side is
    b(d)(d_s - d_j)d_j - b(d')(d_s - d_j - 1)(d_j + 1) and the right side is
    prod_{i=1..s, i!=j} 1/d_i - prod_{i=0..s-1, i!=j} 1/(d_s - d_i).

    Raises:
        NonZeroStartError: d_0 != 0.
        InvalidDegreeSequenceError: j is not in 1..s-1 or d_j + 1 = d_{j+1}.
    """
    _require_zero_start(degrees)
    s = degrees.length
    if not 1 <= j <= s - 1:
        raise InvalidDegreeSequenceError(f"Index {j} is outside 1..{s - 1}")
    raised = DegreeSequence(
        tuple(d + 1 if i == j else d for i, d in enumerate(degrees))
    )
    n = degrees[s]
    d_j = degrees[j]
    lhs = b_of(degrees) * (n - d_j) * d_j - b_of(raised) * (n - d_j - 1) * (d_j + 1)
    xi_second = Fraction(1, prod(degrees[i] for i in range(1, s + 1) if i != j))
    xi_first = Fraction(1, prod(n - degrees[i] for i in range(s) if i != j))
    return lhs, xi_second - xi_first
