from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from betti_bounds.models.domain import DegreeSequence, Rational, ShiftProfile
from betti_bounds.models.enums import (
    BoundKind,
    BoundStatus,
    DocumentFormat,
    SurveyCheck,
)


class ChainTerm(BaseModel):
    """One pure table r * beta(d) of a chain decomposition."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degrees: DegreeSequence
    coefficient: Rational

    @field_validator("coefficient")
    @classmethod
    def check_positive(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError(f"Coefficient must be positive, got {v}")
        return v


class ChainDecomposition(BaseModel):
    """Pure tables along a strictly increasing chain of degree sequences."""

    model_config = ConfigDict(frozen=True)

    length: int = Field(ge=1)
    terms: tuple[ChainTerm, ...]

    @model_validator(mode="after")
    def check_chain(self) -> "ChainDecomposition":
        for term in self.terms:
            if term.degrees.length != self.length:
                raise ValueError(
                    f"Sequence {term.degrees} does not have length {self.length}"
                )
        for previous, current in zip(self.terms, self.terms[1:]):
            if not previous.degrees.is_strictly_below(current.degrees):
                raise ValueError(
                    f"Sequences {previous.degrees} and {current.degrees} "
                    "are not strictly increasing"
                )
        return self


class SymmetrizedTerm(BaseModel):
    """One symmetrized pure table r * beta_sym(d, N)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degrees: DegreeSequence
    coefficient: Rational
    self_dual: bool = False

    @field_validator("coefficient")
    @classmethod
    def check_positive(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError(f"Coefficient must be positive, got {v}")
        return v


class SymmetrizedDecomposition(BaseModel):
    """Decomposition of a self-dual table into symmetrized pure tables.

    Chain and duality invariants are not enforced here; verify_decomposition
    reports them so that inconsistent documents can still be inspected.
    """

    model_config = ConfigDict(frozen=True)

    duality_degree: int
    terms: tuple[SymmetrizedTerm, ...] = ()


class VerificationCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    """Named pass/fail checks of a symmetrized decomposition against a table."""

    checks: list[VerificationCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> VerificationCheck:
        return next(check for check in self.checks if check.name == name)


class BoundsReport(BaseModel):
    """Every shift invariant and bound of a table, compared exactly with e."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    profile: ShiftProfile
    multiplicity: Rational
    self_dual: bool
    duality_degree: Optional[int] = None
    quasi_pure: bool
    theorem_bound: Optional[Rational] = None
    srinivasan_lower: Optional[Rational] = None
    srinivasan_upper: Optional[Rational] = None
    lower_probe: Optional[Rational] = Field(
        None,
        description="Quasi-pure lower formula evaluated without the quasi-pure hypothesis",
    )
    n1: Optional[int] = None
    mnz_bound: Optional[Rational] = None
    codim3_bound: Optional[Rational] = None
    flags: dict[BoundKind, BoundStatus] = Field(default_factory=dict)


class SurveyRecord(BaseModel):
    """Value computed for one enumerated sequence."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    degrees: DegreeSequence
    value: Rational


class SurveyViolation(BaseModel):
    """Witness of a failed inequality or identity."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    sequences: list[DegreeSequence]
    values: dict[str, Rational]
    decomposition: Optional[SymmetrizedDecomposition] = None


class SurveyResult(BaseModel):
    """Outcome of an exhaustive or randomized survey over a search range."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    check: SurveyCheck
    length: int
    max_socle: int
    sequences: int = 0
    checked: int = 0
    seed: Optional[int] = None
    trials: Optional[int] = None
    violations: list[SurveyViolation] = Field(default_factory=list)
    records: list[SurveyRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class TableDocument(BaseModel):
    """JSON form of a Betti table."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    format: Literal[DocumentFormat.TABLE]
    entries: list[tuple[int, int, Rational]]


class DecompositionDocument(BaseModel):
    """JSON form of a symmetrized decomposition, the input of synthesis."""

    format: Literal[DocumentFormat.DECOMPOSITION]
    duality_degree: int
    terms: list[SymmetrizedTerm]
