from betti_bounds.models.domain import (
    BettiTable,
    DegreeSequence,
    Rational,
    SelfDuality,
    ShiftProfile,
)
from betti_bounds.models.enums import (
    BoundKind,
    BoundStatus,
    DocumentFormat,
    SurveyCheck,
)
from betti_bounds.models.schemas import (
    BoundsReport,
    ChainDecomposition,
    ChainTerm,
    DecompositionDocument,
    SurveyRecord,
    SurveyResult,
    SurveyViolation,
    SymmetrizedDecomposition,
    SymmetrizedTerm,
    TableDocument,
    VerificationCheck,
    VerificationReport,
)

__all__ = [
    "BettiTable",
    "BoundKind",
    "BoundStatus",
    "BoundsReport",
    "ChainDecomposition",
    "ChainTerm",
    "DecompositionDocument",
    "DegreeSequence",
    "DocumentFormat",
    "Rational",
    "SelfDuality",
    "ShiftProfile",
    "SurveyCheck",
    "SurveyRecord",
    "SurveyResult",
    "SurveyViolation",
    "SymmetrizedDecomposition",
    "SymmetrizedTerm",
    "TableDocument",
    "VerificationCheck",
    "VerificationReport",
]
