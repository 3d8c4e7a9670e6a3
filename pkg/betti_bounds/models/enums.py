from enum import StrEnum


class BoundStatus(StrEnum):
    """Outcome of comparing a bound with the multiplicity."""

    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not_applicable"


class BoundKind(StrEnum):
    """Bounds evaluated by the bounds report."""

    THEOREM = "theorem"
    SRINIVASAN_LOWER = "srinivasan_lower"
    SRINIVASAN_UPPER = "srinivasan_upper"
    MNZ = "mnz"
    CODIM3 = "codim3"
    LOWER_PROBE = "lower_probe"


class SurveyCheck(StrEnum):
    """Inequality or identity checked by a survey."""

    LEMMA = "lemma"
    PROP = "prop"
    THEOREM = "theorem"
    XI = "xi"


class DocumentFormat(StrEnum):
    """Version tags of the input documents."""

    TABLE = "betti v1"
    DECOMPOSITION = "symmetrized v1"
