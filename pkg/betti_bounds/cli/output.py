"""Human-readable ``key = value`` rendering of command results."""

from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

from betti_bounds.models import (
    BoundKind,
    BoundsReport,
    BoundStatus,
    SurveyResult,
    VerificationReport,
)
from betti_bounds.utils import format_rational, format_with_decimal


def format_bool(value: bool) -> str:
    return "true" if value else "false"


def format_optional(value: Optional[Fraction]) -> str:
    return "n/a" if value is None else format_with_decimal(value)


def format_shifts(values: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def render_lines(pairs: Sequence[tuple[str, object]]) -> str:
    return "".join(f"{key} = {value}\n" for key, value in pairs)


def _bound_line(
    report: BoundsReport, key: str, value: Optional[Fraction], kind: BoundKind
) -> tuple[str, str]:
    status = report.flags.get(kind, BoundStatus.NOT_APPLICABLE)
    return key, f"{format_optional(value)} [{status.value}]"


def render_bounds(report: BoundsReport) -> str:
    profile = report.profile
    pairs: list[tuple[str, object]] = [
        ("s", profile.length),
        ("m", format_shifts(profile.minimal)),
        ("M", format_shifts(profile.maximal)),
        ("k", profile.half_length),
        ("N", profile.duality_degree),
        ("e", format_with_decimal(report.multiplicity)),
        ("self_dual", format_bool(report.self_dual)),
        ("quasi_pure", format_bool(report.quasi_pure)),
        _bound_line(report, "theorem", report.theorem_bound, BoundKind.THEOREM),
        _bound_line(
            report,
            "srinivasan_lower",
            report.srinivasan_lower,
            BoundKind.SRINIVASAN_LOWER,
        ),
        _bound_line(
            report,
            "srinivasan_upper",
            report.srinivasan_upper,
            BoundKind.SRINIVASAN_UPPER,
        ),
        _bound_line(report, "lower_probe", report.lower_probe, BoundKind.LOWER_PROBE),
        ("n1", "n/a" if report.n1 is None else report.n1),
        _bound_line(report, "mnz", report.mnz_bound, BoundKind.MNZ),
        _bound_line(report, "codim3", report.codim3_bound, BoundKind.CODIM3),
    ]
    return render_lines(pairs)


def render_verification(report: VerificationReport) -> str:
    pairs: list[tuple[str, object]] = []
    for check in report.checks:
        value = "pass" if check.passed else f"fail: {check.detail}"
        pairs.append((check.name, value))
    pairs.append(("passed", format_bool(report.passed)))
    return render_lines(pairs)


def render_survey(result: SurveyResult, show_records: bool = False) -> str:
    pairs: list[tuple[str, object]] = [
        ("check", result.check.value),
        ("s", result.length),
        ("max_socle", result.max_socle),
    ]
    if result.trials is not None:
        pairs.extend([("trials", result.trials), ("seed", result.seed)])
    pairs.extend(
        [
            ("sequences", result.sequences),
            ("checked", result.checked),
            ("violations", len(result.violations)),
        ]
    )
    if show_records:
        pairs.extend(
            ("record", f"{record.degrees} {format_with_decimal(record.value)}")
            for record in result.records
        )
    for violation in result.violations:
        sequences = " ".join(str(d) for d in violation.sequences)
        values = " ".join(
            f"{name}={format_rational(value)}" for name, value in violation.values.items()
        )
        pairs.append(("violation", f"{sequences} {values}"))
    return render_lines(pairs)
