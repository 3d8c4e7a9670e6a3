"""One function per subcommand; each writes to ``out`` and returns an exit code."""

import argparse
import logging
import sys
from fractions import Fraction
from math import gcd, lcm
from typing import TextIO

from betti_bounds.bounds import bounds_report, run_survey
from betti_bounds.cli.handlers import EXIT_OK, EXIT_VIOLATIONS
from betti_bounds.cli.output import (
    format_bool,
    render_bounds,
    render_lines,
    render_survey,
    render_verification,
)
from betti_bounds.config import BettiConfig
from betti_bounds.core import (
    dual_table,
    first_nonvanishing_functional,
    is_self_dual,
    multiplicity,
    ps_functionals,
    pure_table,
    shifts,
)
from betti_bounds.decomposition import (
    decompose_self_dual,
    es_decompose,
    synthesize,
    verify_decomposition,
)
from betti_bounds.exceptions import TableValidationError
from betti_bounds.io import (
    parse_decomposition,
    parse_table,
    serialize_decomposition,
    serialize_table,
)
from betti_bounds.models import BettiTable, SurveyCheck
from betti_bounds.serialization import dump_json
from betti_bounds.services import SurveyRunner
from betti_bounds.utils import format_rational, format_with_decimal

logger = logging.getLogger(__name__)


def read_input(path: str) -> str:
    """File contents, or standard input for '-'."""
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load_table(path: str) -> BettiTable:
    return parse_table(read_input(path))


def clearing_factor(table: BettiTable) -> Fraction:
    """Smallest positive rational turning every entry into an integer."""
    values = list(table.entries.values())
    denominators = lcm(*(v.denominator for v in values))
    numerators = gcd(*(v.numerator for v in values))
    return Fraction(denominators, numerators)


def cmd_pure(args: argparse.Namespace, out: TextIO, **_) -> int:
    table = pure_table(args.degrees)
    factor = Fraction(1)
    if args.clear_denominators:
        factor = clearing_factor(table)
        table = table.scaled(factor)
    if args.json:
        out.write(serialize_table(table, as_json=True))
        return EXIT_OK
    out.write(f"# pure table of {args.degrees}\n")
    if args.clear_denominators:
        out.write(f"# scaled by {format_rational(factor)}\n")
    out.write(serialize_table(table))
    return EXIT_OK


def cmd_dual(args: argparse.Namespace, out: TextIO, **_) -> int:
    table = _load_table(args.file)
    profile = shifts(table)
    duality = is_self_dual(table)
    try:
        reflected = dual_table(table, profile.length, profile.duality_degree)
        problem = None
    except TableValidationError as e:
        reflected = None
        problem = str(e)

    if args.json:
        out.write(
            dump_json(
                {
                    "length": profile.length,
                    "duality_degree": profile.duality_degree,
                    "self_dual": duality.self_dual,
                    "reflected": None
                    if reflected is None
                    else [
                        [i, j, format_rational(v)]
                        for i, j, v in reflected.sorted_entries()
                    ],
                }
            )
        )
        return EXIT_OK

    out.write(
        render_lines(
            [
                ("s", profile.length),
                ("N", profile.duality_degree),
                ("self_dual", format_bool(duality.self_dual)),
            ]
        )
    )
    if reflected is None:
        out.write(render_lines([("reflected", f"invalid: {problem}")]))
    else:
        out.write("# reflected table\n")
        out.write(serialize_table(reflected))
    return EXIT_OK


def cmd_mult(args: argparse.Namespace, out: TextIO, **_) -> int:
    table = _load_table(args.file)
    functionals = ps_functionals(table)
    value = multiplicity(table, force=args.force)
    formal = first_nonvanishing_functional(table) is not None

    if args.json:
        out.write(
            dump_json(
                {
                    "length": table.length,
                    "functionals": functionals,
                    "multiplicity": value,
                    "formal": formal,
                }
            )
        )
        return EXIT_OK

    pairs: list[tuple[str, object]] = [("s", table.length)]
    pairs.extend(
        (f"ps({index})", format_rational(v)) for index, v in enumerate(functionals)
    )
    pairs.append(("formal_multiplicity" if formal else "e", format_with_decimal(value)))
    out.write(render_lines(pairs))
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, out: TextIO, **_) -> int:
    table = _load_table(args.file)

    if args.symmetrized:
        decomposition = decompose_self_dual(table)
        if args.json:
            out.write(serialize_decomposition(decomposition))
            return EXIT_OK
        pairs: list[tuple[str, object]] = [
            ("s", table.length),
            ("N", decomposition.duality_degree),
            ("e", format_with_decimal(multiplicity(table))),
        ]
        for term in decomposition.terms:
            suffix = " self-dual" if term.self_dual else ""
            pairs.append(
                ("term", f"{term.degrees} {format_rational(term.coefficient)}{suffix}")
            )
        out.write(render_lines(pairs))
        return EXIT_OK

    chain = es_decompose(table)
    if args.json:
        out.write(dump_json(chain.model_dump(mode="json")))
        return EXIT_OK
    pairs = [("s", chain.length), ("e", format_with_decimal(multiplicity(table)))]
    pairs.extend(
        ("term", f"{term.degrees} {format_rational(term.coefficient)}")
        for term in chain.terms
    )
    out.write(render_lines(pairs))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, **_) -> int:
    table = _load_table(args.file)
    decomposition = parse_decomposition(read_input(args.decomposition))
    report = verify_decomposition(table, decomposition)
    if args.json:
        out.write(dump_json({**report.model_dump(mode="json"), "passed": report.passed}))
    else:
        out.write(render_verification(report))
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def cmd_bounds(args: argparse.Namespace, out: TextIO, **_) -> int:
    report = bounds_report(_load_table(args.file))
    if args.json:
        out.write(dump_json(report.model_dump(mode="json")))
    else:
        out.write(render_bounds(report))
    return EXIT_OK


def cmd_survey(
    args: argparse.Namespace, out: TextIO, config: BettiConfig, runner: SurveyRunner
) -> int:
    check = SurveyCheck(args.check)
    trials = args.trials if args.trials is not None else config.survey.default_trials
    seed = args.seed if args.seed is not None else config.survey.default_seed
    result = run_survey(
        check,
        args.codim,
        args.max_socle,
        trials=trials,
        seed=seed,
        max_terms=config.survey.max_terms,
        max_coefficient=config.survey.max_coefficient,
        runner=runner,
    )
    logger.info(
        "Survey %s finished with %d violations", check, len(result.violations)
    )
    if args.json:
        out.write(dump_json({**result.model_dump(mode="json"), "passed": result.passed}))
    else:
        out.write(render_survey(result, show_records=args.records))
    return EXIT_OK if result.passed else EXIT_VIOLATIONS


def cmd_synth(args: argparse.Namespace, out: TextIO, **_) -> int:
    decomposition = parse_decomposition(read_input(args.file))
    out.write(serialize_table(synthesize(decomposition), as_json=args.json))
    return EXIT_OK
