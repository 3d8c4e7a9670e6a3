import argparse
import logging
import sys
from typing import Optional, Sequence, TextIO

from betti_bounds.cli import commands
from betti_bounds.cli.handlers import EXIT_INPUT_ERROR, handle_exception
from betti_bounds.config import load_config
from betti_bounds.exceptions import InvalidDegreeSequenceError
from betti_bounds.models import DegreeSequence, SurveyCheck
from betti_bounds.services import SurveyRunner
from betti_bounds.utils import get_version

logger = logging.getLogger(__name__)


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the input error code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def parse_degrees(text: str) -> DegreeSequence:
    try:
        degrees = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid degree list: {text!r}")
    try:
        return DegreeSequence(degrees)
    except InvalidDegreeSequenceError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="betti-bounds",
        description="Exact Betti table arithmetic, decompositions and multiplicity bounds.",
    )
    parser.add_argument("--version", action="version", version=get_version())
    subparsers = parser.add_subparsers(dest="command", required=True)

    pure = subparsers.add_parser("pure", help="Pure table of a degree sequence")
    pure.add_argument("--degrees", type=parse_degrees, required=True)
    pure.add_argument("--clear-denominators", action="store_true")
    pure.set_defaults(handler=commands.cmd_pure)

    dual = subparsers.add_parser("dual", help="Self-duality and reflected table")
    dual.add_argument("file")
    dual.set_defaults(handler=commands.cmd_dual)

    mult = subparsers.add_parser("mult", help="Peskine-Szpiro functionals and e")
    mult.add_argument("file")
    mult.add_argument(
        "--force", action="store_true", help="Report a formal multiplicity"
    )
    mult.set_defaults(handler=commands.cmd_mult)

    decompose = subparsers.add_parser("decompose", help="Greedy chain decomposition")
    decompose.add_argument("file")
    decompose.add_argument(
        "--symmetrized", action="store_true", help="Pair dual terms of a self-dual table"
    )
    decompose.set_defaults(handler=commands.cmd_decompose)

    verify = subparsers.add_parser("verify", help="Check a symmetrized decomposition")
    verify.add_argument("file")
    verify.add_argument("decomposition")
    verify.set_defaults(handler=commands.cmd_verify)

    bounds = subparsers.add_parser("bounds", help="Every applicable bound on e")
    bounds.add_argument("file")
    bounds.set_defaults(handler=commands.cmd_bounds)

    survey = subparsers.add_parser("survey", help="Survey an inequality over a range")
    survey.add_argument("--codim", type=int, required=True)
    survey.add_argument("--max-socle", type=int, required=True)
    survey.add_argument(
        "--check", choices=[c.value for c in SurveyCheck], required=True
    )
    survey.add_argument("--trials", type=int)
    survey.add_argument("--seed", type=int)
    survey.add_argument(
        "--records", action="store_true", help="List per-sequence values"
    )
    survey.set_defaults(handler=commands.cmd_survey)

    synth = subparsers.add_parser("synth", help="Table of a symmetrized decomposition")
    synth.add_argument("file")
    synth.set_defaults(handler=commands.cmd_synth)

    for subparser in subparsers.choices.values():
        subparser.add_argument("--json", action="store_true", help="Emit JSON")

    return parser


def run_cli(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one command and return its exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    try:
        config = load_config()
        runner = SurveyRunner.from_config(config)
        return args.handler(args, out=out, config=config, runner=runner)
    except Exception as exc:
        return handle_exception(exc, err)


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
