"""Command line front end.

Thin wrapper: arguments are validated into a JobConfig, the matching
report pipeline runs, and the rendered report goes to stdout.  The
process exit code is a function of the verdict only: 0 flat / holds /
all probes pass, 1 not flat / fails, 2 not integrable, 3 usage or
input errors.
"""

import argparse
import sys
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..fibration import FibrationError
from ..symexpr import DomainError, ParseError
from .documents import DocumentError, family_from_document, load_text, system_from_document
from .reports import (
    EXIT_USAGE,
    check_report,
    dual_report,
    fibration_report_model,
    render,
    structure_report,
)
from .selftest import run_selftest

_INPUT_COMMANDS = ("check", "dual", "verify-structure")


class JobConfig(BaseModel):
    """One fully validated invocation."""

    model_config = ConfigDict(extra="forbid")

    command: Literal["check", "dual", "verify-structure", "fibration", "selftest"]
    input: Optional[str] = None
    format: Literal["text", "json"] = "text"
    seed: int = Field(default=0, ge=0)
    level: Optional[Literal[9, 10, 11]] = None
    group: Optional[Literal["sl4", "scale", "compact"]] = None
    samples: int = Field(default=100, ge=1)
    quick: bool = False

    @model_validator(mode="after")
    def _field_couplings(self):
        if self.command in _INPUT_COMMANDS and self.input is None:
            raise ValueError("command %r needs an input file" % (self.command,))
        if self.command not in _INPUT_COMMANDS and self.input is not None:
            raise ValueError("command %r takes no input file" % (self.command,))
        if (self.level is not None) != (self.command == "verify-structure"):
            raise ValueError("--level goes with verify-structure, which requires it")
        if (self.group is not None) != (self.command == "fibration"):
            raise ValueError("--group goes with fibration, which requires it")
        return self


def run_job(config: JobConfig):
    """Dispatch one validated job to its pipeline; returns the report."""
    if config.command == "check":
        return check_report(system_from_document(load_text(config.input)))
    if config.command == "dual":
        return dual_report(family_from_document(load_text(config.input)))
    if config.command == "verify-structure":
        sys_ = system_from_document(load_text(config.input))
        return structure_report(sys_, config.level)
    if config.command == "fibration":
        return fibration_report_model(config.group, config.seed, config.samples)
    return run_selftest(seed=config.seed, quick=config.quick)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which collides with the
    # not-integrable verdict; route everything to the usage code
    def error(self, message):
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _unsigned(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _global_flags(parser, defaulted):
    # the same two flags are accepted before and after the subcommand;
    # only the top-level copies carry real defaults, so the subcommand
    # copies (default SUPPRESS) never overwrite an already parsed value
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text" if defaulted else argparse.SUPPRESS,
        help="report rendering (default text)",
    )
    parser.add_argument(
        "--seed",
        type=_unsigned,
        metavar="N",
        default=0 if defaulted else argparse.SUPPRESS,
        help="random seed for sampled checks (default 0)",
    )


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, defaulted=False)
    parser = _Parser(
        prog="scaleflat",
        description="flatness of second order PDE systems under scale symmetry",
    )
    _global_flags(parser, defaulted=True)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    check = sub.add_parser(
        "check",
        parents=[common],
        help="decide flatness of the system in FILE",
    )
    check.add_argument("input", metavar="FILE")

    dual = sub.add_parser(
        "dual",
        parents=[common],
        help="dual equation of the solution family in FILE",
    )
    dual.add_argument("input", metavar="FILE")

    structure = sub.add_parser(
        "verify-structure",
        parents=[common],
        help="verify one structure-equation identity exactly",
    )
    structure.add_argument(
        "--level", type=int, choices=(9, 10, 11), required=True
    )
    structure.add_argument("input", metavar="FILE")

    fibration = sub.add_parser(
        "fibration",
        parents=[common],
        help="numeric survey of one model symmetry group",
    )
    fibration.add_argument(
        "--group", choices=("sl4", "scale", "compact"), required=True
    )
    fibration.add_argument(
        "--samples", type=_positive, metavar="N", default=100
    )

    selftest = sub.add_parser(
        "selftest",
        parents=[common],
        help="run every property suite end to end",
    )
    selftest.add_argument(
        "--quick", action="store_true", help="smaller sample counts"
    )

    return parser


def main(argv=None):
    parser = build_parser()
    namespace = parser.parse_args(argv)
    try:
        config = JobConfig(**vars(namespace))
    except ValidationError as exc:
        first = exc.errors()[0]
        sys.stderr.write("%s: error: %s\n" % (parser.prog, first["msg"]))
        return EXIT_USAGE
    try:
        report = run_job(config)
    except DocumentError as exc:
        sys.stderr.write("%s: error: %s\n" % (parser.prog, exc))
        return EXIT_USAGE
    except (ParseError, DomainError, FibrationError) as exc:
        sys.stderr.write("%s: error: %s\n" % (parser.prog, exc))
        return EXIT_USAGE
    sys.stdout.write(render(report, config.format))
    return report.exit_code
