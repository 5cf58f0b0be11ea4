"""
Command line for the splitting calculus:

    eval      Morse-Novikov number of a knot expression
    validate  check a `.ghs` complex and print h, j and its body census
    scenario  replay a scripted proof from the fixtures (--record prints
              the MoveRecord line of each replayed move)
    fuzz      random invariant testing of the moves
    realize   print a complex realizing an expression's upper bound

Exit codes: 0 ok, 1 invalid or failed check, 2 parse or usage error,
3 evaluation error.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from constants.rules import ExitCode
from dtos.configurations.app import FuzzConfigurationDTO
from errors.constructions import ConstructionError
from errors.knots import (
    EvaluationError,
    ExprSyntaxError,
    ExprValidationError,
    TableError,
)
from errors.scenario import ScenarioError
from errors.splitting_complex import ComplexParseError
from repositories.complex import ComplexRepository
from repositories.table import TableRepository
from services.complex.census import CensusService
from services.complex.serialize import SerializeComplexService
from services.complex.validate import ComplexValidationService
from services.constructions.realize import RealizeService
from services.evaluator.evaluate import EvaluateExprService
from services.evaluator.parse import ParseExprService
from services.evaluator.report import format_human, format_machine
from services.fuzz.run import FuzzService
from services.scenario.replay import SCENARIOS, ReplayScenarioService

from start_utils import app_configuration, logger, resolve_path


def cli_path(value: str) -> Path:
    """
    Paths given on the command line are relative to the working
    directory; configured defaults are relative to the project root.
    """
    path = Path(value)
    return path.resolve() if path.exists() else resolve_path(value)


def build_parser() -> argparse.ArgumentParser:
    fuzz = app_configuration.fuzz
    parser = argparse.ArgumentParser(
        prog="ghs",
        description="Circular generalized Heegaard splitting calculus.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="evaluate a knot expression")
    evaluate.add_argument("expr", help='expression, e.g. "3_1 # 5_2"')
    evaluate.add_argument("--table", default=app_configuration.default_table)
    evaluate.add_argument("--machine", action="store_true")

    validate = commands.add_parser("validate", help="validate a .ghs file")
    validate.add_argument("path")

    scenario = commands.add_parser("scenario", help="replay a proof")
    scenario.add_argument("name", choices=SCENARIOS)
    scenario.add_argument(
        "--fixture-dir", default=app_configuration.fixture_dir
    )
    scenario.add_argument(
        "--record",
        action="store_true",
        help="print the move records instead of the replay log",
    )

    fuzzing = commands.add_parser("fuzz", help="fuzz move invariants")
    fuzzing.add_argument("--trials", type=int, default=fuzz.trials)
    fuzzing.add_argument("--seed", type=int, default=fuzz.seed)
    fuzzing.add_argument("--max-moves", type=int, default=fuzz.max_moves)
    fuzzing.add_argument("--jobs", type=int, default=fuzz.jobs)
    fuzzing.add_argument(
        "--no-progress", action="store_true", help="hide the progress bar"
    )

    realize = commands.add_parser("realize", help="print a realizing complex")
    realize.add_argument("expr")
    realize.add_argument("--table", default=app_configuration.default_table)
    return parser


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        table = TableRepository().get(cli_path(args.table))
        expr = ParseExprService().run(args.expr)
    except (ExprSyntaxError, TableError, OSError) as error:
        print(error, file=sys.stderr)
        return ExitCode.PARSE
    except ExprValidationError as error:
        print(error, file=sys.stderr)
        return ExitCode.EVALUATION
    try:
        evaluation = EvaluateExprService().run(expr, table)
    except EvaluationError as error:
        print(error, file=sys.stderr)
        return ExitCode.EVALUATION
    formatter = format_machine if args.machine else format_human
    sys.stdout.write(formatter(evaluation))
    return ExitCode.OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        complex_ = ComplexRepository().get(cli_path(args.path))
    except (ComplexParseError, OSError) as error:
        print(error, file=sys.stderr)
        return ExitCode.PARSE
    violations = ComplexValidationService().run(complex_)
    if violations:
        noun = "violation" if len(violations) == 1 else "violations"
        print(f"invalid; {len(violations)} {noun}")
        for violation in violations:
            print(f"  {violation}")
        return ExitCode.INVALID
    census = CensusService().run(complex_)
    kinds = f"{census.trivial} trivial"
    if census.handlebodies:
        kinds += f", {census.handlebodies} handlebodies"
    print(
        f"valid; h={census.handle_number} j={census.handle_index}; "
        f"{census.bodies} bodies ({kinds})"
    )
    return ExitCode.OK


def cmd_scenario(args: argparse.Namespace) -> int:
    try:
        report = ReplayScenarioService(
            str(cli_path(args.fixture_dir))
        ).run(args.name)
    except (ScenarioError, ComplexParseError, OSError) as error:
        print(error, file=sys.stderr)
        return ExitCode.PARSE
    for line in report.records if args.record else report.lines:
        print(line)
    for failure in report.failures:
        print(f"FAILED {failure}")
    print(f"scenario {report.name}: {'passed' if report.passed else 'failed'}")
    return ExitCode.OK if report.passed else ExitCode.INVALID


def cmd_fuzz(args: argparse.Namespace) -> int:
    if args.trials < 1 or args.max_moves < 0 or args.jobs < 1:
        print("trials and jobs must be >= 1, max-moves >= 0", file=sys.stderr)
        return ExitCode.PARSE
    config = FuzzConfigurationDTO(
        **{
            **app_configuration.fuzz.model_dump(),
            "trials": args.trials,
            "seed": args.seed,
            "max_moves": args.max_moves,
            "jobs": args.jobs,
        }
    )
    report = FuzzService(config, progress=not args.no_progress).run()
    sys.stdout.write(report.to_text())
    return ExitCode.INVALID if report.violations else ExitCode.OK


def cmd_realize(args: argparse.Namespace) -> int:
    try:
        table = TableRepository().get(cli_path(args.table))
        expr = ParseExprService().run(args.expr)
    except (ExprSyntaxError, TableError, OSError) as error:
        print(error, file=sys.stderr)
        return ExitCode.PARSE
    except ExprValidationError as error:
        print(error, file=sys.stderr)
        return ExitCode.EVALUATION
    try:
        complex_ = RealizeService().run(expr, table)
    except ConstructionError as error:
        print(error, file=sys.stderr)
        return ExitCode.EVALUATION
    census = CensusService().run(complex_)
    sys.stdout.write(SerializeComplexService().run(complex_))
    print(f"# h={census.handle_number} j={census.handle_index}")
    return ExitCode.OK


COMMANDS = {
    "eval": cmd_eval,
    "validate": cmd_validate,
    "scenario": cmd_scenario,
    "fuzz": cmd_fuzz,
    "realize": cmd_realize,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return ExitCode.PARSE if exit_.code else ExitCode.OK
    logger.debug(f"running command {args.command}")
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
