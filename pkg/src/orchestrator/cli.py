"""
Command-Line Interface
argparse front end: builds a Command model from argv, runs it, prints the result
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from pydantic import TypeAdapter, ValidationError

from src.models.commands import Command
from src.models.grassmann import WeightVector
from src.orchestrator.command_runner import EXIT_INPUT_ERROR, CommandRunner
from src.orchestrator.result_formatter import ResultFormatter
from src.utils.config import KernelSettings
from src.utils.exceptions import KernelError, InputError
from src.utils.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

_COMMAND_ADAPTER: TypeAdapter = TypeAdapter(Command)


class KernelArgumentParser(argparse.ArgumentParser):
    """Usage errors become InputError (exit 1) instead of argparse's exit 2"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(f"{self.prog}: {message}")


def build_parser(settings: KernelSettings) -> KernelArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"Random seed for weight vectors (default: $SEED or {settings.seed})",
    )
    common.add_argument("--json", action="store_true", help="Emit JSON instead of text")
    common.add_argument("--verbose", action="store_true", help="Log INFO messages to stderr")
    common.add_argument(
        "--no-log-file", action="store_true", help=f"Do not write {settings.log_dir}/kernel.log"
    )

    parser = KernelArgumentParser(
        prog="grassmann-kernel",
        description="Exact integrals over Grassmannians, certified by fixed-point localization",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    integrate = commands.add_parser("integrate", parents=[common], help="Integrate a class over G(k,n)")
    integrate.add_argument("-k", type=int, required=True)
    integrate.add_argument("-n", type=int, required=True)
    integrate.add_argument("expr", help='Class expression, e.g. "c(1,Q)^4"')
    integrate.add_argument(
        "--oracle", type=int, default=None, metavar="TRIALS",
        help="Certify with the localization sum at TRIALS random weight vectors",
    )

    identity = commands.add_parser("identity", parents=[common], help="Check an interpolation identity")
    identity.add_argument("which", choices=["prop1", "power_sum", "main", "double", "chen_louck"])
    identity.add_argument("-n", type=int, required=True)
    identity.add_argument("-k", type=int, default=None)
    identity.add_argument("-m", type=int, default=None)
    identity.add_argument("poly", nargs="?", default=None, help="Polynomial literal")
    identity.add_argument("--lambdas", default=None, help='Comma-separated weights, e.g. "0,1,5/2"')

    coeff = commands.add_parser("coeff", parents=[common], help="Coefficient of a monomial")
    coeff.add_argument("poly")
    coeff.add_argument("monomial")

    expand = commands.add_parser("expand", parents=[common], help="Expand a class in Chern roots")
    expand.add_argument("-k", type=int, required=True)
    expand.add_argument("-n", type=int, required=True)
    expand.add_argument("expr")

    batch = commands.add_parser("batch", parents=[common], help="Run a JSON corpus of integrals")
    batch.add_argument("corpus")
    batch.add_argument(
        "--oracle", type=int, default=settings.oracle_trials, metavar="TRIALS",
        help=f"Oracle trials per case (default: {settings.oracle_trials})",
    )
    return parser


def command_payload(args: argparse.Namespace, settings: KernelSettings) -> Dict[str, Any]:
    """Namespace -> dict accepted by the Command union"""
    seed = args.seed if args.seed is not None else settings.seed
    output_format = "json" if args.json else "text"

    if args.command == "integrate":
        return {
            "command": "integrate",
            "spec": {"k": args.k, "n": args.n},
            "expr": args.expr,
            "oracle_trials": args.oracle,
            "seed": seed,
            "output_format": output_format,
        }
    if args.command == "identity":
        return {
            "command": "identity",
            "which": args.which,
            "n": args.n,
            "k": args.k,
            "m": args.m,
            "poly": args.poly,
            "lambdas": WeightVector.parse(args.lambdas) if args.lambdas else None,
            "seed": seed,
            "output_format": output_format,
        }
    if args.command == "coeff":
        return {
            "command": "coeff",
            "poly": args.poly,
            "monomial": args.monomial,
            "output_format": output_format,
        }
    if args.command == "expand":
        return {
            "command": "expand",
            "spec": {"k": args.k, "n": args.n},
            "expr": args.expr,
            "output_format": output_format,
        }
    return {
        "command": "batch",
        "corpus_path": args.corpus,
        "oracle_trials": args.oracle,
        "seed": seed,
        "output_format": output_format,
    }


def main(argv: Optional[List[str]] = None, settings: Optional[KernelSettings] = None) -> int:
    """Entry point; returns the process exit code"""
    settings = settings or KernelSettings.from_env()
    argv = list(sys.argv[1:] if argv is None else argv)
    verbose = "--verbose" in argv
    setup_logging(
        log_dir=settings.log_dir,
        console_level=logging.INFO if verbose else settings.console_level,
        log_to_file="--no-log-file" not in argv,
    )
    as_json = "--json" in argv

    try:
        args = build_parser(settings).parse_args(argv)
        logger.info(f"Arguments: {vars(args)}")
        command = _COMMAND_ADAPTER.validate_python(command_payload(args, settings))
    except (KernelError, ValidationError) as e:
        logger.warning(f"Invalid command line: {type(e).__name__}: {e}")
        if as_json:
            print(ResultFormatter.format_error(e, as_json=True))
        print(ResultFormatter.format_error(e), file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        outcome = CommandRunner().run(command)
    except Exception as e:
        logger.critical(f"Fatal error: {type(e).__name__}: {e}", exc_info=True)
        print(ResultFormatter.format_error(e), file=sys.stderr)
        return EXIT_INPUT_ERROR

    if outcome.stdout:
        print(outcome.stdout)
    if outcome.stderr:
        print(outcome.stderr, file=sys.stderr)
    logger.info(f"Exit code {outcome.exit_code}")
    return outcome.exit_code
