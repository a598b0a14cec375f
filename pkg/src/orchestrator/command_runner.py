"""
Command Runner Module
Single Responsibility: dispatch a validated Command to the engines and map
outcomes to exit codes (0 success, 1 input error, 2 precondition error)
"""

import random
from typing import NamedTuple, Optional

from pydantic import ValidationError

from src.algebra.polynomial import MultiPoly, coefficient_of
from src.compiler.expression_parser import (
    parse_expression,
    parse_monomial,
    parse_polynomial,
    render_class,
)
from src.execution.engine import IntegrationEngine
from src.execution.localization import LocalizationOracle
from src.identities.interpolation import (
    chen_louck_interpolate,
    power_sum_identity,
    prop1_coefficient,
    prop1_sum,
    theorem_double_lhs,
    theorem_double_rhs,
    theorem_main_lhs,
    theorem_main_rhs,
)
from src.models.commands import (
    BatchCommand,
    CoeffCommand,
    Command,
    ExpandCommand,
    IdentityCheckCommand,
    IntegrateCommand,
)
from src.models.grassmann import WeightVector
from src.models.reports import IdentityReport, IntegrationReport
from src.orchestrator.batch_orchestrator import BatchOrchestrator
from src.orchestrator.result_formatter import ResultFormatter
from src.utils.exceptions import InputError, KernelError, PreconditionError
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_PRECONDITION = 2


class CommandOutcome(NamedTuple):
    exit_code: int
    stdout: str
    stderr: str = ""


class CommandRunner:
    """Runs one command; never raises for kernel or validation errors"""

    def run(self, command: Command) -> CommandOutcome:
        as_json = command.output_format == "json"
        logger.info(f"Running command: {command.command}")
        try:
            if isinstance(command, IntegrateCommand):
                return CommandOutcome(EXIT_OK, self._integrate(command))
            if isinstance(command, IdentityCheckCommand):
                return CommandOutcome(EXIT_OK, self._identity(command))
            if isinstance(command, CoeffCommand):
                return CommandOutcome(EXIT_OK, self._coeff(command))
            if isinstance(command, ExpandCommand):
                return CommandOutcome(EXIT_OK, self._expand(command))
            if isinstance(command, BatchCommand):
                return self._batch(command)
            raise InputError(f"unknown command: {command!r}")

        except PreconditionError as e:
            logger.warning(f"Precondition failed: {type(e).__name__}: {e}")
            return self._failure(EXIT_PRECONDITION, e, as_json)
        except (KernelError, ValidationError) as e:
            logger.warning(f"Input error: {type(e).__name__}: {e}")
            return self._failure(EXIT_INPUT_ERROR, e, as_json)

    @staticmethod
    def _failure(code: int, error: BaseException, as_json: bool) -> CommandOutcome:
        line = ResultFormatter.format_error(error)
        stdout = ResultFormatter.format_error(error, as_json=True) if as_json else ""
        return CommandOutcome(code, stdout, line)

    # ==========================================
    # SUBCOMMANDS
    # ==========================================

    def _integrate(self, command: IntegrateCommand) -> str:
        integrand = parse_expression(command.expr)
        oracle = LocalizationOracle(command.spec)
        value = oracle.engine.integrate(integrand)
        certification = None
        if command.oracle_trials is not None:
            certification = oracle.certify_constant(
                integrand, command.oracle_trials, command.seed
            )
        if isinstance(integrand, MultiPoly):
            expression = str(integrand)
        else:
            expression = render_class(integrand)
        report = IntegrationReport(
            spec=command.spec,
            expression=expression,
            value=value,
            certification=certification,
        )
        return ResultFormatter.format_integration(report, command.output_format == "json")

    def _identity(self, command: IdentityCheckCommand) -> str:
        which = command.which
        n = command.n
        lambdas = command.lambdas
        if lambdas is None:
            lambdas = WeightVector.random(n, random.Random(command.seed))
        elif lambdas.n != n:
            raise InputError(f"-n {n} needs {n} weights, got {lambdas.n}")
        fmt = ResultFormatter.format_rational

        if which == "power_sum":
            if command.m is None:
                raise InputError("power_sum needs -m")
            sides = power_sum_identity(command.m, lambdas)
            lhs, rhs = fmt(sides.lhs), fmt(sides.rhs)
        else:
            poly = parse_polynomial(_require(command.poly, "a polynomial argument"))
            if which == "prop1":
                lhs = fmt(prop1_sum(poly, lambdas))
                rhs = fmt(prop1_coefficient(poly, n))
            else:
                k = _require(command.k, "-k")
                if which == "main":
                    lhs = fmt(theorem_main_lhs(poly, k, lambdas))
                    rhs = fmt(theorem_main_rhs(poly, k, n))
                elif which == "double":
                    lhs = fmt(theorem_double_lhs(poly, k, lambdas))
                    rhs = fmt(theorem_double_rhs(poly, k, n))
                else:
                    lhs = str(poly)
                    rhs = str(chen_louck_interpolate(poly, k, lambdas))

        report = IdentityReport(which=which, lhs=lhs, rhs=rhs, weights=str(lambdas))
        logger.info(f"identity {which}: lhs={lhs} rhs={rhs}")
        return ResultFormatter.format_identity(report, command.output_format == "json")

    def _coeff(self, command: CoeffCommand) -> str:
        poly = parse_polynomial(command.poly)
        monomial = parse_monomial(command.monomial)
        value = coefficient_of(poly, monomial)
        return ResultFormatter.format_coefficient(value, command.output_format == "json")

    def _expand(self, command: ExpandCommand) -> str:
        poly = IntegrationEngine(command.spec).polynomial(parse_expression(command.expr))
        return ResultFormatter.format_expansion(
            poly, command.spec, command.output_format == "json"
        )

    def _batch(self, command: BatchCommand) -> CommandOutcome:
        orchestrator = BatchOrchestrator(oracle_trials=command.oracle_trials, seed=command.seed)
        summary = orchestrator.run_corpus(command.corpus_path)
        text = ResultFormatter.format_summary(summary, command.output_format == "json")
        code = EXIT_OK if summary.fail_count == 0 and summary.error_count == 0 else EXIT_INPUT_ERROR
        return CommandOutcome(code, text)


def _require(value: Optional[object], what: str):
    if value is None:
        raise InputError(f"this identity needs {what}")
    return value


def run(command: Command) -> CommandOutcome:
    return CommandRunner().run(command)
