"""
Batch Orchestrator Module
Runs a corpus of integrals through the formula engine and the localization oracle
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import List

from pydantic import TypeAdapter, ValidationError

from src.compiler.expression_parser import parse_expression
from src.execution.localization import LocalizationOracle
from src.models.grassmann import GrassmannSpec
from src.models.reports import BatchSummary, CaseResult, CorpusCase
from src.orchestrator.result_formatter import ResultFormatter
from src.utils.exceptions import InputError, KernelError
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

_CORPUS_ADAPTER = TypeAdapter(List[CorpusCase])


class BatchOrchestrator:
    """
    Evaluates every corpus case twice and compares.

    Workflow per case:
    1. Validate G(k,n) and parse the expression
    2. Integrate by coefficient extraction
    3. Certify with the fixed-point sum at seeded random weights
    4. Compare formula, oracle and the expected value (or expected error)
    """

    def __init__(self, oracle_trials: int = 3, seed: int = 0):
        logger.info(f"Initializing BatchOrchestrator (trials={oracle_trials}, seed={seed})")
        self.oracle_trials = oracle_trials
        self.seed = seed

    @staticmethod
    def load_corpus(corpus_path: str) -> List[CorpusCase]:
        """
        Reads a JSON list of {name, k, n, expr, expected?, expect_error?}.

        Raises:
            InputError: missing file, invalid JSON or invalid entries
        """
        path = Path(corpus_path)
        if not path.is_file():
            raise InputError(f"corpus file not found: {corpus_path}")
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            cases = _CORPUS_ADAPTER.validate_python(raw)
        except json.JSONDecodeError as e:
            raise InputError(f"corpus {corpus_path} is not valid JSON: {e}") from e
        except ValidationError as e:
            raise InputError(f"corpus {corpus_path} has invalid entries: {e}") from e
        logger.info(f"Loaded {len(cases)} corpus cases from {corpus_path}")
        return cases

    def run_corpus(self, corpus_path: str) -> BatchSummary:
        """Main entry point: runs every case and aggregates a summary"""
        cases = self.load_corpus(corpus_path)
        results = [self.run_case(case) for case in cases]
        summary = ResultFormatter.generate_summary(results)
        logger.info(
            f"Batch complete: {summary.pass_count} pass, {summary.fail_count} fail, "
            f"{summary.error_count} error"
        )
        return summary

    def run_case(self, case: CorpusCase) -> CaseResult:
        logger.info(f"Running corpus case: {case.name}")
        try:
            spec = GrassmannSpec(k=case.k, n=case.n)
            integrand = parse_expression(case.expr)
            oracle = LocalizationOracle(spec)
            value = oracle.engine.integrate(integrand)
            certification = oracle.certify_constant(integrand, self.oracle_trials, self.seed)
        except (KernelError, ValidationError) as e:
            kind = type(e).__name__
            if case.expect_error is not None and kind == case.expect_error:
                logger.debug(f"{case.name}: raised the expected {kind}")
                return ResultFormatter.format_case_result(
                    case.name, "PASS", error=f"raised {kind} as expected"
                )
            logger.error(f"Case {case.name} failed: {kind}: {e}")
            return ResultFormatter.format_case_result(
                case.name, "ERROR", error=f"{kind}: {e}"
            )

        if case.expect_error is not None:
            return ResultFormatter.format_case_result(
                case.name,
                "FAIL",
                value=value,
                oracle_value=certification.value,
                error=f"expected {case.expect_error}, got a value",
            )

        agrees = certification.value == value
        if case.expected is not None:
            agrees = agrees and Fraction(case.expected) == value
        verdict = "PASS" if agrees else "FAIL"
        if not agrees:
            logger.warning(
                f"{case.name}: formula {value}, oracle {certification.value}, expected {case.expected}"
            )
        return ResultFormatter.format_case_result(
            case.name,
            verdict,
            value=value,
            oracle_value=certification.value,
            expected=case.expected,
        )
