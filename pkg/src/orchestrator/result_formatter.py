"""
Result Formatter Module
Single Responsibility: render results, errors and batch summaries as text or JSON
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from src.algebra.polynomial import MultiPoly
from src.models.grassmann import GrassmannSpec
from src.models.reports import BatchSummary, CaseResult, IdentityReport, IntegrationReport
from src.utils.logging_config import get_logger

logger = get_logger(__name__)


class ResultFormatter:
    """
    Formats kernel results.
    Pure formatting - no mathematics. Every method returns the exact text
    to print, so repeated runs with the same seed are byte-identical.
    """

    @staticmethod
    def format_rational(value: Fraction) -> str:
        """"p/q" in lowest terms, or just "p" for integers"""
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    @staticmethod
    def _spec_payload(spec: GrassmannSpec) -> Dict[str, int]:
        return {"k": spec.k, "n": spec.n}

    @staticmethod
    def _dump(payload: Dict[str, Any]) -> str:
        return json.dumps(payload, sort_keys=False)

    # ==========================================
    # SINGLE COMMANDS
    # ==========================================

    @staticmethod
    def format_integration(report: IntegrationReport, as_json: bool = False) -> str:
        """
        Text: the value, plus one oracle line when certification ran.
        JSON: {"value": "p/q", "oracle": {"trials": t, "agree": bool} | null, "spec": {"k": K, "n": N}}
        """
        value = ResultFormatter.format_rational(report.value)
        certification = report.certification
        if as_json:
            oracle = None
            if certification is not None:
                oracle = {"trials": certification.trials, "agree": report.oracle_agrees}
            return ResultFormatter._dump(
                {
                    "value": value,
                    "oracle": oracle,
                    "spec": ResultFormatter._spec_payload(report.spec),
                }
            )
        lines = [value]
        if certification is not None:
            verdict = "agree" if report.oracle_agrees else "DISAGREE"
            lines.append(
                f"oracle: {ResultFormatter.format_rational(certification.value)} "
                f"over {certification.trials} trials (seed {certification.seed}): {verdict}"
            )
        return "\n".join(lines)

    @staticmethod
    def format_identity(report: IdentityReport, as_json: bool = False) -> str:
        verdict = "equal" if report.equal else "unequal"
        if as_json:
            return ResultFormatter._dump(
                {
                    "which": report.which,
                    "lhs": report.lhs,
                    "rhs": report.rhs,
                    "lambdas": report.weights,
                    "verdict": verdict,
                }
            )
        lines = []
        if report.weights is not None:
            lines.append(f"lambdas: {report.weights}")
        lines.append(f"lhs: {report.lhs}")
        lines.append(f"rhs: {report.rhs}")
        lines.append(f"VERDICT: {verdict}")
        return "\n".join(lines)

    @staticmethod
    def format_coefficient(value: Fraction, as_json: bool = False) -> str:
        text = ResultFormatter.format_rational(value)
        return ResultFormatter._dump({"value": text}) if as_json else text

    @staticmethod
    def format_expansion(
        poly: MultiPoly, spec: GrassmannSpec, as_json: bool = False
    ) -> str:
        text = str(poly)
        if as_json:
            return ResultFormatter._dump(
                {"polynomial": text, "spec": ResultFormatter._spec_payload(spec)}
            )
        return text

    @staticmethod
    def format_error(error: BaseException, as_json: bool = False) -> str:
        """One line for stderr, or a JSON error object for stdout"""
        kind = type(error).__name__
        message = str(error).strip().replace("\n", "; ")
        if as_json:
            return ResultFormatter._dump({"error": {"type": kind, "message": message}})
        return f"error: {kind}: {message}"

    # ==========================================
    # BATCH RUNS
    # ==========================================

    @staticmethod
    def format_case_result(
        name: str,
        verdict: str,
        value: Optional[Fraction] = None,
        oracle_value: Optional[Fraction] = None,
        expected: Optional[str] = None,
        error: Optional[str] = None,
    ) -> CaseResult:
        """
        Creates a standardized case result.

        Args:
            name: Corpus case name
            verdict: PASS/FAIL/ERROR
            value: Formula value (PASS/FAIL)
            oracle_value: Localization value (PASS/FAIL)
            expected: Expected value from the corpus, if any
            error: Error text (ERROR, or an expected error that did not occur)
        """
        fmt = ResultFormatter.format_rational
        return CaseResult(
            name=name,
            verdict=verdict,  # type: ignore[arg-type]
            value=fmt(value) if value is not None else None,
            oracle_value=fmt(oracle_value) if oracle_value is not None else None,
            expected=expected,
            error=error,
        )

    @staticmethod
    def case_line(result: CaseResult) -> str:
        marker = {"PASS": "✅", "FAIL": "❌", "ERROR": "⚠️"}.get(result.verdict, "❓")
        if result.verdict == "ERROR" or result.value is None:
            detail = result.error or "unknown error"
        else:
            detail = f"formula={result.value} oracle={result.oracle_value}"
            if result.expected is not None:
                detail += f" expected={result.expected}"
        return f"{marker} {result.verdict:<5} {result.name}: {detail}"

    @staticmethod
    def generate_summary(results: List[CaseResult]) -> BatchSummary:
        """Aggregates case results into summary statistics"""
        return BatchSummary(
            total_cases=len(results),
            pass_count=sum(1 for r in results if r.verdict == "PASS"),
            fail_count=sum(1 for r in results if r.verdict == "FAIL"),
            error_count=sum(1 for r in results if r.verdict == "ERROR"),
            results=results,
        )

    @staticmethod
    def format_summary(summary: BatchSummary, as_json: bool = False) -> str:
        if as_json:
            return summary.model_dump_json()
        lines = [ResultFormatter.case_line(r) for r in summary.results]
        lines.extend(
            [
                "=" * 60,
                "📊 BATCH SUMMARY",
                "=" * 60,
                f"Total Cases:  {summary.total_cases}",
                f"  ✅ PASS:    {summary.pass_count}",
                f"  ❌ FAIL:    {summary.fail_count}",
                f"  ⚠️  ERROR:   {summary.error_count}",
                "=" * 60,
            ]
        )
        return "\n".join(lines)
