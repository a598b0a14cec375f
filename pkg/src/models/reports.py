"""
Result records produced by the engines and consumed by the result formatter
"""

from fractions import Fraction
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.models.grassmann import GrassmannSpec, WeightVector


class CertificationReport(BaseModel):
    """Outcome of running the localization sum at several weight vectors"""

    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    spec: GrassmannSpec
    value: Fraction
    trials: int = Field(ge=2)
    seed: int
    weight_vectors: Tuple[WeightVector, ...]


class IntegrationReport(BaseModel):
    """Formula value, optionally certified by the localization oracle"""

    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    spec: GrassmannSpec
    expression: str
    value: Fraction
    certification: Optional[CertificationReport] = None

    @property
    def oracle_agrees(self) -> Optional[bool]:
        if self.certification is None:
            return None
        return self.certification.value == self.value


class IdentityReport(BaseModel):
    """Both sides of an identity, rendered canonically"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    which: str
    lhs: str
    rhs: str
    weights: Optional[str] = None

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


class CorpusCase(BaseModel):
    """One entry of a batch corpus file"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    k: int
    n: int
    expr: str
    expected: Optional[str] = None
    expect_error: Optional[str] = None

    @field_validator("expected")
    @classmethod
    def _rational_text(cls, expected: Optional[str]) -> Optional[str]:
        if expected is not None:
            try:
                Fraction(expected)
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"expected must be a rational like 27 or 3/2: {expected!r}") from e
        return expected


class CaseResult(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str
    verdict: Literal["PASS", "FAIL", "ERROR"]
    value: Optional[str] = None
    oracle_value: Optional[str] = None
    expected: Optional[str] = None
    error: Optional[str] = None


class BatchSummary(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    total_cases: int
    pass_count: int
    fail_count: int
    error_count: int
    results: List[CaseResult]
