"""
CLI Command Models
One discriminated union member per subcommand; argparse output is validated into these
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt

from src.models.grassmann import GrassmannSpec, WeightVector

OutputFormat = Literal["text", "json"]


class IntegrateCommand(BaseModel):
    """integrate -k K -n N "EXPR" [--oracle TRIALS] [--seed SEED] [--json]"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["integrate"] = "integrate"
    spec: GrassmannSpec
    expr: str
    oracle_trials: Optional[int] = Field(default=None, ge=2)
    seed: int
    output_format: OutputFormat = "text"


class IdentityCheckCommand(BaseModel):
    """identity WHICH -n N [-k K] [-m M] [POLY] [--lambdas L1,L2,...]"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["identity"] = "identity"
    which: Literal["prop1", "power_sum", "main", "double", "chen_louck"]
    n: PositiveInt
    k: Optional[PositiveInt] = None
    m: Optional[NonNegativeInt] = None
    poly: Optional[str] = None
    lambdas: Optional[WeightVector] = None
    seed: int
    output_format: OutputFormat = "text"


class CoeffCommand(BaseModel):
    """coeff "POLY" "MONOMIAL" """

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["coeff"] = "coeff"
    poly: str
    monomial: str
    output_format: OutputFormat = "text"


class ExpandCommand(BaseModel):
    """expand -k K -n N "EXPR" """

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["expand"] = "expand"
    spec: GrassmannSpec
    expr: str
    output_format: OutputFormat = "text"


class BatchCommand(BaseModel):
    """batch CORPUS.json [--oracle TRIALS] [--seed SEED]"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["batch"] = "batch"
    corpus_path: str
    oracle_trials: int = Field(default=3, ge=2)
    seed: int
    output_format: OutputFormat = "text"


Command = Annotated[
    Union[
        IntegrateCommand,
        IdentityCheckCommand,
        CoeffCommand,
        ExpandCommand,
        BatchCommand,
    ],
    Field(discriminator="command"),
]
