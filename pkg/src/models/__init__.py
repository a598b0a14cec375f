"""
Grassmannian Integral Kernel - Data Models
"""

from .commands import (
    BatchCommand,
    CoeffCommand,
    Command,
    ExpandCommand,
    IdentityCheckCommand,
    IntegrateCommand,
)
from .expressions import (
    BundleExpr,
    ChernClass,
    ClassExpr,
    ConstantClass,
    DualBundle,
    EulerClass,
    ExteriorPowerBundle,
    PowerClass,
    ProductClass,
    RootVariable,
    SchurClass,
    SumClass,
    SymmetricPowerBundle,
    TautologicalBundle,
    TensorBundle,
)
from .grassmann import (
    FixedPoint,
    GrassmannSpec,
    IndexSubset,
    Partition,
    WeightVector,
    box_partitions,
)
from .reports import (
    BatchSummary,
    CaseResult,
    CertificationReport,
    CorpusCase,
    IdentityReport,
    IntegrationReport,
)

__all__ = [
    "BatchCommand",
    "CoeffCommand",
    "Command",
    "ExpandCommand",
    "IdentityCheckCommand",
    "IntegrateCommand",
    "BundleExpr",
    "ChernClass",
    "ClassExpr",
    "ConstantClass",
    "DualBundle",
    "EulerClass",
    "ExteriorPowerBundle",
    "PowerClass",
    "ProductClass",
    "RootVariable",
    "SchurClass",
    "SumClass",
    "SymmetricPowerBundle",
    "TautologicalBundle",
    "TensorBundle",
    "FixedPoint",
    "GrassmannSpec",
    "IndexSubset",
    "Partition",
    "WeightVector",
    "box_partitions",
    "BatchSummary",
    "CaseResult",
    "CertificationReport",
    "CorpusCase",
    "IdentityReport",
    "IntegrationReport",
]
