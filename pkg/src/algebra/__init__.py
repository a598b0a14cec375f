"""
Algebra Module
"""

from .polynomial import (
    NEG_INFINITY,
    Monomial,
    MultiPoly,
    VarId,
    X,
    Y,
    Z,
    coefficient_of,
    degree_info,
    evaluate,
    homogeneous_components,
    poly_arith,
    render_polynomial,
)

__all__ = [
    "NEG_INFINITY",
    "Monomial",
    "MultiPoly",
    "VarId",
    "X",
    "Y",
    "Z",
    "coefficient_of",
    "degree_info",
    "evaluate",
    "homogeneous_components",
    "poly_arith",
    "render_polynomial",
]
