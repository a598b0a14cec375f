"""
Interpolation Identities Module
"""

from .interpolation import (
    IdentitySides,
    chen_louck_interpolate,
    lagrange_basis,
    lagrange_interpolate,
    power_sum_identity,
    prop1_sum,
    remark_coefficient,
    theorem_double_lhs,
    theorem_double_rhs,
    theorem_main_lhs,
    theorem_main_rhs,
)

__all__ = [
    "IdentitySides",
    "chen_louck_interpolate",
    "lagrange_basis",
    "lagrange_interpolate",
    "power_sum_identity",
    "prop1_sum",
    "remark_coefficient",
    "theorem_double_lhs",
    "theorem_double_rhs",
    "theorem_main_lhs",
    "theorem_main_rhs",
]
