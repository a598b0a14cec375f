"""
Symmetric Functions Module
"""

from .functions import (
    complete_homogeneous,
    cross_difference,
    elementary,
    is_doubly_symmetric,
    is_symmetric,
    schur,
    vandermonde_double,
)

__all__ = [
    "complete_homogeneous",
    "cross_difference",
    "elementary",
    "is_doubly_symmetric",
    "is_symmetric",
    "schur",
    "vandermonde_double",
]
