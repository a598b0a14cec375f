"""
Symmetric Function Constructors and Predicates
Elementary, complete homogeneous and Schur polynomials over arbitrary root lists,
plus the Vandermonde-type weights of the coefficient theorems
"""

import functools
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from src.algebra.polynomial import MultiPoly, Scalar, VarId, product
from src.models.grassmann import Partition
from src.utils.exceptions import NegativeIndex, PartitionTooLong
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

Root = Union[VarId, MultiPoly]
PartitionLike = Union[Partition, Sequence[int]]


def _as_polys(roots: Sequence[Root]) -> List[MultiPoly]:
    return [r if isinstance(r, MultiPoly) else MultiPoly.variable(r) for r in roots]


def _as_partition(lam: PartitionLike) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(parts=tuple(lam))


def elementary(i: int, roots: Sequence[Root]) -> MultiPoly:
    """
    e_i of the roots (variables or linear forms).

    Coefficients of prod(1 + r t) accumulated one root at a time, so linear
    forms cost no more than plain variables.
    """
    if i < 0:
        raise NegativeIndex(f"elementary symmetric index must be >= 0, got {i}")
    polys = _as_polys(roots)
    if i > len(polys):
        return MultiPoly.zero()
    coeffs = [MultiPoly.one()] + [MultiPoly.zero()] * i
    for r in polys:
        for j in range(i, 0, -1):
            coeffs[j] = coeffs[j] + r * coeffs[j - 1]
    return coeffs[i]


def complete_homogeneous(i: int, roots: Sequence[Root]) -> MultiPoly:
    """h_i of the roots; h_0 = 1 and h_i = 0 for i < 0"""
    if i < 0:
        return MultiPoly.zero()
    polys = _as_polys(roots)
    if not polys:
        return MultiPoly.one() if i == 0 else MultiPoly.zero()
    # coefficients of prod 1/(1 - r t), truncated at degree i
    coeffs = [MultiPoly.one()] + [MultiPoly.zero()] * i
    for r in polys:
        for j in range(1, i + 1):
            coeffs[j] = coeffs[j] + r * coeffs[j - 1]
    return coeffs[i]


def determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Exact determinant by cofactor expansion along the first row, memoised on column sets"""
    size = len(matrix)
    if size == 0:
        return MultiPoly.one()

    @functools.lru_cache(maxsize=None)
    def minor(row: int, columns: Tuple[int, ...]) -> MultiPoly:
        if row == size:
            return MultiPoly.one()
        total = MultiPoly.zero()
        for position, col in enumerate(columns):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            rest = columns[:position] + columns[position + 1 :]
            term = entry * minor(row + 1, rest)
            total = total - term if position % 2 else total + term
        return total

    return minor(0, tuple(range(size)))


def schur(lam: PartitionLike, roots: Sequence[Root]) -> MultiPoly:
    """s_lambda by Jacobi-Trudi: det[h_{lambda_i - i + j}]"""
    partition = _as_partition(lam)
    if partition.length > len(roots):
        raise PartitionTooLong(
            f"partition {partition} has {partition.length} parts but only {len(roots)} roots"
        )
    length = partition.length
    if length == 0:
        return MultiPoly.one()
    h_cache: Dict[int, MultiPoly] = {}

    def h(index: int) -> MultiPoly:
        if index not in h_cache:
            h_cache[index] = complete_homogeneous(index, roots)
        return h_cache[index]

    matrix = [
        [h(partition.parts[i] - i + j) for j in range(length)] for i in range(length)
    ]
    return determinant(matrix)


def _fraction_determinant(rows: List[List[Fraction]]) -> Fraction:
    size = len(rows)
    m = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def bialternant_value(lam: PartitionLike, values: Sequence[Scalar]) -> Fraction:
    """
    s_lambda at a point with distinct coordinates, as the ratio
    det[v_j^(lambda_i + l - i)] / det[v_j^(l - i)].
    """
    partition = _as_partition(lam)
    points = [Fraction(v) for v in values]
    size = len(points)
    if partition.length > size:
        raise PartitionTooLong(f"partition {partition} is longer than {size} values")
    if len(set(points)) != size:
        raise ValueError("bialternant needs pairwise distinct values")
    padded = partition.padded(size)
    numerator = [[v ** (padded[i] + size - 1 - i) for v in points] for i in range(size)]
    denominator = [[v ** (size - 1 - i) for v in points] for i in range(size)]
    return _fraction_determinant(numerator) / _fraction_determinant(denominator)


@functools.lru_cache(maxsize=64)
def vandermonde_double(variables: Tuple[Root, ...]) -> MultiPoly:
    """prod_i prod_{j != i} (v_i - v_j) = (-1)^{k(k-1)/2} * Vandermonde^2"""
    polys = _as_polys(variables)
    return product(
        polys[i] - polys[j] for i in range(len(polys)) for j in range(len(polys)) if i != j
    )


@functools.lru_cache(maxsize=64)
def cross_difference(yvars: Tuple[Root, ...], xvars: Tuple[Root, ...]) -> MultiPoly:
    """Y - X = prod_i prod_j (y_i - x_j)"""
    ys, xs = _as_polys(yvars), _as_polys(xvars)
    return product(y - x for y in ys for x in xs)


def _transposition_fixes(p: MultiPoly, variables: Sequence[VarId]) -> bool:
    for a, b in zip(variables, variables[1:]):
        if p.rename({a: b, b: a}) != p:
            logger.debug(f"polynomial changes under the swap {a} <-> {b}")
            return False
    return True


def is_symmetric(p: MultiPoly, variables: Sequence[VarId]) -> bool:
    """Fixed by every adjacent transposition of the alphabet (these generate S_k)"""
    return _transposition_fixes(p, variables)


def is_doubly_symmetric(
    p: MultiPoly, xvars: Sequence[VarId], yvars: Sequence[VarId]
) -> bool:
    return _transposition_fixes(p, xvars) and _transposition_fixes(p, yvars)
