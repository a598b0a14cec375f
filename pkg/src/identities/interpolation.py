"""
Interpolation Identities
Lagrange interpolation, the power-sum identity, and both sides of the
symmetric / doubly symmetric coefficient theorems, certified at rational points
"""

import functools
import math
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple

from src.algebra.polynomial import (
    Monomial,
    MultiPoly,
    Scalar,
    VarId,
    Z,
    coefficient_of,
    coefficient_of_product,
    degree_info,
    evaluate,
    x_vars,
    y_vars,
)
from src.models.grassmann import GrassmannSpec, IndexSubset, WeightVector
from src.symmetric.functions import (
    complete_homogeneous,
    cross_difference,
    is_doubly_symmetric,
    is_symmetric,
    vandermonde_double,
)
from src.utils.exceptions import (
    DegreeTooHigh,
    IndexOutOfRange,
    InputError,
    NotDoublySymmetric,
    NotSymmetric,
    PartialDegreeTooHigh,
)
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

ZVAR = Z()


class IdentitySides(NamedTuple):
    lhs: Fraction
    rhs: Fraction


# ==========================================
# HELPERS
# ==========================================


def _require_variables(p: MultiPoly, allowed: Iterable[VarId], context: str) -> None:
    permitted = set(allowed)
    stray = [v for v in p.variables() if v not in permitted]
    if stray:
        names = ", ".join(str(v) for v in stray)
        raise IndexOutOfRange(f"{context}: variables {names} are outside the allowed alphabet")


def _require_degree(p: MultiPoly, bound: int, context: str) -> None:
    degree = p.total_degree
    if degree > bound:
        logger.warning(f"{context}: degree {degree} exceeds {bound}")
        raise DegreeTooHigh(f"{context}: degree {degree} exceeds the bound {bound}")


def _substitution(variables: Sequence[VarId], values: Sequence[Fraction]) -> Dict[VarId, Fraction]:
    return dict(zip(variables, values))


def cross_weight(subset: IndexSubset, lambdas: WeightVector) -> Fraction:
    """lambda_I - lambda_{I^c} = prod_{i in I} prod_{j in I^c} (lambda_i - lambda_j)"""
    total = Fraction(1)
    for i in subset.members:
        li = lambdas.value(i)
        for j in subset.complement:
            total *= li - lambdas.value(j)
    return total


def _spec(k: int, n: int) -> GrassmannSpec:
    # validates 0 < k < n
    return GrassmannSpec(k=k, n=n)


# ==========================================
# LAGRANGE INTERPOLATION
# ==========================================


def lagrange_basis(i: int, lambdas: WeightVector) -> MultiPoly:
    """L_i(z) = prod_{j != i} (z - lambda_j) / (lambda_i - lambda_j)"""
    n = lambdas.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"Lagrange index {i} is outside 1..{n}")
    li = lambdas.value(i)
    basis = MultiPoly.one()
    for j in range(1, n + 1):
        if j == i:
            continue
        lj = lambdas.value(j)
        basis = basis * MultiPoly.linear_form({ZVAR: 1}, -lj) * (1 / (li - lj))
    return basis


def lagrange_interpolate(values: Sequence[Scalar], lambdas: WeightVector) -> MultiPoly:
    """Unique polynomial of degree <= n-1 in z through (lambda_i, values_i)"""
    if len(values) != lambdas.n:
        raise InputError(f"expected {lambdas.n} values, got {len(values)}")
    result = MultiPoly.zero()
    for i, value in enumerate(values, start=1):
        if value:
            result = result + lagrange_basis(i, lambdas) * Fraction(value)
    return result


def power_sum_identity(m: int, lambdas: WeightVector) -> IdentitySides:
    """
    sum_i lambda_i^m / prod_{j != i}(lambda_i - lambda_j) against h_{m-n+1}(lambda).
    """
    n = lambdas.n
    if m < 0:
        raise InputError(f"power m must be >= 0, got {m}")
    if n < 2:
        raise InputError("the power-sum identity needs n >= 2")
    lhs = Fraction(0)
    for i in range(1, n + 1):
        li = lambdas.value(i)
        denominator = Fraction(1)
        for j in range(1, n + 1):
            if j != i:
                denominator *= li - lambdas.value(j)
        lhs += li**m / denominator
    variables = [VarId("z", i) for i in range(1, n + 1)]
    h = complete_homogeneous(m - n + 1, variables)
    rhs = evaluate(h, _substitution(variables, lambdas.values))
    return IdentitySides(lhs, rhs)


def prop1_sum(p: MultiPoly, lambdas: WeightVector) -> Fraction:
    """sum_i p(lambda_i) / prod_{j != i}(lambda_i - lambda_j) for p in z of degree <= n-1"""
    n = lambdas.n
    _require_variables(p, [ZVAR], "prop1_sum")
    _require_degree(p, n - 1, "prop1_sum")
    total = Fraction(0)
    for i in range(1, n + 1):
        li = lambdas.value(i)
        denominator = Fraction(1)
        for j in range(1, n + 1):
            if j != i:
                denominator *= li - lambdas.value(j)
        total += evaluate(p, {ZVAR: li}) / denominator
    return total


def prop1_coefficient(p: MultiPoly, n: int) -> Fraction:
    """Coefficient of z^{n-1}, the value prop1_sum must reproduce"""
    return coefficient_of(p, Monomial({ZVAR: n - 1}) if n > 1 else Monomial())


# ==========================================
# SYMMETRIC COEFFICIENT THEOREM
# ==========================================


def _check_symmetric(p: MultiPoly, k: int, n: int, context: str) -> None:
    _spec(k, n)
    xs = x_vars(k)
    _require_variables(p, xs, context)
    if not is_symmetric(p, xs):
        logger.warning(f"{context}: integrand is not symmetric in x1..x{k}")
        raise NotSymmetric(f"{context}: polynomial is not symmetric in x1..x{k}")
    _require_degree(p, k * (n - k), context)


def theorem_main_lhs(p: MultiPoly, k: int, lambdas: WeightVector) -> Fraction:
    """sum over |I| = k of P(lambda_I) / (lambda_I - lambda_{I^c})"""
    n = lambdas.n
    _check_symmetric(p, k, n, "theorem_main_lhs")
    xs = x_vars(k)
    total = Fraction(0)
    for subset in IndexSubset.colex(k, n):
        point = _substitution(xs, lambdas.restrict(subset.members))
        total += evaluate(p, point) / cross_weight(subset, lambdas)
    logger.debug(f"theorem_main_lhs k={k} n={n}: {total}")
    return total


def main_coefficient(p: MultiPoly, k: int, n: int) -> Fraction:
    """c(k,n): coefficient of x1^{n-1}...xk^{n-1} in P * prod_i prod_{j != i}(x_i - x_j)"""
    xs = x_vars(k)
    target = Monomial.power_product(xs, n - 1)
    return coefficient_of_product(p, vandermonde_double(xs), target)


def theorem_main_rhs(p: MultiPoly, k: int, n: int) -> Fraction:
    """c(k,n) / k!"""
    _check_symmetric(p, k, n, "theorem_main_rhs")
    c = main_coefficient(p, k, n)
    logger.debug(f"c({k},{n}) = {c}")
    return c / math.factorial(k)


def remark_coefficient(p: MultiPoly, k: int, n: int) -> Fraction:
    """
    Coefficient of x1^{n-k}...xk^{n-k} in P. When every partial degree is at
    most n-k this equals the theorem sum, i.e. c(k,n) = remark_coefficient * k!.
    """
    _check_symmetric(p, k, n, "remark_coefficient")
    _require_partial_degrees(p, n - k, "remark_coefficient")
    return coefficient_of(p, Monomial.power_product(x_vars(k), n - k))


def _require_partial_degrees(p: MultiPoly, bound: int, context: str) -> None:
    for var, exp in degree_info(p).partial_degrees.items():
        if exp > bound:
            raise PartialDegreeTooHigh(
                f"{context}: partial degree {exp} in {var} exceeds {bound}"
            )


# ==========================================
# DOUBLY SYMMETRIC COEFFICIENT THEOREM
# ==========================================


def _check_doubly_symmetric(p: MultiPoly, k: int, n: int, context: str) -> None:
    _spec(k, n)
    xs, ys = x_vars(k), y_vars(n - k)
    _require_variables(p, xs + ys, context)
    if not is_doubly_symmetric(p, xs, ys):
        logger.warning(f"{context}: integrand is not doubly symmetric")
        raise NotDoublySymmetric(
            f"{context}: polynomial is not symmetric in x1..x{k} and y1..y{n - k} separately"
        )
    _require_degree(p, k * (n - k), context)


def theorem_double_lhs(p: MultiPoly, k: int, lambdas: WeightVector) -> Fraction:
    """sum over |I| = k of P(lambda_I, lambda_{I^c}) / (lambda_I - lambda_{I^c})"""
    n = lambdas.n
    _check_doubly_symmetric(p, k, n, "theorem_double_lhs")
    xs, ys = x_vars(k), y_vars(n - k)
    total = Fraction(0)
    for subset in IndexSubset.colex(k, n):
        inside, outside = weight_pairs(subset, lambdas)
        point = _substitution(xs, inside)
        point.update(_substitution(ys, outside))
        total += evaluate(p, point) / cross_weight(subset, lambdas)
    logger.debug(f"theorem_double_lhs k={k} n={n}: {total}")
    return total


@functools.lru_cache(maxsize=32)
def double_weight(k: int, n: int) -> MultiPoly:
    """prod_{i != j}(x_i - x_j) * prod_{i != j}(y_i - y_j) * (Y - X)"""
    xs, ys = x_vars(k), y_vars(n - k)
    weight = vandermonde_double(xs) * vandermonde_double(ys) * cross_difference(ys, xs)
    logger.debug(f"double weight for G({k},{n}) has {len(weight)} terms")
    return weight


def double_coefficient(p: MultiPoly, k: int, n: int) -> Fraction:
    """d(k,n): coefficient of x^{n-1} y^{n-1} (all variables) in P times the double weight"""
    target = Monomial.power_product(x_vars(k) + y_vars(n - k), n - 1)
    return coefficient_of_product(p, double_weight(k, n), target)


def theorem_double_rhs(p: MultiPoly, k: int, n: int) -> Fraction:
    """d(k,n) / (k! (n-k)!)"""
    _check_doubly_symmetric(p, k, n, "theorem_double_rhs")
    d = double_coefficient(p, k, n)
    logger.debug(f"d({k},{n}) = {d}")
    return d / (math.factorial(k) * math.factorial(n - k))


# ==========================================
# CHEN-LOUCK INTERPOLATION
# ==========================================


def chen_louck_interpolate(p: MultiPoly, k: int, lambdas: WeightVector) -> MultiPoly:
    """
    Rebuild P from its values at the lambda_I:

        P(X) = sum_I P(lambda_I) prod_{x in X} prod_{j in I^c}(x - lambda_j) / (lambda_I - lambda_{I^c})

    valid for symmetric P with every partial degree <= n-k.
    """
    n = lambdas.n
    _spec(k, n)
    xs = x_vars(k)
    _require_variables(p, xs, "chen_louck_interpolate")
    if not is_symmetric(p, xs):
        raise NotSymmetric(f"chen_louck_interpolate: polynomial is not symmetric in x1..x{k}")
    _require_partial_degrees(p, n - k, "chen_louck_interpolate")

    result = MultiPoly.zero()
    for subset in IndexSubset.colex(k, n):
        value = evaluate(p, _substitution(xs, lambdas.restrict(subset.members)))
        if not value:
            continue
        # f(z) = prod_{j in I^c}(z - lambda_j), then prod_t f(x_t)
        roots = lambdas.restrict(subset.complement)
        numerator = MultiPoly.one()
        for x in xs:
            for r in roots:
                numerator = numerator * MultiPoly.linear_form({x: 1}, -r)
        result = result + numerator * (value / cross_weight(subset, lambdas))
    return result


def weight_pairs(subset: IndexSubset, lambdas: WeightVector) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """(lambda_I, lambda_{I^c}) in increasing index order"""
    return lambdas.restrict(subset.members), lambdas.restrict(subset.complement)
