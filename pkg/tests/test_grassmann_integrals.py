"""
Unit tests for IntegrationEngine
Tests classical intersection numbers, the sub-bundle / quotient / product forms,
Schubert duality, Euler characteristics and the degree gate
"""

import math
from fractions import Fraction

import pytest

from src.algebra.polynomial import MultiPoly, x_vars, y_vars
from src.compiler.expression_parser import parse_expression
from src.execution.engine import (
    IntegrationEngine,
    euler_characteristic,
    integrate,
    integrate_product,
    integrate_quotient_bundle,
    integrate_sub_bundle,
    split_within_dimension,
)
from src.models.expressions import (
    Q,
    S,
    chern,
    class_power,
    class_product,
    constant,
    dual,
    euler,
    schur,
    sym,
)
from src.models.grassmann import GrassmannSpec, Partition, box_partitions
from src.utils.exceptions import (
    DegreeExceedsDimension,
    IndexOutOfRange,
    NotDoublySymmetric,
    NotSymmetric,
)

x1, x2 = (MultiPoly.variable(v) for v in x_vars(2))
y1, y2 = (MultiPoly.variable(v) for v in y_vars(2))


def G(k: int, n: int) -> GrassmannSpec:
    return GrassmannSpec(k=k, n=n)


# ==========================================
# CLASSICAL CONSTANTS
# ==========================================


@pytest.mark.parametrize(
    "expr,k,n,expected",
    [
        ("c(1,Q)", 1, 2, 1),
        ("c(1,Q)^4", 2, 4, 2),
        ("c(1,Q)^6", 2, 5, 5),
        ("euler(sym(3,dual(S)))", 2, 4, 27),
        ("euler(sym(5,dual(S)))", 2, 5, 2875),
        ("c(1,Q)*c(1,dual(S))", 1, 3, 1),
        ("c(2,Q)^2", 2, 4, 1),
        ("c(1,dual(S))^4", 2, 4, 2),
    ],
)
def test_classical_intersection_numbers(expr, k, n, expected):
    assert integrate(parse_expression(expr), G(k, n)) == expected


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 4), (2, 5)])
def test_euler_characteristic_is_binomial(k, n):
    assert euler_characteristic(G(k, n)) == math.comb(n, k)


def test_point_class_on_projective_line_from_polynomial():
    """c1(Q) on G(1,2) written directly in the root y1"""
    assert IntegrationEngine(G(1, 2)).integrate(MultiPoly.variable(y_vars(1)[0])) == 1


# ==========================================
# DEGREE HANDLING
# ==========================================


def test_inhomogeneous_integrand_keeps_top_component():
    assert integrate(parse_expression("(1 + c(1,Q))^4"), G(2, 4)) == 2


@pytest.mark.parametrize("expr", ["1", "c(1,Q)^3", "c(2,S) + 7"])
def test_under_degree_classes_integrate_to_zero(expr):
    assert integrate(parse_expression(expr), G(2, 4)) == 0


def test_over_degree_integrand_rejected():
    with pytest.raises(DegreeExceedsDimension):
        integrate(parse_expression("c(1,Q)^5"), G(2, 4))


def test_split_within_dimension():
    components = split_within_dimension(1 + x1 + x2, G(2, 4))
    assert components == {0: MultiPoly.one(), 1: x1 + x2}
    with pytest.raises(DegreeExceedsDimension):
        split_within_dimension((x1 + x2) ** 5, G(2, 4))


def test_polynomial_integrand_alphabet_and_symmetry():
    engine = IntegrationEngine(G(2, 4))
    with pytest.raises(IndexOutOfRange):
        engine.integrate(MultiPoly.variable(y_vars(3)[2]))
    with pytest.raises(NotDoublySymmetric):
        engine.integrate(x1**2 * x2)


# ==========================================
# SUB-BUNDLE, QUOTIENT AND PRODUCT FORMS
# ==========================================


def test_sub_bundle_form():
    assert integrate_sub_bundle(chern(1, dual(S())), G(1, 2)) == 1
    assert integrate_sub_bundle((x1 + x2) ** 4, G(2, 4)) == 2


def test_sub_bundle_form_rejects_quotient_roots():
    with pytest.raises(NotSymmetric):
        integrate_sub_bundle(chern(1, Q()), G(1, 2))


@pytest.mark.parametrize(
    "expr,k,n",
    [("c(2,S)^2 + c(1,S)^4", 2, 4), ("c(1,S)^6", 2, 5), ("c(2,dual(S))^3", 2, 5)],
)
def test_sub_bundle_form_matches_double_formula(expr, k, n):
    integrand = parse_expression(expr)
    assert integrate_sub_bundle(integrand, G(k, n)) == integrate(integrand, G(k, n))


def test_quotient_bundle_form():
    assert integrate_quotient_bundle(chern(1, Q()), G(1, 2)) == 1
    assert integrate_quotient_bundle((y1 + y2) ** 4, G(2, 4)) == 2


@pytest.mark.parametrize(
    "expr,k,n",
    [("c(1,Q)^6", 2, 5), ("c(2,Q)^2", 2, 4), ("c(1,Q)^2*c(2,Q)^2", 2, 5)],
)
def test_quotient_bundle_form_matches_double_formula(expr, k, n):
    integrand = parse_expression(expr)
    assert integrate_quotient_bundle(integrand, G(k, n)) == integrate(integrand, G(k, n))


def test_quotient_bundle_form_rejects_sub_roots():
    with pytest.raises(NotSymmetric):
        integrate_quotient_bundle(class_power(chern(1, dual(S())), 2), G(1, 3))


def test_product_form():
    assert integrate_product(chern(1, dual(S())), chern(1, Q()), G(1, 3)) == 1


def test_product_form_degree_gate():
    with pytest.raises(DegreeExceedsDimension):
        integrate_product(chern(1, dual(S())), chern(1, Q()), G(1, 2))


@pytest.mark.parametrize(
    "sub_class,quotient_class",
    [
        (chern(1, Q()), chern(1, Q())),
        (chern(1, dual(S())), chern(1, S())),
    ],
)
def test_product_form_rejects_mixed_roots(sub_class, quotient_class):
    with pytest.raises(IndexOutOfRange):
        integrate_product(sub_class, quotient_class, G(1, 3))


# ==========================================
# SCHUBERT DUALITY
# ==========================================


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_dual_schubert_classes_pair_to_one(k, n):
    spec = G(k, n)
    rows, cols = spec.schubert_box("Q")
    engine = IntegrationEngine(spec)
    for lam in box_partitions(rows, cols):
        mu = lam.complement(rows, cols)
        node = class_product(schur(lam.parts, Q()), schur(mu.parts, Q()))
        assert engine.integrate(node) == 1, f"{lam} * {mu}"


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_non_dual_schubert_pairs_vanish(k, n):
    spec = G(k, n)
    rows, cols = spec.schubert_box("Q")
    engine = IntegrationEngine(spec)
    partitions = box_partitions(rows, cols)
    checked = 0
    for lam in partitions:
        for mu in partitions:
            if lam.size + mu.size != spec.dimension or mu == lam.complement(rows, cols):
                continue
            node = class_product(schur(lam.parts, Q()), schur(mu.parts, Q()))
            assert engine.integrate(node) == 0, f"{lam} * {mu}"
            checked += 1
    assert checked > 0


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 5)])
def test_dual_schubert_classes_of_dual_sub_bundle_pair_to_one(k, n):
    spec = G(k, n)
    rows, cols = spec.schubert_box("S_dual")
    assert (rows, cols) == (k, n - k)
    engine = IntegrationEngine(spec)
    for lam in box_partitions(rows, cols):
        mu = lam.complement(rows, cols)
        node = class_product(schur(lam.parts, dual(S())), schur(mu.parts, dual(S())))
        assert engine.integrate(node) == 1, f"{lam} * {mu}"


def test_non_dual_pairs_of_dual_sub_bundle_vanish():
    spec = G(2, 5)
    rows, cols = spec.schubert_box("S_dual")
    assert (rows, cols) == (2, 3)
    engine = IntegrationEngine(spec)
    partitions = box_partitions(rows, cols)
    checked = 0
    for lam in partitions:
        for mu in partitions:
            if lam.size + mu.size != spec.dimension or mu == lam.complement(rows, cols):
                continue
            node = class_product(schur(lam.parts, dual(S())), schur(mu.parts, dual(S())))
            assert engine.integrate(node) == 0, f"{lam} * {mu}"
            checked += 1
    assert checked > 0


def test_schur_class_outside_box_vanishes():
    assert integrate(schur((3, 1), Q()), G(2, 4)) == 0
    assert integrate(class_product(schur((3, 3), Q()), constant(5)), G(2, 5)) == 0


def test_top_schubert_class_is_point():
    spec = G(2, 5)
    rows, cols = spec.schubert_box("Q")
    top = Partition(parts=(cols,) * rows)
    assert integrate(schur(top.parts, Q()), spec) == 1
    assert integrate(euler(sym(1, dual(S()))), G(1, 2)) == Fraction(1)
