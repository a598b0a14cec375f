"""
Unit tests for the interpolation identities
Tests Lagrange interpolation, the power-sum identity and both coefficient theorems,
including independence from the chosen weights
"""

import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.algebra.polynomial import MultiPoly, Z, evaluate, x_vars, y_vars
from src.identities.interpolation import (
    chen_louck_interpolate,
    lagrange_basis,
    lagrange_interpolate,
    power_sum_identity,
    prop1_coefficient,
    prop1_sum,
    remark_coefficient,
    theorem_double_lhs,
    theorem_double_rhs,
    theorem_main_lhs,
    theorem_main_rhs,
)
from src.models.grassmann import Partition, WeightVector
from src.symmetric.functions import elementary, schur
from src.utils.exceptions import (
    DegreeTooHigh,
    IndexOutOfRange,
    NotDoublySymmetric,
    NotSymmetric,
    PartialDegreeTooHigh,
)

z = MultiPoly.variable(Z())
x1, x2, x3 = (MultiPoly.variable(v) for v in x_vars(3))
y1 = MultiPoly.variable(y_vars(1)[0])

GRASSMANNIANS = [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5)]

# ==========================================
# TEST FIXTURES
# ==========================================


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_partition(rng: random.Random, rows: int, cols: int, max_size: int) -> Partition:
    parts = sorted((rng.randint(0, cols) for _ in range(rows)), reverse=True)
    while sum(parts) > max_size:
        parts[parts.index(max(parts))] -= 1
        parts.sort(reverse=True)
    return Partition(parts=tuple(parts))


def random_symmetric(rng: random.Random, k: int, n: int) -> MultiPoly:
    """Integer combination of Schur polynomials in x1..xk of degree <= k(n-k)"""
    total = MultiPoly.zero()
    for _ in range(3):
        partition = random_partition(rng, k, n - k, k * (n - k))
        total = total + schur(partition, x_vars(k)) * rng.randint(-3, 3)
    return total


def random_doubly_symmetric(rng: random.Random, k: int, n: int) -> MultiPoly:
    """Sum of s_lambda(x) s_mu(y) with |lambda| + |mu| <= k(n-k)"""
    dim = k * (n - k)
    total = MultiPoly.zero()
    for _ in range(3):
        lam = random_partition(rng, k, n - k, dim)
        mu = random_partition(rng, n - k, k, dim - lam.size)
        term = schur(lam, x_vars(k)) * schur(mu, y_vars(n - k))
        total = total + term * rng.randint(-3, 3)
    return total


# ==========================================
# LAGRANGE INTERPOLATION
# ==========================================


def test_lagrange_basis_two_points():
    assert lagrange_basis(1, WeightVector.of(0, 1)) == 1 - z


def test_lagrange_basis_is_kronecker_delta(rng):
    lambdas = WeightVector.random(5, rng)
    for i in range(1, 6):
        basis = lagrange_basis(i, lambdas)
        for j in range(1, 6):
            expected = 1 if i == j else 0
            assert evaluate(basis, {Z(): lambdas.value(j)}) == expected


def test_lagrange_basis_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        lagrange_basis(3, WeightVector.of(0, 1))


def test_lagrange_interpolate_examples():
    assert lagrange_interpolate([1, 3], WeightVector.of(0, 1)) == 1 + 2 * z
    assert lagrange_interpolate([4, 4, 4], WeightVector.of(0, 1, 2)) == 4
    assert lagrange_interpolate([0, 1, 4], WeightVector.of(0, 1, 2)) == z**2


def test_duplicate_weights_rejected():
    with pytest.raises(ValidationError):
        WeightVector.of(1, 2, 1)


# ==========================================
# POWER SUMS AND PROPOSITION
# ==========================================


@pytest.mark.parametrize(
    "m,expected", [(0, Fraction(0)), (1, Fraction(1)), (3, Fraction(7))]
)
def test_power_sum_examples(m, expected):
    sides = power_sum_identity(m, WeightVector.of(1, 2))
    assert sides.lhs == sides.rhs == expected


def test_power_sum_identity_holds_for_random_weights(rng):
    for n in range(2, 7):
        for _ in range(10):
            lambdas = WeightVector.random(n, rng, rational=True)
            for m in range(0, 2 * n + 1):
                sides = power_sum_identity(m, lambdas)
                assert sides.lhs == sides.rhs


def test_prop1_examples():
    assert prop1_sum(z**2, WeightVector.of(0, 1, 2)) == 1
    assert prop1_sum(MultiPoly.one(), WeightVector.of(3, 7)) == 0


def test_prop1_leading_coefficient_for_random_polynomials(rng):
    for n in range(2, 9):
        lambdas = WeightVector.random(n, rng)
        p = MultiPoly.zero()
        for e in range(n):
            p = p + z**e * rng.randint(-9, 9)
        assert prop1_sum(p, lambdas) == prop1_coefficient(p, n)
        assert prop1_sum(z ** (n - 1), lambdas) == 1


def test_prop1_degree_too_high():
    with pytest.raises(DegreeTooHigh):
        prop1_sum(z**3, WeightVector.of(0, 1, 2))


# ==========================================
# SYMMETRIC COEFFICIENT THEOREM
# ==========================================


def test_theorem_main_examples():
    lambdas = WeightVector.of(0, 1, 2)
    assert theorem_main_lhs(x1 * x2, 2, lambdas) == 1
    assert theorem_main_rhs(x1 * x2, 2, 3) == 1
    assert theorem_main_lhs(x1**2, 1, lambdas) == 1
    assert theorem_main_lhs(MultiPoly.one(), 2, lambdas) == 0
    assert theorem_main_rhs(MultiPoly.one(), 2, 3) == 0
    assert theorem_main_rhs(x1, 1, 2) == 1


@pytest.mark.parametrize("k,n", GRASSMANNIANS)
def test_theorem_main_sides_agree_and_ignore_weights(rng, k, n):
    p = random_symmetric(rng, k, n)
    rhs = theorem_main_rhs(p, k, n)
    for _ in range(10):
        assert theorem_main_lhs(p, k, WeightVector.random(n, rng, rational=True)) == rhs


def test_theorem_main_rejects_non_symmetric():
    with pytest.raises(NotSymmetric):
        theorem_main_lhs(x1 - x2, 2, WeightVector.of(0, 1, 2))


def test_theorem_main_rejects_high_degree():
    with pytest.raises(DegreeTooHigh):
        theorem_main_rhs((x1 + x2) ** 3, 2, 3)


def test_theorem_main_rejects_foreign_variables():
    with pytest.raises(IndexOutOfRange):
        theorem_main_rhs(x1 + x2 + x3, 2, 4)


def test_reversed_grassmannian_arguments_rejected():
    """Reading the remark's c(n,k) literally asks for k > n"""
    with pytest.raises(ValidationError):
        theorem_main_rhs(x1, 3, 2)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 5)])
def test_remark_coefficient_matches_theorem(rng, k, n):
    """Partial degrees <= n-k: c(k,n) = k! * coefficient of x1^{n-k}...xk^{n-k}"""
    for _ in range(5):
        partition = random_partition(rng, k, n - k, k * (n - k))
        # s_lambda(x) has partial degrees <= lambda_1 <= n-k
        p = schur(partition, x_vars(k)) * rng.randint(1, 4) + 1
        assert remark_coefficient(p, k, n) == theorem_main_rhs(p, k, n)


def test_remark_coefficient_partial_degree_gate():
    with pytest.raises(PartialDegreeTooHigh):
        remark_coefficient(x1**2 + x2**2, 2, 3)


# ==========================================
# DOUBLY SYMMETRIC COEFFICIENT THEOREM
# ==========================================


def test_theorem_double_examples():
    lambdas = WeightVector.of(0, 1)
    assert theorem_double_lhs(y1 - x1, 1, lambdas) == -2
    assert theorem_double_rhs(y1 - x1, 1, 2) == -2
    assert theorem_double_rhs(MultiPoly.one(), 1, 2) == 0


def test_theorem_double_on_y_free_integrand_matches_main():
    assert theorem_double_rhs(x1 * x2, 2, 3) == theorem_main_rhs(x1 * x2, 2, 3) == 1


@pytest.mark.parametrize("k,n", GRASSMANNIANS)
def test_theorem_double_sides_agree_and_ignore_weights(rng, k, n):
    p = random_doubly_symmetric(rng, k, n)
    rhs = theorem_double_rhs(p, k, n)
    for _ in range(10):
        assert theorem_double_lhs(p, k, WeightVector.random(n, rng)) == rhs


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5)])
def test_theorem_double_reduces_to_main_without_y(rng, k, n):
    p = random_symmetric(rng, k, n)
    assert theorem_double_rhs(p, k, n) == theorem_main_rhs(p, k, n)


def test_theorem_double_rejects_mixed_symmetry():
    with pytest.raises(NotDoublySymmetric):
        theorem_double_rhs(x1 * y1, 2, 3)


# ==========================================
# CHEN-LOUCK INTERPOLATION
# ==========================================


def test_chen_louck_examples():
    assert chen_louck_interpolate(x1 * x2, 2, WeightVector.of(0, 1, 2)) == x1 * x2
    assert chen_louck_interpolate(MultiPoly.one(), 2, WeightVector.of(0, 1, 2)) == 1
    e1 = elementary(1, x_vars(2))
    assert chen_louck_interpolate(e1, 2, WeightVector.of(0, 1, 2, 3)) == x1 + x2


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_chen_louck_reconstructs_random_polynomials(rng, k, n):
    p = MultiPoly.zero()
    for _ in range(3):
        partition = random_partition(rng, k, n - k, k * (n - k))
        p = p + schur(partition, x_vars(k)) * rng.randint(-4, 4)
    assert chen_louck_interpolate(p, k, WeightVector.random(n, rng)) == p


def test_chen_louck_partial_degree_gate():
    with pytest.raises(PartialDegreeTooHigh):
        chen_louck_interpolate(x1**2 * x2**2, 2, WeightVector.of(0, 1, 2))


def test_prop1_coefficient_reads_top_power():
    assert prop1_coefficient(MultiPoly.constant(5), 1) == 5
    assert prop1_coefficient(z**2 + 3, 3) == 1
