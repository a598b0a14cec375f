"""
Integration Engine Module
Integrals of characteristic classes over G(k,n) by coefficient extraction
"""

import math
from fractions import Fraction
from typing import Dict, Union

from src.algebra.polynomial import (
    Monomial,
    MultiPoly,
    coefficient_of_product,
    homogeneous_components,
    y_vars,
)
from src.compiler.class_compiler import ClassCompiler
from src.identities.interpolation import theorem_double_rhs, theorem_main_rhs
from src.models.expressions import ClassExpr, euler, tangent_bundle
from src.models.grassmann import GrassmannSpec
from src.symmetric.functions import is_doubly_symmetric, is_symmetric, vandermonde_double
from src.utils.exceptions import (
    DegreeExceedsDimension,
    IndexOutOfRange,
    NotDoublySymmetric,
    NotSymmetric,
)
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

Integrand = Union[ClassExpr, MultiPoly]


def split_within_dimension(poly: MultiPoly, spec: GrassmannSpec) -> Dict[int, MultiPoly]:
    """
    Homogeneous components of an integrand, refusing any above dim G(k,n).

    Raises:
        DegreeExceedsDimension: a component has degree > k(n-k)
    """
    components = homogeneous_components(poly)
    too_high = [d for d in components if d > spec.dimension]
    if too_high:
        logger.warning(f"integrand has degree {max(too_high)} on {spec} (dimension {spec.dimension})")
        raise DegreeExceedsDimension(
            f"integrand has a component of degree {max(too_high)} but dim {spec} = {spec.dimension}"
        )
    return components


class IntegrationEngine:
    """
    Evaluates integrals over one Grassmannian.

    Every integrand is reduced to its degree-k(n-k) component and passed to
    the doubly symmetric coefficient formula with the orientation sign
    (-1)^{k(n-k)}; lower components integrate to zero.
    """

    def __init__(self, spec: GrassmannSpec):
        logger.debug(f"Initializing IntegrationEngine for {spec}")
        self.spec = spec
        self.compiler = ClassCompiler(spec)

    def polynomial(self, integrand: Integrand) -> MultiPoly:
        """Expand a class, or validate a polynomial already written in Chern roots"""
        if not isinstance(integrand, MultiPoly):
            return self.compiler.expand(integrand)
        xs, ys = self.compiler.xs, self.compiler.ys
        allowed = set(xs + ys)
        stray = [v for v in integrand.variables() if v not in allowed]
        if stray:
            raise IndexOutOfRange(
                f"variables {', '.join(str(v) for v in stray)} are not Chern roots on {self.spec}"
            )
        if not is_doubly_symmetric(integrand, xs, ys):
            raise NotDoublySymmetric(f"{integrand} is not doubly symmetric on {self.spec}")
        return integrand

    def top_component(self, integrand: Integrand) -> MultiPoly:
        components = split_within_dimension(self.polynomial(integrand), self.spec)
        return components.get(self.spec.dimension, MultiPoly.zero())

    def integrate(self, integrand: Integrand) -> Fraction:
        """(-1)^{k(n-k)} d(k,n) / (k!(n-k)!) on the top-degree component"""
        top = self.top_component(integrand)
        if top.is_zero():
            logger.debug(f"no degree-{self.spec.dimension} component; integral is 0")
            return Fraction(0)
        value = self.spec.orientation_sign * theorem_double_rhs(top, self.spec.k, self.spec.n)
        logger.info(f"integral over {self.spec} = {value}")
        return value

    def integrate_sub_bundle(self, integrand: Integrand) -> Fraction:
        """
        Integrand in the roots of S only: (-1)^{k(n-k)} c(k,n) / k!.

        Raises:
            NotSymmetric: the integrand mentions y-variables or is not symmetric in x
        """
        top = self.top_component(integrand)
        if any(v.alphabet != "x" for v in top.variables()):
            raise NotSymmetric(f"{top} is not a polynomial in the roots of S alone")
        return self.spec.orientation_sign * theorem_main_rhs(top, self.spec.k, self.spec.n)

    def integrate_quotient_bundle(self, integrand: Integrand) -> Fraction:
        """
        Integrand in the roots of Q only: c'(k,n) / (n-k)!, where c' is the
        coefficient of y1^{n-1}...y(n-k)^{n-1} in Q * prod_{i != j}(y_i - y_j).
        """
        top = self.top_component(integrand)
        ys = y_vars(self.spec.quotient_rank)
        if any(v.alphabet != "y" for v in top.variables()) or not is_symmetric(top, ys):
            raise NotSymmetric(f"{top} is not a symmetric polynomial in the roots of Q alone")
        target = Monomial.power_product(ys, self.spec.n - 1)
        coefficient = coefficient_of_product(top, vandermonde_double(ys), target)
        logger.debug(f"c'({self.spec.k},{self.spec.n}) = {coefficient}")
        return coefficient / math.factorial(self.spec.quotient_rank)

    def integrate_product(self, sub_class: Integrand, quotient_class: Integrand) -> Fraction:
        """
        P(S) * Q(Q) with the gate deg P + deg Q <= k(n-k).

        Raises:
            IndexOutOfRange: P mentions roots of Q, or Q mentions roots of S
            DegreeExceedsDimension: the degrees add up past the dimension
        """
        p = self.polynomial(sub_class)
        q = self.polynomial(quotient_class)
        for poly, alphabet, bundle in ((p, "x", "S"), (q, "y", "Q")):
            stray = [v for v in poly.variables() if v.alphabet != alphabet]
            if stray:
                raise IndexOutOfRange(
                    f"{', '.join(str(v) for v in stray)} are not Chern roots of {bundle}"
                )
        total = p.total_degree + q.total_degree if p and q else 0
        if total > self.spec.dimension:
            raise DegreeExceedsDimension(
                f"deg P + deg Q = {total} exceeds dim {self.spec} = {self.spec.dimension}"
            )
        return self.integrate(p * q)

    def euler_characteristic(self) -> Fraction:
        """Integral of the Euler class of the tangent bundle Q tensor S^dual"""
        return self.integrate(euler(tangent_bundle()))


def integrate(integrand: Integrand, spec: GrassmannSpec) -> Fraction:
    return IntegrationEngine(spec).integrate(integrand)


def integrate_sub_bundle(integrand: Integrand, spec: GrassmannSpec) -> Fraction:
    return IntegrationEngine(spec).integrate_sub_bundle(integrand)


def integrate_quotient_bundle(integrand: Integrand, spec: GrassmannSpec) -> Fraction:
    return IntegrationEngine(spec).integrate_quotient_bundle(integrand)


def integrate_product(sub_class: Integrand, quotient_class: Integrand, spec: GrassmannSpec) -> Fraction:
    return IntegrationEngine(spec).integrate_product(sub_class, quotient_class)


def euler_characteristic(spec: GrassmannSpec) -> int:
    return int(IntegrationEngine(spec).euler_characteristic())
