"""
Localization Oracle Module
Fixed-point (ABBV) evaluation of integrals over G(k,n) at explicit torus weights,
used to certify the coefficient formulas independently
"""

import random
from fractions import Fraction
from typing import Dict, List, Union

from src.algebra.polynomial import MultiPoly, VarId, evaluate
from src.compiler.class_compiler import ClassCompiler
from src.execution.engine import IntegrationEngine, split_within_dimension
from src.models.expressions import ClassExpr
from src.models.grassmann import FixedPoint, GrassmannSpec, WeightVector
from src.models.reports import CertificationReport
from src.utils.exceptions import InputError, NotConstant
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

Integrand = Union[ClassExpr, MultiPoly]


class LocalizationOracle:
    """
    Sums alpha|_p / e_p over the C(n,k) torus-fixed points p_I.

    At p_I the roots of S restrict to lambda_I and the roots of Q to
    lambda_{I^c}, both in increasing index order.
    """

    def __init__(self, spec: GrassmannSpec):
        logger.debug(f"Initializing LocalizationOracle for {spec}")
        self.spec = spec
        self.engine = IntegrationEngine(spec)
        self.compiler: ClassCompiler = self.engine.compiler
        self.fixed_points = FixedPoint.all(spec)

    def _checked_weights(self, lambdas: WeightVector) -> WeightVector:
        if lambdas.n != self.spec.n:
            raise InputError(f"{self.spec} needs {self.spec.n} weights, got {lambdas.n}")
        return lambdas

    def _gated(self, integrand: Integrand) -> MultiPoly:
        poly = self.engine.polynomial(integrand)
        split_within_dimension(poly, self.spec)
        return poly

    def euler_class_at(self, point: FixedPoint, lambdas: WeightVector) -> Fraction:
        """e_{p_I} = prod_{i in I} prod_{j in I^c} (lambda_j - lambda_i)"""
        point.check_spec(self.spec, lambdas)
        total = Fraction(1)
        for i in point.subset.members:
            li = lambdas.value(i)
            for j in point.subset.complement:
                total *= lambdas.value(j) - li
        return total

    def _restriction_point(self, point: FixedPoint, lambdas: WeightVector) -> Dict[VarId, Fraction]:
        values = dict(zip(self.compiler.xs, lambdas.restrict(point.subset.members)))
        values.update(zip(self.compiler.ys, lambdas.restrict(point.subset.complement)))
        return values

    def restrict_class(
        self, integrand: Integrand, point: FixedPoint, lambdas: WeightVector
    ) -> Fraction:
        point.check_spec(self.spec, lambdas)
        poly = self.engine.polynomial(integrand)
        return evaluate(poly, self._restriction_point(point, lambdas))

    def abbv_integrate(self, integrand: Integrand, lambdas: WeightVector) -> Fraction:
        """
        Sum over fixed points of the restriction divided by the tangent Euler class.

        Raises:
            DegreeExceedsDimension: before any evaluation, if a component is
                above dim G(k,n)
        """
        poly = self._gated(integrand)
        return self._fixed_point_sum(poly, self._checked_weights(lambdas))

    def _fixed_point_sum(self, poly: MultiPoly, lambdas: WeightVector) -> Fraction:
        total = Fraction(0)
        for point in self.fixed_points:
            restriction = evaluate(poly, self._restriction_point(point, lambdas))
            if restriction:
                total += restriction / self.euler_class_at(point, lambdas)
        logger.debug(f"ABBV sum on {self.spec} at {lambdas}: {total}")
        return total

    def certify_constant(
        self, integrand: Integrand, trials: int, seed: int
    ) -> CertificationReport:
        """
        Run the fixed-point sum at `trials` seeded random weight vectors.

        Raises:
            NotConstant: two weight vectors give different sums
        """
        if trials < 2:
            raise InputError(f"certification needs at least 2 trials, got {trials}")
        poly = self._gated(integrand)
        rng = random.Random(seed)
        vectors: List[WeightVector] = []
        first_value = Fraction(0)
        for trial in range(trials):
            lambdas = WeightVector.random(self.spec.n, rng)
            value = self._fixed_point_sum(poly, lambdas)
            if not vectors:
                first_value = value
            elif value != first_value:
                logger.warning(
                    f"localization on {self.spec} differs at trial {trial + 1}: "
                    f"{first_value} vs {value}"
                )
                raise NotConstant(vectors[0].values, first_value, lambdas.values, value)
            vectors.append(lambdas)
        logger.info(f"oracle on {self.spec}: constant {first_value} over {trials} trials")
        return CertificationReport(
            spec=self.spec,
            value=first_value,
            trials=trials,
            seed=seed,
            weight_vectors=tuple(vectors),
        )


def euler_class_at(point: FixedPoint, lambdas: WeightVector) -> Fraction:
    spec = GrassmannSpec(k=point.subset.size, n=point.subset.ambient)
    return LocalizationOracle(spec).euler_class_at(point, lambdas)


def restrict_class(
    integrand: Integrand, point: FixedPoint, lambdas: WeightVector, spec: GrassmannSpec
) -> Fraction:
    return LocalizationOracle(spec).restrict_class(integrand, point, lambdas)


def abbv_integrate(integrand: Integrand, spec: GrassmannSpec, lambdas: WeightVector) -> Fraction:
    return LocalizationOracle(spec).abbv_integrate(integrand, lambdas)


def certify_constant(
    integrand: Integrand, spec: GrassmannSpec, trials: int, seed: int
) -> CertificationReport:
    return LocalizationOracle(spec).certify_constant(integrand, trials, seed)
