"""
Characteristic-Class Expression Trees
Pydantic v2 discriminated unions for tautological-bundle constructions and class integrands
"""

import math
from fractions import Fraction
from typing import Annotated, Any, Literal, Tuple, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    model_validator,
)

from src.models.grassmann import GrassmannSpec, Partition

# ==========================================
# BUNDLE EXPRESSIONS (DISCRIMINATED UNION)
# ==========================================


class TautologicalBundle(BaseModel):
    """S (rank k) or Q (rank n-k)"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["tautological"] = "tautological"
    name: Literal["S", "Q"]

    def rank(self, spec: GrassmannSpec) -> int:
        return spec.k if self.name == "S" else spec.quotient_rank


class DualBundle(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["dual"] = "dual"
    base: "BundleExpr"

    def rank(self, spec: GrassmannSpec) -> int:
        return self.base.rank(spec)


class SymmetricPowerBundle(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["sym"] = "sym"
    degree: PositiveInt
    base: "BundleExpr"

    def rank(self, spec: GrassmannSpec) -> int:
        return math.comb(self.base.rank(spec) + self.degree - 1, self.degree)


class TensorBundle(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["tensor"] = "tensor"
    left: "BundleExpr"
    right: "BundleExpr"

    def rank(self, spec: GrassmannSpec) -> int:
        return self.left.rank(spec) * self.right.rank(spec)


class ExteriorPowerBundle(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["wedge"] = "wedge"
    degree: PositiveInt
    base: "BundleExpr"

    def rank(self, spec: GrassmannSpec) -> int:
        return math.comb(self.base.rank(spec), self.degree)


BundleExpr = Annotated[
    Union[
        TautologicalBundle,
        DualBundle,
        SymmetricPowerBundle,
        TensorBundle,
        ExteriorPowerBundle,
    ],
    Field(discriminator="kind"),
]


# ==========================================
# CLASS EXPRESSIONS (DISCRIMINATED UNION)
# ==========================================


class ConstantClass(BaseModel):
    """Rational constant, stored in lowest terms with positive denominator"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["constant"] = "constant"
    numerator: int
    denominator: PositiveInt = 1

    @model_validator(mode="before")
    @classmethod
    def _lowest_terms(cls, data: Any) -> Any:
        if isinstance(data, dict) and "numerator" in data:
            value = Fraction(data["numerator"], data.get("denominator", 1))
            data = {**data, "numerator": value.numerator, "denominator": value.denominator}
        return data

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


class RootVariable(BaseModel):
    """A Chern root used directly: x_i (root of S) or y_j (root of Q); z only in plain polynomials"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["variable"] = "variable"
    alphabet: Literal["x", "y", "z"]
    index: PositiveInt


class ChernClass(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["chern"] = "chern"
    index: NonNegativeInt
    bundle: BundleExpr


class EulerClass(BaseModel):
    """Top Chern class of the bundle"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["euler"] = "euler"
    bundle: BundleExpr


class SchurClass(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["schur"] = "schur"
    partition: Partition
    bundle: BundleExpr


class SumClass(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["sum"] = "sum"
    terms: Tuple["ClassExpr", ...] = Field(min_length=1)


class ProductClass(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["product"] = "product"
    factors: Tuple["ClassExpr", ...] = Field(min_length=1)


class PowerClass(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["power"] = "power"
    base: "ClassExpr"
    exponent: NonNegativeInt


ClassExpr = Annotated[
    Union[
        ConstantClass,
        RootVariable,
        ChernClass,
        EulerClass,
        SchurClass,
        SumClass,
        ProductClass,
        PowerClass,
    ],
    Field(discriminator="kind"),
]

CLASS_ATOM_KINDS = frozenset({"chern", "euler", "schur"})

for _model in (
    DualBundle,
    SymmetricPowerBundle,
    TensorBundle,
    ExteriorPowerBundle,
    ChernClass,
    EulerClass,
    SchurClass,
    SumClass,
    ProductClass,
    PowerClass,
):
    _model.model_rebuild()


# ==========================================
# BUILDERS
# ==========================================


def S() -> TautologicalBundle:
    return TautologicalBundle(name="S")


def Q() -> TautologicalBundle:
    return TautologicalBundle(name="Q")


def dual(base: BundleExpr) -> DualBundle:
    return DualBundle(base=base)


def sym(degree: int, base: BundleExpr) -> SymmetricPowerBundle:
    return SymmetricPowerBundle(degree=degree, base=base)


def tensor(left: BundleExpr, right: BundleExpr) -> TensorBundle:
    return TensorBundle(left=left, right=right)


def wedge(degree: int, base: BundleExpr) -> ExteriorPowerBundle:
    return ExteriorPowerBundle(degree=degree, base=base)


def tangent_bundle() -> TensorBundle:
    """T G(k,n) = Hom(S, Q) = Q tensor S^dual"""
    return tensor(Q(), dual(S()))


def constant(value: Union[int, Fraction]) -> ConstantClass:
    value = Fraction(value)
    return ConstantClass(numerator=value.numerator, denominator=value.denominator)


def root(alphabet: Literal["x", "y", "z"], index: int) -> RootVariable:
    return RootVariable(alphabet=alphabet, index=index)


def chern(index: int, bundle: BundleExpr) -> ChernClass:
    return ChernClass(index=index, bundle=bundle)


def euler(bundle: BundleExpr) -> EulerClass:
    return EulerClass(bundle=bundle)


def schur(partition: Union[Partition, Tuple[int, ...]], bundle: BundleExpr) -> SchurClass:
    if not isinstance(partition, Partition):
        partition = Partition(parts=tuple(partition))
    return SchurClass(partition=partition, bundle=bundle)


def class_sum(*terms: ClassExpr) -> ClassExpr:
    return terms[0] if len(terms) == 1 else SumClass(terms=terms)


def class_product(*factors: ClassExpr) -> ClassExpr:
    return factors[0] if len(factors) == 1 else ProductClass(factors=factors)


def class_power(base: ClassExpr, exponent: int) -> PowerClass:
    return PowerClass(base=base, exponent=exponent)


def negate(node: ClassExpr) -> ClassExpr:
    """
    -node in normal form: constants absorb the sign, a product with a leading
    constant folds it in, anything else gets a leading -1 factor.
    """
    if isinstance(node, ConstantClass):
        return constant(-node.value)
    if isinstance(node, ProductClass):
        head = node.factors[0]
        if isinstance(head, ConstantClass):
            return ProductClass(factors=(constant(-head.value),) + node.factors[1:])
        return ProductClass(factors=(constant(-1),) + node.factors)
    return ProductClass(factors=(constant(-1), node))


def contains_class_atoms(node: ClassExpr) -> bool:
    """True if the tree mentions chern/euler/schur (needs a Grassmannian to expand)"""
    if node.kind in CLASS_ATOM_KINDS:
        return True
    if isinstance(node, SumClass):
        return any(contains_class_atoms(t) for t in node.terms)
    if isinstance(node, ProductClass):
        return any(contains_class_atoms(f) for f in node.factors)
    if isinstance(node, PowerClass):
        return contains_class_atoms(node.base)
    return False
