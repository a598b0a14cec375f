"""
Class Compiler Module
Compiles characteristic-class expression trees into doubly symmetric polynomials
in the Chern roots x1..xk (of S) and y1..y(n-k) (of Q)
"""

import itertools
from typing import Dict, Optional, Tuple

from src.algebra.polynomial import MultiPoly, VarId, X, Y, Z, product, x_vars, y_vars
from src.models.expressions import (
    BundleExpr,
    ChernClass,
    ClassExpr,
    ConstantClass,
    DualBundle,
    EulerClass,
    ExteriorPowerBundle,
    PowerClass,
    ProductClass,
    RootVariable,
    SchurClass,
    SumClass,
    SymmetricPowerBundle,
    TautologicalBundle,
    TensorBundle,
    contains_class_atoms,
)
from src.models.grassmann import GrassmannSpec
from src.symmetric.functions import elementary, is_doubly_symmetric, schur
from src.utils.exceptions import IndexOutOfRange, InputError, NotDoublySymmetric
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

Roots = Tuple[MultiPoly, ...]


class ClassCompiler:
    """Expands ClassExpr trees over a fixed G(k,n)"""

    def __init__(self, spec: GrassmannSpec):
        logger.debug(f"Initializing ClassCompiler for {spec}")
        self.spec = spec
        self.xs = x_vars(spec.k)
        self.ys = y_vars(spec.quotient_rank)
        self._roots: Dict[BundleExpr, Roots] = {}
        self._expanded: Dict[ClassExpr, MultiPoly] = {}

    # ==========================================
    # BUNDLES -> CHERN ROOTS
    # ==========================================

    def roots_of(self, bundle: BundleExpr) -> Roots:
        """Chern roots as linear forms; the count always equals the bundle rank"""
        if bundle in self._roots:
            return self._roots[bundle]

        if isinstance(bundle, TautologicalBundle):
            alphabet = self.xs if bundle.name == "S" else self.ys
            roots: Roots = tuple(MultiPoly.variable(v) for v in alphabet)

        elif isinstance(bundle, DualBundle):
            roots = tuple(-r for r in self.roots_of(bundle.base))

        elif isinstance(bundle, SymmetricPowerBundle):
            base = self.roots_of(bundle.base)
            roots = tuple(
                _sum(combo)
                for combo in itertools.combinations_with_replacement(base, bundle.degree)
            )

        elif isinstance(bundle, ExteriorPowerBundle):
            base = self.roots_of(bundle.base)
            roots = tuple(_sum(combo) for combo in itertools.combinations(base, bundle.degree))

        elif isinstance(bundle, TensorBundle):
            left, right = self.roots_of(bundle.left), self.roots_of(bundle.right)
            roots = tuple(a + b for a in left for b in right)

        else:
            raise InputError(f"unknown bundle kind: {bundle!r}")

        logger.debug(f"{bundle.kind} bundle of rank {len(roots)}")
        self._roots[bundle] = roots
        return roots

    # ==========================================
    # CLASSES -> POLYNOMIALS
    # ==========================================

    def expand(self, node: ClassExpr) -> MultiPoly:
        """
        Expand a class to a polynomial in Chern roots and confirm it is doubly symmetric.

        Raises:
            NotDoublySymmetric: raw root variables were combined into a
                polynomial that is not a characteristic class
        """
        poly = self._compile(node)
        if not is_doubly_symmetric(poly, self.xs, self.ys):
            logger.warning(f"expansion on {self.spec} is not doubly symmetric: {poly}")
            raise NotDoublySymmetric(
                f"{poly} is not symmetric in x1..x{self.spec.k} and y1..y{self.spec.quotient_rank}"
            )
        logger.debug(f"expanded class on {self.spec} to {len(poly)} terms")
        return poly

    def _compile(self, node: ClassExpr) -> MultiPoly:
        if node in self._expanded:
            return self._expanded[node]

        if isinstance(node, ConstantClass):
            poly = MultiPoly.constant(node.value)

        elif isinstance(node, RootVariable):
            poly = MultiPoly.variable(self._root_variable(node))

        elif isinstance(node, ChernClass):
            poly = elementary(node.index, self.roots_of(node.bundle))

        elif isinstance(node, EulerClass):
            poly = product(self.roots_of(node.bundle))

        elif isinstance(node, SchurClass):
            roots = self.roots_of(node.bundle)
            if node.partition.length > len(roots):
                # s_lambda vanishes on fewer roots than parts
                poly = MultiPoly.zero()
            else:
                poly = schur(node.partition, roots)

        elif isinstance(node, SumClass):
            poly = MultiPoly.zero()
            for term in node.terms:
                poly = poly + self._compile(term)

        elif isinstance(node, ProductClass):
            poly = product(self._compile(factor) for factor in node.factors)

        elif isinstance(node, PowerClass):
            poly = self._compile(node.base) ** node.exponent

        else:
            raise InputError(f"unknown class kind: {node!r}")

        self._expanded[node] = poly
        return poly

    def _root_variable(self, node: RootVariable) -> VarId:
        if node.alphabet == "z":
            raise InputError("z is not a Chern root; use x1..xk or y1..y(n-k)")
        limit = self.spec.k if node.alphabet == "x" else self.spec.quotient_rank
        if node.index > limit:
            raise IndexOutOfRange(
                f"{node.alphabet}{node.index} is not a Chern root on {self.spec} "
                f"(indices run to {limit})"
            )
        return X(node.index) if node.alphabet == "x" else Y(node.index)


def _sum(polys: Tuple[MultiPoly, ...]) -> MultiPoly:
    total = MultiPoly.zero()
    for p in polys:
        total = total + p
    return total


# ==========================================
# MODULE-LEVEL ENTRY POINTS
# ==========================================


def roots_of(bundle: BundleExpr, spec: GrassmannSpec) -> Roots:
    return ClassCompiler(spec).roots_of(bundle)


def expand_class(node: ClassExpr, spec: GrassmannSpec) -> MultiPoly:
    return ClassCompiler(spec).expand(node)


def polynomial_from_tree(node: ClassExpr, spec: Optional[GrassmannSpec] = None) -> MultiPoly:
    """
    Build a plain polynomial from a tree with no chern/euler/schur atoms.

    Needs no Grassmannian, so z and any variable index are accepted.
    """
    if contains_class_atoms(node):
        if spec is None:
            raise InputError("characteristic classes need a Grassmannian (-k and -n)")
        return expand_class(node, spec)

    if isinstance(node, ConstantClass):
        return MultiPoly.constant(node.value)
    if isinstance(node, RootVariable):
        factory = {"x": X, "y": Y, "z": Z}[node.alphabet]
        return MultiPoly.variable(factory(node.index))
    if isinstance(node, SumClass):
        total = MultiPoly.zero()
        for term in node.terms:
            total = total + polynomial_from_tree(term)
        return total
    if isinstance(node, ProductClass):
        return product(polynomial_from_tree(f) for f in node.factors)
    if isinstance(node, PowerClass):
        return polynomial_from_tree(node.base) ** node.exponent
    raise InputError(f"unknown class kind: {node!r}")
