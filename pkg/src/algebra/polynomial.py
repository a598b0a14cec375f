"""
Sparse Multivariate Polynomials over Q
Exact term-map arithmetic used by every identity and integral in the kernel
"""

import functools
import sys
from fractions import Fraction
from typing import (
    Dict,
    Iterable,
    Iterator,
    Literal,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)

from src.utils.exceptions import ExponentOverflow, IndexOutOfRange, MissingAssignment

Rational = Fraction
Scalar = Union[int, Fraction]

# Alphabets in variable order: x-variables (roots of S) come first, then
# y-variables (roots of Q), then the auxiliary univariate z.
ALPHABET_RANK = {"x": 0, "y": 1, "z": 2}


class VarId(NamedTuple):
    """A variable such as x3 or y1; tuple order is the monomial variable order"""

    alphabet: str
    index: int

    def __str__(self) -> str:
        if self.alphabet == "z" and self.index == 1:
            return "z"
        return f"{self.alphabet}{self.index}"


def X(index: int) -> VarId:
    return _var("x", index)


def Y(index: int) -> VarId:
    return _var("y", index)


def Z(index: int = 1) -> VarId:
    return _var("z", index)


def _var(alphabet: str, index: int) -> VarId:
    if index < 1:
        raise IndexOutOfRange(f"variable index must be positive, got {alphabet}{index}")
    return VarId(alphabet, index)


def x_vars(count: int) -> Tuple[VarId, ...]:
    return tuple(X(i) for i in range(1, count + 1))


def y_vars(count: int) -> Tuple[VarId, ...]:
    return tuple(Y(i) for i in range(1, count + 1))


@functools.total_ordering
class MinusInfinity:
    """Degree of the zero polynomial; compares below every integer"""

    _instance: Optional["MinusInfinity"] = None

    def __new__(cls) -> "MinusInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("-inf")

    def __repr__(self) -> str:
        return "-inf"


NEG_INFINITY = MinusInfinity()
Degree = Union[int, MinusInfinity]


class Monomial:
    """
    Product of variable powers, stored as a tuple of (VarId, exponent) pairs
    sorted by variable. Zero exponents are never stored.
    """

    __slots__ = ("_items", "_hash", "_degree")

    def __init__(self, exponents: Optional[Mapping[VarId, int]] = None):
        items = []
        for var, exp in (exponents or {}).items():
            if exp < 0:
                raise ValueError(f"negative exponent {exp} for {var}")
            if exp > sys.maxsize:
                raise ExponentOverflow(f"exponent {exp} of {var} exceeds {sys.maxsize}")
            if exp:
                items.append((var, exp))
        items.sort()
        self._set(tuple(items))

    @classmethod
    def _from_sorted(cls, items: Tuple[Tuple[VarId, int], ...]) -> "Monomial":
        mono = cls.__new__(cls)
        mono._set(items)
        return mono

    def _set(self, items: Tuple[Tuple[VarId, int], ...]) -> None:
        self._items = items
        self._hash = hash(items)
        self._degree = sum(e for _, e in items)

    @classmethod
    def of(cls, *factors: Union[VarId, Tuple[VarId, int]]) -> "Monomial":
        """Monomial.of(X(1), (X(2), 3)) is x1*x2^3"""
        exps: Dict[VarId, int] = {}
        for factor in factors:
            if isinstance(factor, VarId):
                var, exp = factor, 1
            else:
                var, exp = factor
            exps[var] = exps.get(var, 0) + exp
        return cls(exps)

    @classmethod
    def power_product(cls, variables: Iterable[VarId], exponent: int) -> "Monomial":
        """v1^e * v2^e * ... (the extremal monomials of the coefficient theorems)"""
        return cls({v: exponent for v in variables})

    @property
    def items(self) -> Tuple[Tuple[VarId, int], ...]:
        return self._items

    @property
    def degree(self) -> int:
        return self._degree

    def exponent(self, var: VarId) -> int:
        for v, e in self._items:
            if v == var:
                return e
        return 0

    def variables(self) -> Tuple[VarId, ...]:
        return tuple(v for v, _ in self._items)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not self._items:
            return other
        if not other._items:
            return self
        merged = dict(self._items)
        for var, exp in other._items:
            merged[var] = merged.get(var, 0) + exp
            if merged[var] > sys.maxsize:
                raise ExponentOverflow(f"exponent of {var} in {self} * {other} exceeds {sys.maxsize}")
        return Monomial._from_sorted(tuple(sorted(merged.items())))

    def divide(self, other: "Monomial") -> Optional["Monomial"]:
        """self / other if other divides self, else None"""
        remaining = dict(self._items)
        for var, exp in other._items:
            have = remaining.get(var, 0)
            if have < exp:
                return None
            if have == exp:
                del remaining[var]
            else:
                remaining[var] = have - exp
        return Monomial._from_sorted(tuple(sorted(remaining.items())))

    def rename(self, mapping: Mapping[VarId, VarId]) -> "Monomial":
        exps: Dict[VarId, int] = {}
        for var, exp in self._items:
            target = mapping.get(var, var)
            exps[target] = exps.get(target, 0) + exp
        return Monomial(exps)

    def grlex_key(self) -> Tuple[int, Tuple[Tuple[int, int, int], ...]]:
        """Sort key; larger key means larger in graded lexicographic order"""
        return (
            self._degree,
            tuple((-ALPHABET_RANK[v.alphabet], -v.index, e) for v, e in self._items),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return "*".join(f"{v}^{e}" if e > 1 else str(v) for v, e in self._items)


ONE_MONOMIAL = Monomial()


class MultiPoly:
    """
    Sparse polynomial: a map Monomial -> nonzero Fraction.

    Instances are treated as immutable; every operation returns a new value.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self._terms: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                self._terms[mono] = value
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "MultiPoly":
        poly = cls.__new__(cls)
        poly._terms = {m: c for m, c in terms.items() if c}
        poly._hash = None
        return poly

    # ---- constructors ----

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar) -> "MultiPoly":
        return cls._wrap({ONE_MONOMIAL: Fraction(value)})

    @classmethod
    def variable(cls, var: VarId) -> "MultiPoly":
        return cls._wrap({Monomial({var: 1}): Fraction(1)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> "MultiPoly":
        return cls._wrap({mono: Fraction(coeff)})

    @classmethod
    def linear_form(cls, coeffs: Mapping[VarId, Scalar], constant: Scalar = 0) -> "MultiPoly":
        terms = {Monomial({v: 1}): Fraction(c) for v, c in coeffs.items()}
        if constant:
            terms[ONE_MONOMIAL] = Fraction(constant)
        return cls._wrap(terms)

    @staticmethod
    def coerce(value: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(value)

    # ---- inspection ----

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order"""
        for mono in sorted(self._terms, key=Monomial.grlex_key, reverse=True):
            yield mono, self._terms[mono]

    def term_map(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def variables(self) -> Tuple[VarId, ...]:
        found = set()
        for mono in self._terms:
            found.update(mono.variables())
        return tuple(sorted(found))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self) -> Degree:
        if not self._terms:
            return NEG_INFINITY
        return max(m.degree for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---- arithmetic ----

    def __add__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        other = MultiPoly.coerce(other)
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            result[mono] = result.get(mono, 0) + coeff
        return MultiPoly._wrap(result)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return MultiPoly.coerce(other) - self

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            factor = Fraction(other)
            return MultiPoly._wrap({m: c * factor for m, c in self._terms.items()})
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                result[mono] = result.get(mono, 0) + c1 * c2
        return MultiPoly._wrap(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        if exponent > sys.maxsize:
            raise ExponentOverflow(f"power {exponent} exceeds {sys.maxsize}")
        result = MultiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ---- structural operations ----

    def rename(self, mapping: Mapping[VarId, VarId]) -> "MultiPoly":
        """Apply a variable renaming (e.g. a transposition) to every monomial"""
        result: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            renamed = mono.rename(mapping)
            result[renamed] = result.get(renamed, 0) + coeff
        return MultiPoly._wrap(result)

    def substitute(self, images: Mapping[VarId, "MultiPoly"]) -> "MultiPoly":
        """Replace variables by polynomials; unmapped variables are kept"""
        power_cache: Dict[Tuple[VarId, int], MultiPoly] = {}

        def power(var: VarId, exp: int) -> MultiPoly:
            key = (var, exp)
            if key not in power_cache:
                power_cache[key] = images[var] ** exp
            return power_cache[key]

        result: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            kept: Dict[VarId, int] = {}
            term = MultiPoly.constant(coeff)
            for var, exp in mono.items:
                if var in images:
                    term = term * power(var, exp)
                else:
                    kept[var] = exp
            if kept:
                term = term * MultiPoly.monomial(Monomial(kept))
            for m, c in term._terms.items():
                result[m] = result.get(m, 0) + c
        return MultiPoly._wrap(result)

    # ---- comparison / display ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({render_polynomial(self)!r})"

    def __str__(self) -> str:
        return render_polynomial(self)


# ==========================================
# OPERATIONS
# ==========================================


def poly_arith(a: MultiPoly, b: MultiPoly, op: Literal["add", "sub", "mul"]) -> MultiPoly:
    """Exact add / sub / mul; the result is always in canonical form"""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation: {op}")


def coefficient_of(p: MultiPoly, m: Monomial) -> Fraction:
    """Exact coefficient of m in p (zero if absent)"""
    return p.coefficient(m)


def coefficient_of_product(a: MultiPoly, b: MultiPoly, m: Monomial) -> Fraction:
    """
    Coefficient of m in a*b without forming the product.

    Only pairs (u, m/u) contribute, so the cost is linear in the size of a.
    """
    total = Fraction(0)
    b_terms = b.term_map()
    for mono, coeff in a.term_map().items():
        cofactor = m.divide(mono)
        if cofactor is not None and cofactor in b_terms:
            total += coeff * b_terms[cofactor]
    return total


def evaluate(p: MultiPoly, point: Mapping[VarId, Scalar]) -> Fraction:
    """Exact value of p at a rational point"""
    powers: Dict[Tuple[VarId, int], Fraction] = {}
    total = Fraction(0)
    for mono, coeff in p.term_map().items():
        value = coeff
        for var, exp in mono.items:
            if var not in point:
                raise MissingAssignment(f"no value assigned to {var}")
            key = (var, exp)
            if key not in powers:
                powers[key] = Fraction(point[var]) ** exp
            value *= powers[key]
        total += value
    return total


class DegreeInfo(NamedTuple):
    total_degree: Degree
    partial_degrees: Dict[VarId, int]


def degree_info(p: MultiPoly) -> DegreeInfo:
    """Total degree (NEG_INFINITY for zero) and the maximal exponent of each variable"""
    partials: Dict[VarId, int] = {}
    for mono in p.term_map():
        for var, exp in mono.items:
            if exp > partials.get(var, 0):
                partials[var] = exp
    return DegreeInfo(p.total_degree, partials)


def homogeneous_components(p: MultiPoly) -> Dict[int, MultiPoly]:
    """Split p by total degree; the components sum back to p"""
    buckets: Dict[int, Dict[Monomial, Fraction]] = {}
    for mono, coeff in p.term_map().items():
        buckets.setdefault(mono.degree, {})[mono] = coeff
    return {deg: MultiPoly._wrap(buckets[deg]) for deg in sorted(buckets)}


def product(factors: Iterable[MultiPoly]) -> MultiPoly:
    result = MultiPoly.one()
    for factor in factors:
        result = result * factor
    return result


def render_polynomial(p: MultiPoly) -> str:
    """
    Canonical text: descending graded-lex terms, coefficients as p/q,
    "*" between factors and "^" for powers. Zero renders as "0".
    """
    pieces = []
    for mono, coeff in p.terms():
        magnitude = abs(coeff)
        if not mono.items:
            body = str(magnitude)
        elif magnitude == 1:
            body = str(mono)
        else:
            body = f"{magnitude}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces) if pieces else "0"
