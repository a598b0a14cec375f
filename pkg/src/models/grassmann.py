"""
Grassmannian Domain Models
Pydantic v2 models for G(k,n), partitions, weight vectors and fixed-point indices
"""

import itertools
import random
from fractions import Fraction
from typing import Iterator, List, Literal, Optional, Sequence, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    field_validator,
    model_validator,
)

from src.utils.exceptions import InputError, ParseError


class GrassmannSpec(BaseModel):
    """G(k,n): k-planes in n-space, with Chern-root alphabets x1..xk and y1..y(n-k)"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    k: PositiveInt
    n: PositiveInt

    @model_validator(mode="after")
    def _check_k_below_n(self) -> "GrassmannSpec":
        if not self.k < self.n:
            raise ValueError(f"G(k,n) requires 0 < k < n, got k={self.k}, n={self.n}")
        return self

    @property
    def dimension(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def quotient_rank(self) -> int:
        return self.n - self.k

    @property
    def orientation_sign(self) -> int:
        """(-1)^{k(n-k)}, the sign relating e_{p_I} to the cross-weight product"""
        return -1 if self.dimension % 2 else 1

    def schubert_box(self, bundle: Literal["S_dual", "Q"] = "Q") -> Tuple[int, int]:
        """
        (rows, cols) of the box indexing Schur classes that pair to 1.

        s_lambda(Q) is nonzero only for lambda inside (n-k) rows by k columns;
        s_lambda(S^dual) lives in k rows by (n-k) columns.
        """
        if bundle == "Q":
            return (self.n - self.k, self.k)
        return (self.k, self.n - self.k)

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"


class Partition(BaseModel):
    """Weakly decreasing non-negative parts; trailing zeros are dropped on construction"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    parts: Tuple[NonNegativeInt, ...] = ()

    @field_validator("parts")
    @classmethod
    def _weakly_decreasing(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {list(parts)}")
        trimmed = list(parts)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return tuple(trimmed)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the CLI syntax "[2,1]" """
        stripped = text.strip()
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise ParseError("partition must be written as [a,b,...]", 1, ["["])
        body = stripped[1:-1].strip()
        if not body:
            return cls()
        try:
            values = tuple(int(piece) for piece in body.split(","))
        except ValueError as e:
            raise ParseError(f"invalid partition {text!r}: {e}", 1, ["NAT"]) from e
        return cls(parts=values)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, length: int) -> Tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            parts=tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return self.length <= rows and (not self.parts or self.parts[0] <= cols)

    def complement(self, rows: int, cols: int) -> "Partition":
        """Complement in the rows x cols box: mu_i = cols - lambda_{rows+1-i}"""
        if not self.fits_in_box(rows, cols):
            raise InputError(f"{self} does not fit in a {rows}x{cols} box")
        padded = self.padded(rows)
        return Partition(parts=tuple(cols - padded[rows - 1 - i] for i in range(rows)))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]" if self.parts else "[0]"


def box_partitions(rows: int, cols: int) -> List[Partition]:
    """All partitions inside a rows x cols box, ordered by size then reverse-lex"""
    found = [
        Partition(parts=tuple(sorted(combo, reverse=True)))
        for combo in itertools.combinations_with_replacement(range(cols + 1), rows)
    ]
    unique = {p.parts: p for p in found}
    return sorted(unique.values(), key=lambda p: (p.size, tuple(-x for x in p.parts)))


class WeightVector(BaseModel):
    """Pairwise distinct rational torus weights lambda_1..lambda_n"""

    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    values: Tuple[Fraction, ...] = Field(min_length=1)

    @field_validator("values", mode="before")
    @classmethod
    def _to_fractions(cls, values: Sequence[object]) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v) if not isinstance(v, Fraction) else v for v in values)  # type: ignore[arg-type]

    @field_validator("values")
    @classmethod
    def _pairwise_distinct(cls, values: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
        if len(set(values)) != len(values):
            raise ValueError(f"weights must be pairwise distinct: {[str(v) for v in values]}")
        return values

    @classmethod
    def of(cls, *values: object) -> "WeightVector":
        return cls(values=tuple(values))

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Comma-separated rationals, e.g. "0,1,5/2" """
        try:
            return cls(values=tuple(Fraction(piece.strip()) for piece in text.split(",")))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"invalid weight list {text!r}: {e}", 1, ["RATIONAL"]) from e

    @classmethod
    def random(
        cls, n: int, rng: random.Random, rational: bool = False
    ) -> "WeightVector":
        """
        n distinct weights drawn from [-5n, 5n].

        With rational=True the integers are divided by random denominators
        in 1..4 and collisions are redrawn.
        """
        if not rational:
            return cls(values=tuple(rng.sample(range(-5 * n, 5 * n + 1), n)))
        chosen: List[Fraction] = []
        while len(chosen) < n:
            candidate = Fraction(rng.randint(-5 * n, 5 * n), rng.randint(1, 4))
            if candidate not in chosen:
                chosen.append(candidate)
        return cls(values=tuple(chosen))

    @property
    def n(self) -> int:
        return len(self.values)

    def value(self, index: int) -> Fraction:
        """1-based access, matching lambda_i"""
        return self.values[index - 1]

    def restrict(self, indices: Sequence[int]) -> Tuple[Fraction, ...]:
        return tuple(self.values[i - 1] for i in indices)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


class IndexSubset(BaseModel):
    """A subset I of [n], members strictly increasing"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    members: Tuple[PositiveInt, ...]
    ambient: PositiveInt

    @model_validator(mode="after")
    def _check_members(self) -> "IndexSubset":
        for a, b in zip(self.members, self.members[1:]):
            if a >= b:
                raise ValueError(f"subset members must be strictly increasing: {self.members}")
        if self.members and self.members[-1] > self.ambient:
            raise ValueError(f"subset {self.members} is not inside [{self.ambient}]")
        return self

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def complement(self) -> Tuple[int, ...]:
        chosen = set(self.members)
        return tuple(i for i in range(1, self.ambient + 1) if i not in chosen)

    @classmethod
    def colex(cls, k: int, n: int) -> Iterator["IndexSubset"]:
        """All k-subsets of [n] in colexicographic order"""
        combos = sorted(itertools.combinations(range(1, n + 1), k), key=lambda c: c[::-1])
        for combo in combos:
            yield cls(members=combo, ambient=n)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.members) + "}"


class FixedPoint(BaseModel):
    """Torus-fixed point p_I of G(k,n): the coordinate k-plane spanned by e_i, i in I"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    subset: IndexSubset

    @classmethod
    def all(cls, spec: GrassmannSpec) -> List["FixedPoint"]:
        return [cls(subset=s) for s in IndexSubset.colex(spec.k, spec.n)]

    def check_spec(self, spec: GrassmannSpec, lambdas: Optional[WeightVector] = None) -> None:
        if self.subset.size != spec.k or self.subset.ambient != spec.n:
            raise InputError(f"fixed point {self.subset} does not belong to {spec}")
        if lambdas is not None and lambdas.n != spec.n:
            raise InputError(f"{spec} needs {spec.n} weights, got {lambdas.n}")
