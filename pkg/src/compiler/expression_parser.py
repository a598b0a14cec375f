"""
Expression Parser Module
Recursive-descent parser for class expressions and polynomial literals, and the
canonical text rendering of the resulting trees
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Union

from pydantic import ValidationError

from src.algebra.polynomial import Monomial, MultiPoly
from src.compiler.class_compiler import polynomial_from_tree
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
    chern,
    class_power,
    class_product,
    class_sum,
    constant,
    contains_class_atoms,
    dual,
    euler,
    negate,
    root,
    schur,
    sym,
    tensor,
    wedge,
)
from src.models.grassmann import Partition
from src.utils.exceptions import InputError, ParseError
from src.utils.logging_config import get_logger

logger = get_logger(__name__)

# ==========================================
# TOKENIZER
# ==========================================

_TOKEN_PATTERN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<number>[0-9]+(?:\s*/\s*[0-9]+)?)"
    r"|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<punct>[()\[\],+\-*^])"
)
_VARIABLE = re.compile(r"^(?:[xy][0-9]+|z[0-9]*)$")
CLASS_KEYWORDS = frozenset({"c", "euler", "schur"})
BUNDLE_KEYWORDS = frozenset({"S", "Q", "dual", "sym", "tensor", "wedge"})
ATOM_START = ("RATIONAL", "VAR", "(", "c", "euler", "schur")


class Token(NamedTuple):
    kind: str  # RATIONAL, VAR, NAME, a punctuation character, or END
    text: str
    offset: int  # 1-based byte offset into the source


def tokenize(text: str) -> List[Token]:
    """Split text into tokens; offsets count bytes of the UTF-8 encoding, from 1"""
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        offset = len(text[:position].encode("utf-8")) + 1
        if match is None:
            raise ParseError(f"unexpected character {text[position]!r}", offset, ATOM_START)
        kind = match.lastgroup
        lexeme = match.group()
        if kind == "number":
            tokens.append(Token("RATIONAL", re.sub(r"\s+", "", lexeme), offset))
        elif kind == "name":
            if _VARIABLE.match(lexeme):
                tokens.append(Token("VAR", lexeme, offset))
            elif lexeme in CLASS_KEYWORDS or lexeme in BUNDLE_KEYWORDS:
                tokens.append(Token("NAME", lexeme, offset))
            else:
                raise ParseError(f"unknown name {lexeme!r}", offset, ATOM_START)
        elif kind == "punct":
            tokens.append(Token(lexeme, lexeme, offset))
        position = match.end()
    tokens.append(Token("END", "", len(text.encode("utf-8")) + 1))
    return tokens


# ==========================================
# PARSER
# ==========================================


class ExpressionParser:
    """
    expr    := ["-"] term (("+"|"-") term)*
    term    := factor ("*" factor)*
    factor  := atom ("^" NAT)?
    atom    := RATIONAL | VAR | "(" expr ")" | "c(" NAT "," bundle ")"
             | "euler(" bundle ")" | "schur(" partition "," bundle ")"
    bundle  := "S" | "Q" | "dual(" bundle ")" | "sym(" NAT "," bundle ")"
             | "tensor(" bundle "," bundle ")" | "wedge(" NAT "," bundle ")"
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def _fail(self, message: str, expected: Sequence[str]) -> ParseError:
        token = self.current
        found = "end of input" if token.kind == "END" else repr(token.text)
        return ParseError(f"{message}, found {found}", token.offset, expected)

    def _expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            raise self._fail(f"expected {kind!r}", [kind])
        return self._advance()

    def _keyword(self) -> Optional[str]:
        return self.current.text if self.current.kind == "NAME" else None

    # ---- entry ----

    def parse(self) -> ClassExpr:
        node = self._expr()
        if self.current.kind != "END":
            raise self._fail("unexpected trailing input", ["+", "-", "*", "^", "END"])
        return node

    # ---- expressions ----

    def _expr(self) -> ClassExpr:
        negative = False
        if self.current.kind == "-":
            self._advance()
            negative = True
        first = self._term()
        terms = [negate(first) if negative else first]
        while self.current.kind in ("+", "-"):
            sign = self._advance().kind
            term = self._term()
            terms.append(negate(term) if sign == "-" else term)
        return class_sum(*terms)

    def _term(self) -> ClassExpr:
        factors = [self._factor()]
        while self.current.kind == "*":
            self._advance()
            factors.append(self._factor())
        return class_product(*factors)

    def _factor(self) -> ClassExpr:
        base = self._atom()
        if self.current.kind == "^":
            self._advance()
            return class_power(base, self._nat())
        return base

    def _atom(self) -> ClassExpr:
        token = self.current
        if token.kind == "RATIONAL":
            return constant(self._rational())
        if token.kind == "VAR":
            self._advance()
            alphabet = token.text[0]
            index = int(token.text[1:]) if len(token.text) > 1 else 1
            if index < 1:
                raise ParseError(f"variable index must be positive: {token.text}", token.offset, ["VAR"])
            return root(alphabet, index)  # type: ignore[arg-type]
        if token.kind == "(":
            self._advance()
            inner = self._expr()
            self._expect(")")
            return inner

        keyword = self._keyword()
        if keyword == "c":
            self._advance()
            self._expect("(")
            index = self._nat()
            self._expect(",")
            bundle = self._bundle()
            self._expect(")")
            return chern(index, bundle)
        if keyword == "euler":
            self._advance()
            self._expect("(")
            bundle = self._bundle()
            self._expect(")")
            return euler(bundle)
        if keyword == "schur":
            self._advance()
            self._expect("(")
            partition = self._partition()
            self._expect(",")
            bundle = self._bundle()
            self._expect(")")
            return schur(partition, bundle)
        raise self._fail("expected an expression", ATOM_START)

    # ---- literals ----

    def _rational(self) -> Fraction:
        token = self._expect("RATIONAL")
        numerator, _, denominator = token.text.partition("/")
        if denominator and int(denominator) == 0:
            raise ParseError(f"zero denominator in {token.text}", token.offset, ["NAT"])
        return Fraction(int(numerator), int(denominator or 1))

    def _nat(self) -> int:
        token = self.current
        if token.kind != "RATIONAL" or "/" in token.text:
            raise self._fail("expected a natural number", ["NAT"])
        self._advance()
        return int(token.text)

    def _positive(self) -> int:
        token = self.current
        value = self._nat()
        if value == 0:
            raise ParseError("degree must be positive", token.offset, ["NAT"])
        return value

    def _partition(self) -> Partition:
        start = self._expect("[")
        parts = [self._nat()]
        while self.current.kind == ",":
            self._advance()
            parts.append(self._nat())
        self._expect("]")
        try:
            return Partition(parts=tuple(parts))
        except ValidationError as e:
            raise ParseError(f"parts must be weakly decreasing: {parts}", start.offset, ["NAT"]) from e

    # ---- bundles ----

    def _bundle(self) -> BundleExpr:
        keyword = self._keyword()
        if keyword in ("S", "Q"):
            self._advance()
            return TautologicalBundle(name=keyword)
        if keyword == "dual":
            self._advance()
            self._expect("(")
            base = self._bundle()
            self._expect(")")
            return dual(base)
        if keyword in ("sym", "wedge"):
            self._advance()
            self._expect("(")
            degree = self._positive()
            self._expect(",")
            base = self._bundle()
            self._expect(")")
            return sym(degree, base) if keyword == "sym" else wedge(degree, base)
        if keyword == "tensor":
            self._advance()
            self._expect("(")
            left = self._bundle()
            self._expect(",")
            right = self._bundle()
            self._expect(")")
            return tensor(left, right)
        raise self._fail("expected a bundle", sorted(BUNDLE_KEYWORDS))


def parse_class_expression(text: str) -> ClassExpr:
    """Parse text into a ClassExpr tree (raw root variables allowed)"""
    node = ExpressionParser(text).parse()
    logger.debug(f"parsed {text!r} as {node.kind}")
    return node


def parse_expression(text: str) -> Union[ClassExpr, MultiPoly]:
    """
    Parse class-expression or polynomial text.

    Returns a MultiPoly when the text mentions no chern/euler/schur atoms,
    otherwise the ClassExpr tree (expansion needs a Grassmannian).
    """
    node = parse_class_expression(text)
    if contains_class_atoms(node):
        return node
    return polynomial_from_tree(node)


def parse_polynomial(text: str) -> MultiPoly:
    result = parse_expression(text)
    if not isinstance(result, MultiPoly):
        raise InputError(f"expected a polynomial literal, got class expression {text!r}")
    return result


def parse_monomial(text: str) -> Monomial:
    """A product of variable powers with coefficient 1, e.g. "x1^2*y1" or "1" """
    poly = parse_polynomial(text)
    terms = list(poly.terms())
    if len(terms) != 1 or terms[0][1] != 1:
        raise InputError(f"{text!r} is not a monomial")
    return terms[0][0]


# ==========================================
# CANONICAL RENDERING
# ==========================================


def render_bundle(bundle: BundleExpr) -> str:
    if isinstance(bundle, TautologicalBundle):
        return bundle.name
    if isinstance(bundle, DualBundle):
        return f"dual({render_bundle(bundle.base)})"
    if isinstance(bundle, SymmetricPowerBundle):
        return f"sym({bundle.degree},{render_bundle(bundle.base)})"
    if isinstance(bundle, ExteriorPowerBundle):
        return f"wedge({bundle.degree},{render_bundle(bundle.base)})"
    if isinstance(bundle, TensorBundle):
        return f"tensor({render_bundle(bundle.left)},{render_bundle(bundle.right)})"
    raise InputError(f"unknown bundle kind: {bundle!r}")


def _negative_led(node: ClassExpr) -> bool:
    if isinstance(node, ConstantClass):
        return node.value < 0
    if isinstance(node, ProductClass):
        head = node.factors[0]
        return isinstance(head, ConstantClass) and head.value < 0
    return False


def _render_factor(node: ClassExpr) -> str:
    if isinstance(node, (SumClass, ProductClass)) or _negative_led(node):
        return f"({render_class(node)})"
    return render_class(node)


def _render_product(node: ProductClass) -> str:
    factors = list(node.factors)
    prefix = ""
    head = factors[0]
    if isinstance(head, ConstantClass) and len(factors) > 1:
        value = head.value
        if value < 0:
            prefix = "-"
            value = -value
        if value == 1:
            factors = factors[1:]
        else:
            factors = [constant(value)] + factors[1:]
    return prefix + "*".join(_render_factor(f) for f in factors)


def _render_term(node: ClassExpr) -> str:
    if isinstance(node, SumClass):
        return f"({render_class(node)})"
    return render_class(node)


def render_class(node: ClassExpr) -> str:
    """Canonical text for a ClassExpr; parsing the result gives back an equal tree"""
    if isinstance(node, ConstantClass):
        return str(node.value)
    if isinstance(node, RootVariable):
        if node.alphabet == "z" and node.index == 1:
            return "z"
        return f"{node.alphabet}{node.index}"
    if isinstance(node, ChernClass):
        return f"c({node.index},{render_bundle(node.bundle)})"
    if isinstance(node, EulerClass):
        return f"euler({render_bundle(node.bundle)})"
    if isinstance(node, SchurClass):
        return f"schur({node.partition},{render_bundle(node.bundle)})"
    if isinstance(node, ProductClass):
        return _render_product(node)
    if isinstance(node, PowerClass):
        base = node.base
        if isinstance(base, (SumClass, ProductClass, PowerClass)) or _negative_led(base):
            return f"({render_class(base)})^{node.exponent}"
        return f"{render_class(base)}^{node.exponent}"
    if isinstance(node, SumClass):
        pieces = [_render_term(node.terms[0])]
        for term in node.terms[1:]:
            if _negative_led(term):
                pieces.append(f" - {_render_term(negate(term))}")
            else:
                pieces.append(f" + {_render_term(term)}")
        return "".join(pieces)
    raise InputError(f"unknown class kind: {node!r}")
