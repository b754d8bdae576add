"""Expression language for algebra elements.

    expr   :: term [ ('+' | '-') term ]*
    term   :: factor [ '*' factor ]*
    factor :: [ '-' ] atom [ "'" ]
    atom   :: S<i> | T<i> | R<i> | P<i> | I | chi[a,b(;slot)] [ unit ] | unit | scalar | '(' expr ')'
    unit   :: U(r,k(,p))
    scalar :: rational | rational 'i' | 'i'

Whitespace is ignored. A postfix ' is the adjoint. A bare unit stands for
chi_(ran beta_g) U^g.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from pyparsing import (
    Forward,
    Keyword,
    Literal,
    Optional,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
    ZeroOrMore,
)

from algebra.element import AlgebraElement, substitute_unit
from algebra.generators import cuntz_generator, matrix_generators
from algebra.session import Session
from config import SessionConfig
from core.clopen import ClopenSet
from core.errors import ConfigError, ExprSyntaxError
from core.group import GElem
from core.nadic import NAdic
from core.scalar import I_UNIT, Scalar
from dynamics.partial_action import SlotSet

logger = logging.getLogger(__name__)

ParserElement.enable_packrat()


# -- syntax tree ----------------------------------------------------------


@dataclass(frozen=True)
class ExprAst:
    pass


@dataclass(frozen=True)
class GeneratorRef(ExprAst):
    family: str
    index: int


@dataclass(frozen=True)
class IdentityRef(ExprAst):
    pass


@dataclass(frozen=True)
class IndicatorMonomial(ExprAst):
    a: Fraction
    b: Fraction
    slot: int | None = None
    r: Fraction = Fraction(0)
    k: int = 0
    p: int | None = None


@dataclass(frozen=True)
class UnitRef(ExprAst):
    r: Fraction
    k: int
    p: int | None = None


@dataclass(frozen=True)
class ScalarLiteral(ExprAst):
    value: Scalar


@dataclass(frozen=True)
class Adjoint(ExprAst):
    operand: ExprAst


@dataclass(frozen=True)
class Negate(ExprAst):
    operand: ExprAst


@dataclass(frozen=True)
class BinaryOp(ExprAst):
    op: str
    left: ExprAst
    right: ExprAst


# -- grammar --------------------------------------------------------------


def _fraction(text: str) -> Fraction:
    return Fraction(text.replace(" ", ""))


def _make_generator(tokens):
    text = tokens[0]
    return GeneratorRef(text[0], int(text[1:]))


def _make_indicator(tokens):
    t = list(tokens)
    a, b = _fraction(t[0]), _fraction(t[1])
    rest = t[2:]
    slot = None
    if rest and rest[0] == ";":
        slot = int(rest[1])
        rest = rest[2:]
    if not rest:
        return IndicatorMonomial(a, b, slot)
    r, k = _fraction(rest[0]), int(rest[1])
    p = int(rest[2]) if len(rest) > 2 else None
    return IndicatorMonomial(a, b, slot, r, k, p)


def _make_unit(tokens):
    t = list(tokens)
    return UnitRef(_fraction(t[0]), int(t[1]), int(t[2]) if len(t) > 2 else None)


def _make_scalar(tokens):
    text = tokens[0]
    if text == "i":
        return ScalarLiteral(I_UNIT)
    if text.endswith("i"):
        return ScalarLiteral(Scalar(0, _fraction(text[:-1])))
    return ScalarLiteral(Scalar(_fraction(text)))


def _make_factor(tokens):
    t = list(tokens)
    negate = t[0] == "-"
    if negate:
        t = t[1:]
    node = t[0]
    if len(t) > 1:
        node = Adjoint(node)
    return Negate(node) if negate else node


def _fold(tokens):
    t = list(tokens)
    node = t[0]
    for op, right in zip(t[1::2], t[2::2]):
        node = BinaryOp(op, node, right)
    return node


def _build_grammar() -> ParserElement:
    lpar, rpar = Suppress("("), Suppress(")")
    lbrack, rbrack = Suppress("["), Suppress("]")
    comma = Suppress(",")

    unsigned_rational = Regex(r"\d+(\s*/\s*\d+)?")
    signed_rational = Regex(r"-?\s*\d+(\s*/\s*\d+)?")
    signed_int = Regex(r"-?\d+")

    generator = Regex(r"[STRP]\d+").set_parse_action(_make_generator)
    identity = Keyword("I").set_parse_action(lambda: IdentityRef())
    unit = Suppress(Keyword("U")) + lpar + signed_rational + comma + signed_int + Optional(comma + signed_int) + rpar
    indicator = (
        Suppress(Keyword("chi"))
        + lbrack
        + unsigned_rational
        + comma
        + unsigned_rational
        + Optional(Literal(";") + Regex(r"\d+"))
        + rbrack
        + Optional(unit)
    ).set_parse_action(_make_indicator)
    bare_unit = unit.copy().set_parse_action(_make_unit)
    scalar = (Regex(r"\d+(/\d+)?i?(?![A-Za-z0-9_])") | Keyword("i")).set_parse_action(_make_scalar)

    expr = Forward()
    atom = generator | identity | indicator | bare_unit | scalar | (lpar + expr + rpar)
    factor = (Optional(Literal("-")) + atom + Optional(Literal("'"))).set_parse_action(_make_factor)
    term = (factor + ZeroOrMore(Literal("*") + factor)).set_parse_action(_fold)
    expr <<= (term + ZeroOrMore((Literal("+") | Literal("-")) + term)).set_parse_action(_fold)
    return expr


_GRAMMAR = _build_grammar()


def parse_ast(text: str) -> ExprAst:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as e:
        raise ExprSyntaxError(f"unexpected input in '{text}'", position=e.loc, column=e.col) from None
    except ZeroDivisionError as e:
        raise ExprSyntaxError(f"zero denominator in '{text}'") from e


# -- evaluation -----------------------------------------------------------


class _Evaluator:
    def __init__(self, session: Session):
        self.session = session
        self._matrix_gens: dict[str, AlgebraElement] | None = None

    def lift(self, value) -> AlgebraElement:
        if isinstance(value, Scalar):
            return AlgebraElement.identity(self.session).scale(value)
        return value

    def generator(self, node: GeneratorRef) -> AlgebraElement:
        if node.family == "S":
            return cuntz_generator(self.session, node.index)
        if self._matrix_gens is None:
            self._matrix_gens = matrix_generators(self.session)
        name = f"{node.family}{node.index}"
        if name not in self._matrix_gens:
            raise ConfigError(f"no generator {name} for n={self.session.n}, k={self.session.k}")
        return self._matrix_gens[name]

    def indicator(self, node: IndicatorMonomial) -> AlgebraElement:
        session = self.session
        n = session.n
        a, b = NAdic.of(node.a, n), NAdic.of(node.b, n)
        if a >= b:
            raise ConfigError(f"interval [{a.to_text()},{b.to_text()}] is empty")
        region = ClopenSet.interval(a, b, n)
        key = session.make_key(GElem(NAdic.of(node.r, n), node.k), node.p or 0)
        if node.slot is None:
            coeff = SlotSet(tuple(region for _ in range(session.k)))
        else:
            coeff = SlotSet.single(region, node.slot, session.k)
        return AlgebraElement.monomial(session, key, coeff)

    def evaluate(self, node: ExprAst):
        if isinstance(node, GeneratorRef):
            return self.generator(node)
        if isinstance(node, IdentityRef):
            return AlgebraElement.identity(self.session)
        if isinstance(node, IndicatorMonomial):
            return self.indicator(node)
        if isinstance(node, UnitRef):
            key = self.session.make_key(GElem(NAdic.of(node.r, self.session.n), node.k), node.p or 0)
            return substitute_unit(self.session, key)
        if isinstance(node, ScalarLiteral):
            return node.value
        if isinstance(node, Adjoint):
            value = self.evaluate(node.operand)
            return value.conjugate() if isinstance(value, Scalar) else value.adjoint()
        if isinstance(node, Negate):
            value = self.evaluate(node.operand)
            return -value
        if isinstance(node, BinaryOp):
            left, right = self.evaluate(node.left), self.evaluate(node.right)
            if node.op == "*":
                if isinstance(left, Scalar) and isinstance(right, AlgebraElement):
                    return right.scale(left)
                return left * right
            if isinstance(left, Scalar) and isinstance(right, Scalar):
                return left + right if node.op == "+" else left - right
            left, right = self.lift(left), self.lift(right)
            return left + right if node.op == "+" else left - right
        raise ConfigError(f"unknown syntax node {node!r}")


def parse_expr(text: str, cfg: SessionConfig | Session) -> AlgebraElement:
    """Parse and evaluate text to a canonical element of the configured session."""
    session = cfg.session() if isinstance(cfg, SessionConfig) else cfg
    ast = parse_ast(text)
    logger.debug(f"parsed '{text}' as {ast}")
    evaluator = _Evaluator(session)
    return evaluator.lift(evaluator.evaluate(ast))
