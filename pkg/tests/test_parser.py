from fractions import Fraction

import pytest

from algebra.element import AlgebraElement, substitute_unit
from algebra.generators import cuntz_generator, matrix_generators
from config import SessionConfig
from core.errors import CoefficientInvariantError, ConfigError, ExprSyntaxError, NotNAdicError, PcplabError
from core.group import GElem, HElem
from core.nadic import NAdic
from core.scalar import Scalar
from utils.parser import Adjoint, BinaryOp, GeneratorRef, IndicatorMonomial, Negate, parse_ast, parse_expr


def test_ast_shapes():
    assert parse_ast("S1'") == Adjoint(GeneratorRef("S", 1))
    assert parse_ast("-S2") == Negate(GeneratorRef("S", 2))
    assert parse_ast("S1 * S2 + S1") == BinaryOp(
        "+", BinaryOp("*", GeneratorRef("S", 1), GeneratorRef("S", 2)), GeneratorRef("S", 1)
    )
    assert parse_ast("chi[1/4, 1/2;1] U(-1/2,2,1)") == IndicatorMonomial(
        Fraction(1, 4), Fraction(1, 2), 1, Fraction(-1, 2), 2, 1
    )
    assert parse_ast("chi[0,1]") == IndicatorMonomial(Fraction(0), Fraction(1))


def test_generator_relations_through_text(x2):
    one = AlgebraElement.identity(x2)
    assert parse_expr("S1' * S1", x2) == one
    assert parse_expr("S1*S1' + S2*S2'", x2) == one
    assert parse_expr("S1' * S2", x2).is_zero()
    assert parse_expr("chi[0,1/2] U(0,1)", x2) == cuntz_generator(x2, 1)


def test_scalars(x2):
    one = AlgebraElement.identity(x2)
    assert parse_expr("2*I - I", x2) == one
    assert parse_expr("(1+2i)*I", x2) == one.scale(Scalar(1, 2))
    assert parse_expr("i*I + i'*I", x2).is_zero()
    assert parse_expr("1/2", x2) == one.scale(Fraction(1, 2))
    assert parse_expr("-1/2i*chi[0,1]", x2) == one.scale(Scalar(0, Fraction(-1, 2)))


def test_matrix_expressions(y22):
    gens = matrix_generators(y22)
    assert parse_expr("T2' * T2", y22) == gens["P2"]
    assert parse_expr("P1 + P2", y22) == AlgebraElement.identity(y22)
    assert parse_expr("chi[0,1;1]", y22) == gens["P2"]
    assert parse_expr("chi[1/2,1;0] U(1/2,1,-1)", y22) == gens["T2"]


def test_accepts_config():
    cfg = SessionConfig(3)
    assert parse_expr("S3' * S3", cfg) == AlgebraElement.identity(cfg.session())


@pytest.mark.parametrize("text", ["S1 +", "S1 * * S2", "chi[0,1", "U(0,1", "S1''", ""])
def test_syntax_errors(x2, text):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text, x2)
    assert info.value.position >= 0


def test_zero_denominator_is_syntax_error(x2):
    with pytest.raises(ExprSyntaxError):
        parse_expr("1/0", x2)


def test_semantic_errors(x2):
    with pytest.raises(CoefficientInvariantError):
        parse_expr("chi[0,1] U(1/2,1)", x2)
    with pytest.raises(NotNAdicError):
        parse_expr("chi[0,1/3]", x2)
    with pytest.raises(ConfigError):
        parse_expr("chi[1/2,1/4]", x2)
    with pytest.raises(ConfigError):
        parse_expr("S3", x2)
    with pytest.raises(PcplabError):
        parse_expr("T1", x2)


def test_bare_units(x2, y22):
    assert parse_expr("U(0,1)", x2) == cuntz_generator(x2, 1)
    assert parse_expr("U(1/2,1)", x2) == cuntz_generator(x2, 2)
    assert parse_expr("U(-1,-1)", x2) == cuntz_generator(x2, 2).adjoint()
    h = HElem(GElem(NAdic(1, 1, 2), 1), -1)
    assert parse_expr("U(1/2,1,-1)", y22) == substitute_unit(y22, h) == matrix_generators(y22)["T2"]


def test_syntax_error_message_is_short(x2):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("U(0,1)) $", x2)
    assert len(str(info.value)) < 80
    assert "unexpected input" in str(info.value)
