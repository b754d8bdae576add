from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.element import AlgebraElement, elem_adjoint, elem_linear, elem_mul, substitute_unit
from algebra.generators import cuntz_generator
from algebra.session import Session
from core.clopen import ClopenSet
from core.errors import BaseMismatchError, CoefficientInvariantError, ConfigError
from core.group import GElem, HElem
from core.nadic import NAdic
from core.scalar import I_UNIT, Scalar
from dynamics.partial_action import SlotSet
from tests.strategies import elements


def g(r, k, n=2):
    return GElem.of(Fraction(r), k, n)


def interval(a, b, n=2):
    return ClopenSet.interval(NAdic.of(Fraction(a), n), NAdic.of(Fraction(b), n), n)


def test_isometry_and_orthogonal_ranges(x2):
    one = AlgebraElement.identity(x2)
    s1, s2 = cuntz_generator(x2, 1), cuntz_generator(x2, 2)
    assert elem_mul(s1.adjoint(), s1) == one
    assert (s1 * s1.adjoint()) * (s2 * s2.adjoint()) == AlgebraElement.zero(x2)


def test_adjoint_examples(x2):
    s2 = cuntz_generator(x2, 2)
    assert elem_adjoint(s2) == AlgebraElement.monomial(x2, g(-1, -1), ClopenSet.full(2))
    a = AlgebraElement.monomial(x2, g("1/2", 1), interval("1/2", "3/4"))
    assert a.adjoint() == AlgebraElement.monomial(x2, g(-1, -1), interval(0, "1/2"))


def test_linear_combination(x2):
    s1, s2 = cuntz_generator(x2, 1), cuntz_generator(x2, 2)
    one = AlgebraElement.identity(x2)
    assert s1 * s1.adjoint() + s2 * s2.adjoint() == one
    assert elem_linear(I_UNIT, one, Scalar(0), one) == one.scale(I_UNIT)
    assert (one - one).is_zero()


def test_monomial_rejects_coefficient_outside_range(x2):
    with pytest.raises(CoefficientInvariantError) as info:
        AlgebraElement.monomial(x2, g("1/2", 1), ClopenSet.full(2))
    assert info.value.allowed == interval("1/2", 1)


def test_substitute_unit_is_proper_partial_isometry(x2):
    up, down = substitute_unit(x2, g(0, 1)), substitute_unit(x2, g(0, -1))
    product = up * down
    assert product == AlgebraElement.monomial(x2, g(0, 0), interval(0, "1/2"))
    assert product != AlgebraElement.identity(x2)


def test_identity_of_empty_domain_is_zero(x2):
    assert substitute_unit(x2, g(1, 0)).is_zero()


def test_sessions_do_not_mix(x2, x3, y22):
    with pytest.raises(BaseMismatchError):
        AlgebraElement.identity(x2) + AlgebraElement.identity(x3)
    with pytest.raises(BaseMismatchError):
        x2.parts(HElem(g(0, 0), 0))
    with pytest.raises(BaseMismatchError):
        y22.parts(g(0, 0))


def test_session_rejects_slots_outside_matrix_mode():
    with pytest.raises(ConfigError):
        Session(2, 2, False)
    with pytest.raises(ConfigError):
        Session.cuntz(2).make_key(g(0, 0), 1)


def test_repeated_keys_need_from_terms(x2):
    one = AlgebraElement.identity(x2)
    term = one.terms[0]
    with pytest.raises(ConfigError):
        AlgebraElement(x2, (term, term))
    assert AlgebraElement.from_terms(x2, [term, term]) == one.scale(2)


def test_matrix_pullback_moves_slots(y22):
    key = HElem(g(0, 0), 1)
    moved = AlgebraElement.monomial(y22, key, SlotSet((ClopenSet.empty(2), ClopenSet.full(2))))
    adj = moved.adjoint()
    assert adj.keys() == [HElem(g(0, 0), -1)]
    assert adj.coefficient_of(HElem(g(0, 0), -1))[0].support().is_full()
    assert (adj * moved).coefficient_of(y22.identity_key())[0].support().is_full()


def test_core_detection(x2):
    assert AlgebraElement.identity(x2).is_core()
    assert not cuntz_generator(x2, 1).is_core()


@settings(max_examples=25)
@given(st.data())
def test_star_algebra_laws(x2, data):
    a = data.draw(elements(x2))
    b = data.draw(elements(x2))
    c = data.draw(elements(x2))
    assert (a * b) * c == a * (b * c)
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()
    assert a.adjoint().adjoint() == a
    assert a * (b + c) == a * b + a * c
    assert (a * b).satisfies_invariant()


@settings(max_examples=20)
@given(st.data())
def test_star_algebra_laws_matrix(y22, data):
    a = data.draw(elements(y22, max_terms=2))
    b = data.draw(elements(y22, max_terms=2))
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()
    assert a.adjoint().adjoint() == a
    assert a.adjoint().satisfies_invariant()
