from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import ComposabilityError, ConfigError
from core.group import GElem, HElem, g_inv, g_mul, h_op
from core.nadic import Word
from dynamics.groupoid import (
    GroupoidElement,
    YGroupoidElement,
    cocycle,
    graph_consistency,
    groupoid_compose,
    groupoid_inverse,
    groupoid_unit,
    r_offset,
    y_cocycle,
    y_graph_consistency,
    y_groupoid_compose,
)
from tests.strategies import words


def w(*digits, n=2):
    return Word(digits, n)


def g(r, k, n=2):
    return GElem.of(Fraction(r), k, n)


def test_r_offset():
    assert r_offset(w(1), w(0, 1)).is_zero()
    assert r_offset(w(1, 0), w()).to_fraction() == Fraction(1, 2)


def test_cocycle_examples():
    assert cocycle(GroupoidElement(w(1, 1), w())) == g("3/4", 2)
    assert cocycle(GroupoidElement(w(1), w(0, 1))) == g(0, -1)
    assert cocycle(GroupoidElement(w(2, n=3), w(0, n=3))) == g("2/3", 0, 3)


def test_compose_substitutes_prefix():
    first = GroupoidElement(w(1), w(0))
    second = GroupoidElement(w(0, 1), w())
    assert groupoid_compose(first, second) == GroupoidElement(w(1, 1), w())


def test_compose_requires_shared_tail():
    with pytest.raises(ComposabilityError):
        groupoid_compose(GroupoidElement(w(1), w(0)), GroupoidElement(w(1), w()))


def test_unit_is_neutral():
    gamma = GroupoidElement(w(1, 0), w(0))
    assert groupoid_compose(gamma, groupoid_unit(w(0))) == gamma
    assert groupoid_compose(groupoid_unit(w(1, 0)), gamma) == gamma


def test_graph_consistency_example():
    assert graph_consistency(GroupoidElement(w(1), w(0, 1)))


def test_y_cocycle_examples():
    assert y_cocycle(YGroupoidElement(GroupoidElement(w(1), w(0, 1)), 0, 1)) == HElem(g(0, -1), 1)
    gamma = YGroupoidElement(GroupoidElement(w(1, 1), w()), 1, 0)
    assert y_cocycle(gamma) == HElem(g("3/4", 2), -1)
    assert y_graph_consistency(gamma, 2)


def test_y_slots_are_checked():
    gamma = YGroupoidElement(GroupoidElement(w(1), w()), 0, 2)
    with pytest.raises(ConfigError):
        gamma.check_slots(2)
    with pytest.raises(ComposabilityError):
        y_groupoid_compose(
            YGroupoidElement(GroupoidElement(w(1), w()), 0, 1),
            YGroupoidElement(GroupoidElement(w(), w()), 0, 1),
        )


@st.composite
def composable_pairs(draw):
    lam1, mu1 = draw(words(max_length=3)), draw(words(max_length=3))
    extra = draw(words(max_length=2))
    mu2 = draw(words(max_length=3))
    return GroupoidElement(lam1, mu1), GroupoidElement(mu1 + extra, mu2)


@given(composable_pairs())
def test_cocycle_is_multiplicative(pair):
    first, second = pair
    joined = groupoid_compose(first, second)
    assert cocycle(joined) == g_mul(cocycle(first), cocycle(second))
    assert graph_consistency(joined)


@given(words(max_length=4), words(max_length=4))
def test_cocycle_of_inverse(lam, mu):
    gamma = GroupoidElement(lam, mu)
    assert cocycle(groupoid_inverse(gamma)) == g_inv(cocycle(gamma))


@given(words(max_length=3), words(max_length=3), st.integers(0, 1))
def test_cocycle_ignores_representative(lam, mu, d):
    gamma = GroupoidElement(lam, mu)
    longer = GroupoidElement(lam + w(d), mu + w(d))
    assert cocycle(longer) == cocycle(gamma)


@given(composable_pairs(), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_y_cocycle_is_multiplicative(pair, i, j, q):
    first, second = pair
    y1 = YGroupoidElement(first, j, q)
    y2 = YGroupoidElement(second, i, j)
    joined = y_groupoid_compose(y1, y2)
    assert y_cocycle(joined) == h_op("mul", y_cocycle(y1), y_cocycle(y2))
    assert y_graph_consistency(joined, 3)
