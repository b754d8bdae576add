from fractions import Fraction

import pytest
from hypothesis import given

from core.errors import BaseMismatchError, ConfigError, NotNAdicError
from core.nadic import NAdic, Point, Side, Word, nadic_exponent, word_value
from tests.strategies import nadics, words


def test_canonical_form_drops_common_powers():
    x = NAdic(4, 3, 2)
    assert (x.numerator, x.exponent) == (1, 1)
    assert str(x) == "1/2^1"
    assert x.to_fraction() == Fraction(1, 2)


def test_parse_accepts_wire_and_plain_forms():
    assert NAdic.parse("3/2^2", 2) == NAdic(3, 2, 2)
    assert NAdic.parse("3/4", 2).to_text() == "3/4"
    assert NAdic.parse("-5", 3) == NAdic(-5, 0, 3)


def test_parse_rejects_foreign_values():
    with pytest.raises(NotNAdicError):
        NAdic.parse("1/3", 2)
    with pytest.raises(BaseMismatchError):
        NAdic.parse("1/3^1", 2)
    with pytest.raises(NotNAdicError):
        NAdic.of(Fraction(1, 6), 2)


def test_nadic_exponent():
    assert nadic_exponent(Fraction(3, 8), 2) == 3
    assert nadic_exponent(Fraction(5, 1), 3) == 0
    assert nadic_exponent(Fraction(1, 6), 2) is None
    assert nadic_exponent(Fraction(1, 12), 6) == 2
    assert nadic_exponent(Fraction(1, 5), 6) is None
    assert nadic_exponent(Fraction(1, 36), 6) == 2


def test_bad_base_is_config_error():
    with pytest.raises(ConfigError):
        NAdic(1, 0, 1)


def test_word_value():
    assert word_value(Word((1, 0, 1), 2)).to_fraction() == Fraction(5, 8)
    assert word_value(Word((2, 1), 3)).to_fraction() == Fraction(7, 9)
    assert word_value(Word((), 2)) == 0


def test_word_rejects_out_of_range_digit():
    with pytest.raises(ConfigError):
        Word((0, 2), 2)
    with pytest.raises(ConfigError):
        Word.parse("1,x", 3)


def test_word_parse():
    assert Word.parse("", 2).digits == ()
    assert Word.parse("1, 0,1", 2).digits == (1, 0, 1)


def test_concatenation_formula_exhaustive_for_short_words():
    all_words = [Word((), 2)]
    frontier = list(all_words)
    for _ in range(4):
        frontier = [Word(w.digits + (d,), 2) for w in frontier for d in (0, 1)]
        all_words.extend(frontier)
    for a in all_words:
        for b in all_words:
            assert word_value(a + b) == word_value(a) + word_value(b).shift(-len(a))


@given(nadics(3), nadics(3))
def test_arithmetic_matches_fractions(x, y):
    assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
    assert (x * y).to_fraction() == x.to_fraction() * y.to_fraction()
    assert (x < y) == (x.to_fraction() < y.to_fraction())


@given(words(3), words(3))
def test_concatenation_formula_base_three(a, b):
    assert word_value(a + b) == word_value(a) + word_value(b).shift(-len(a))


def test_points_use_endpoint_side_at_zero_and_one():
    assert Point.at(NAdic.zero(2), Side.MINUS).side is Side.ENDPOINT
    assert Point(NAdic.one(2), Side.ENDPOINT).effective_side() is Side.MINUS
    assert str(Point(NAdic(1, 1, 2), Side.PLUS)) == "1/2+"
    with pytest.raises(ConfigError):
        Point(NAdic(1, 1, 2), Side.ENDPOINT)
    with pytest.raises(ConfigError):
        Point(NAdic(3, 1, 2), Side.PLUS)
