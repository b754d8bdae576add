"""Gaussian rationals a + bi: the coefficient field of the algebra."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Scalar:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact; pass a Scalar")
        return cls(Fraction(value), Fraction(0))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other) -> Scalar:
        other = Scalar.of(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.re, -self.im)

    def __sub__(self, other) -> Scalar:
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> Scalar:
        return Scalar.of(other) - self

    def __mul__(self, other) -> Scalar:
        other = Scalar.of(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        return Scalar(self.re, -self.im)

    def to_text(self) -> str:
        """Form readable back by the expression parser; parenthesized unless a bare literal."""
        if self.im == 0:
            return _rational(self.re) if self.re >= 0 else f"({_rational(self.re)})"
        if self.re == 0:
            body = f"{_rational(self.im)}i"
            return body if self.im > 0 else f"({body})"
        sign = "+" if self.im > 0 else "-"
        return f"({_rational(self.re)}{sign}{_rational(abs(self.im))}i)"

    def __str__(self) -> str:
        return self.to_text()


def _rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


ZERO = Scalar(0, 0)
ONE = Scalar(1, 0)
I_UNIT = Scalar(0, 1)
