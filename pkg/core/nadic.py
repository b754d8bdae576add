"""n-adic rationals, digit words and points of the doubled Cantor set X."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from core.errors import BaseMismatchError, ConfigError, NotNAdicError

_NADIC_RE = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*\^\s*(\d+)\s*$")
_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def check_base(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ConfigError(f"base n must be an integer >= 2, got {n!r}")
    return n


def nadic_exponent(q: Fraction, n: int) -> int | None:
    """Smallest e with q * n^e integral, or None when q is not n-adic."""
    den = q.denominator
    e = 0
    while den != 1:
        g = gcd(den, n)
        if g == 1:
            return None
        den //= g
        e += 1
    # e steps suffice but may overshoot; walk back to the minimal exponent
    while e > 0 and (q * n ** (e - 1)).denominator == 1:
        e -= 1
    return e


@dataclass(frozen=True, eq=False)
class NAdic:
    """Exact value numerator / base^exponent, always stored with minimal exponent."""

    numerator: int
    exponent: int
    base: int

    def __post_init__(self):
        check_base(self.base)
        num, exp = self.numerator, self.exponent
        if exp < 0:
            num, exp = num * self.base ** (-exp), 0
        while exp > 0 and num % self.base == 0:
            num //= self.base
            exp -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    # -- construction ---------------------------------------------------

    @classmethod
    def of(cls, value, base: int) -> NAdic:
        if isinstance(value, NAdic):
            if value.base != base:
                raise BaseMismatchError(f"value over base {value.base} used in base {base}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not n-adic rationals")
        if isinstance(value, int):
            return cls(value, 0, base)
        if isinstance(value, Fraction):
            return cls.from_fraction(value, base)
        if isinstance(value, str):
            return cls.parse(value, base)
        raise TypeError(f"cannot build an n-adic rational from {type(value).__name__}")

    @classmethod
    def from_fraction(cls, q: Fraction, base: int) -> NAdic:
        e = nadic_exponent(q, base)
        if e is None:
            raise NotNAdicError(f"{q} is not a {base}-adic rational")
        return cls(q.numerator * base**e // q.denominator, e, base)

    @classmethod
    def parse(cls, text: str, base: int) -> NAdic:
        """Accept "p/n^e" (the wire form) as well as plain "a/b" and "a"."""
        m = _NADIC_RE.match(text)
        if m:
            p, n, e = int(m.group(1)), int(m.group(2)), int(m.group(3))
            if n != base:
                raise BaseMismatchError(f"'{text}' is written in base {n}, session base is {base}")
            return cls(p, e, base)
        m = _RATIONAL_RE.match(text)
        if not m:
            raise NotNAdicError(f"cannot read '{text}' as a rational")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise NotNAdicError(f"zero denominator in '{text}'")
        return cls.from_fraction(Fraction(int(m.group(1)), den), base)

    @classmethod
    def zero(cls, base: int) -> NAdic:
        return cls(0, 0, base)

    @classmethod
    def one(cls, base: int) -> NAdic:
        return cls(1, 0, base)

    # -- conversion -----------------------------------------------------

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.base**self.exponent)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.base}^{self.exponent}"

    def to_text(self) -> str:
        """Lowest-terms a/b form used by the expression syntax."""
        q = self.to_fraction()
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    def __repr__(self) -> str:
        return f"NAdic({self})"

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> NAdic | None:
        if isinstance(other, NAdic):
            if other.base != self.base:
                raise BaseMismatchError(f"cannot mix base {self.base} with base {other.base}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return NAdic(other, 0, self.base)
        return None

    def _aligned(self, other: NAdic) -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        a = self.numerator * self.base ** (e - self.exponent)
        b = other.numerator * self.base ** (e - other.exponent)
        return a, b, e

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, e = self._aligned(other)
        return NAdic(a + b, e, self.base)

    __radd__ = __add__

    def __neg__(self) -> NAdic:
        return NAdic(-self.numerator, self.exponent, self.base)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NAdic(self.numerator * other.numerator, self.exponent + other.exponent, self.base)

    __rmul__ = __mul__

    def shift(self, j: int) -> NAdic:
        """Multiply by n^j, j of any sign."""
        if j >= 0:
            return NAdic(self.numerator * self.base**j, self.exponent, self.base)
        return NAdic(self.numerator, self.exponent - j, self.base)

    def is_zero(self) -> bool:
        return self.numerator == 0

    # -- comparison -----------------------------------------------------

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is None:
            raise TypeError(f"cannot compare NAdic with {type(other).__name__}")
        a, b, _ = self._aligned(other)
        return (a > b) - (a < b)

    def __eq__(self, other):
        if isinstance(other, NAdic):
            return (self.numerator, self.exponent, self.base) == (other.numerator, other.exponent, other.base)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.exponent == 0 and self.numerator == other
        return NotImplemented

    def __hash__(self):
        if self.exponent == 0:
            return hash(self.numerator)
        return hash((self.numerator, self.exponent, self.base))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def nadic_min(a: NAdic, b: NAdic) -> NAdic:
    return a if a <= b else b


def nadic_max(a: NAdic, b: NAdic) -> NAdic:
    return a if a >= b else b


@dataclass(frozen=True)
class Word:
    """Finite digit sequence over {0, ..., n-1}."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ConfigError(f"digit {d} out of range for base {self.base}")

    @classmethod
    def parse(cls, text: str, base: int) -> Word:
        text = text.strip()
        if not text:
            return cls((), base)
        try:
            return cls(tuple(int(part) for part in text.split(",")), base)
        except ValueError:
            raise ConfigError(f"cannot read '{text}' as a comma-separated digit word")

    def __len__(self) -> int:
        return len(self.digits)

    def __add__(self, other: Word) -> Word:
        if other.base != self.base:
            raise BaseMismatchError("cannot concatenate words over different bases")
        return Word(self.digits + other.digits, self.base)

    def is_prefix_of(self, other: Word) -> bool:
        return other.digits[: len(self.digits)] == self.digits

    def drop(self, count: int) -> Word:
        return Word(self.digits[count:], self.base)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.digits)


def word_value(word: Word) -> NAdic:
    """s(lambda) = lambda_1/n + ... + lambda_m/n^m."""
    num = 0
    for d in word.digits:
        num = num * word.base + d
    return NAdic(num, len(word.digits), word.base)


class Side(enum.Enum):
    MINUS = "minus"
    PLUS = "plus"
    ENDPOINT = "endpoint"


@dataclass(frozen=True)
class Point:
    """An n-adic point of X: r- or r+ for interior r, the literal endpoint for 0 and 1."""

    value: NAdic
    side: Side

    def __post_init__(self):
        if self.value < 0 or self.value > 1:
            raise ConfigError(f"point {self.value.to_text()} lies outside [0,1]")
        at_end = self.value == 0 or self.value == 1
        if at_end != (self.side is Side.ENDPOINT):
            raise ConfigError(f"side {self.side.value} is not valid at {self.value.to_text()}")

    @classmethod
    def at(cls, value: NAdic, side: Side) -> Point:
        """Build a point, renormalizing 0 and 1 to the literal endpoints."""
        if value == 0 or value == 1:
            return cls(value, Side.ENDPOINT)
        return cls(value, side)

    def effective_side(self) -> Side:
        """0 sits to the right of its cut, 1 to the left."""
        if self.side is Side.ENDPOINT:
            return Side.PLUS if self.value == 0 else Side.MINUS
        return self.side

    def __str__(self) -> str:
        mark = {Side.MINUS: "-", Side.PLUS: "+", Side.ENDPOINT: ""}[self.side]
        return f"{self.value.to_text()}{mark}"
