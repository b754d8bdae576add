"""The groups G = Q_n x_delta Z and H = G x Z."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from core.errors import BaseMismatchError, ConfigError
from core.nadic import NAdic


@dataclass(frozen=True)
class GElem:
    r: NAdic
    k: int

    @classmethod
    def of(cls, r, k: int, base: int) -> GElem:
        return cls(NAdic.of(r, base), k)

    @classmethod
    def identity(cls, base: int) -> GElem:
        return cls(NAdic.zero(base), 0)

    @property
    def base(self) -> int:
        return self.r.base

    def is_identity(self) -> bool:
        return self.k == 0 and self.r.is_zero()

    def sort_key(self) -> tuple:
        return (self.k, self.r.to_fraction())

    def __mul__(self, other: GElem) -> GElem:
        return g_mul(self, other)

    def inverse(self) -> GElem:
        return g_inv(self)

    def to_json(self) -> dict:
        return {"r": str(self.r), "k": self.k}

    @classmethod
    def from_json(cls, data: dict, base: int) -> GElem:
        return cls(NAdic.parse(data["r"], base), int(data["k"]))

    def to_text(self) -> str:
        return f"({self.r.to_text()},{self.k})"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class HElem:
    g: GElem
    p: int

    @classmethod
    def of(cls, r, j: int, p: int, base: int) -> HElem:
        return cls(GElem.of(r, j, base), p)

    @classmethod
    def identity(cls, base: int) -> HElem:
        return cls(GElem.identity(base), 0)

    @property
    def base(self) -> int:
        return self.g.base

    @property
    def r(self) -> NAdic:
        return self.g.r

    @property
    def k(self) -> int:
        return self.g.k

    def is_identity(self) -> bool:
        return self.g.is_identity() and self.p == 0

    def sort_key(self) -> tuple:
        return self.g.sort_key() + (self.p,)

    def __mul__(self, other: HElem) -> HElem:
        return h_op("mul", self, other)

    def inverse(self) -> HElem:
        return h_op("inv", self)

    def to_json(self) -> dict:
        return {"r": str(self.g.r), "k": self.g.k, "p": self.p}

    @classmethod
    def from_json(cls, data: dict, base: int) -> HElem:
        return cls(GElem(NAdic.parse(data["r"], base), int(data["k"])), int(data["p"]))

    def to_text(self) -> str:
        return f"({self.g.r.to_text()},{self.g.k},{self.p})"

    def __str__(self) -> str:
        return self.to_text()


def delta(j: int, r: NAdic) -> NAdic:
    """delta_j(r) = r / n^j."""
    return r.shift(-j)


def g_mul(a: GElem, b: GElem) -> GElem:
    """(s,j)(r,k) = (r/n^j + s, j+k)."""
    if a.base != b.base:
        raise BaseMismatchError(f"cannot multiply base {a.base} with base {b.base}")
    return GElem(delta(a.k, b.r) + a.r, a.k + b.k)


def g_inv(a: GElem) -> GElem:
    """(r,k)^-1 = (-n^k r, -k)."""
    return GElem(-a.r.shift(a.k), -a.k)


def h_op(op: Literal["mul", "inv"], a: HElem, b: HElem | None = None) -> HElem:
    if op == "mul":
        if b is None:
            raise ConfigError("h_op('mul') needs two operands")
        return HElem(g_mul(a.g, b.g), a.p + b.p)
    if op == "inv":
        if b is not None:
            raise ConfigError("h_op('inv') takes one operand")
        return HElem(g_inv(a.g), -a.p)
    raise ConfigError(f"unknown group operation '{op}'")


def embed_rational(r: NAdic) -> GElem:
    """Q_n -> G, r |-> (r, 0)."""
    return GElem(r, 0)


def fixed_point(g: GElem) -> Fraction | None:
    """Solution of t/n^k + r = t as an exact rational; None when k = 0."""
    if g.k == 0:
        return None
    scale = Fraction(g.base) ** g.k
    return g.r.to_fraction() * scale / (scale - 1)
