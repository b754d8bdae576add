"""A session fixes the base n and, for M_k(O_n), the slot count k.

X-sessions (O_n = C(X) x G) key monomials by GElem; Y-sessions (M_k(O_n) = C(Y) x H) key them by
HElem. Coefficients are always a tuple of k step functions, so the X-session is the k = 1 case of
one shared core.
"""
from __future__ import annotations

from dataclasses import dataclass

from core.clopen import ClopenSet
from core.errors import BaseMismatchError, ConfigError
from core.group import GElem, HElem, g_inv, g_mul, h_op
from core.nadic import check_base
from core.step import StepFunction
from dynamics.partial_action import SlotSet, act_pullback, y_beta

Key = GElem | HElem
Coefficient = tuple[StepFunction, ...]


@dataclass(frozen=True)
class Session:
    n: int
    k: int = 1
    matrix: bool = False

    def __post_init__(self):
        check_base(self.n)
        if not isinstance(self.k, int) or self.k < 1:
            raise ConfigError(f"slot count k must be >= 1, got {self.k!r}")
        if not self.matrix and self.k != 1:
            raise ConfigError("an O_n session has exactly one slot; use matrix=True for M_k(O_n)")

    @classmethod
    def cuntz(cls, n: int) -> Session:
        return cls(n, 1, False)

    @classmethod
    def matrices(cls, n: int, k: int) -> Session:
        return cls(n, k, True)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "matrix": self.matrix}

    @classmethod
    def from_json(cls, data: dict) -> Session:
        return cls(int(data["n"]), int(data.get("k", 1)), bool(data.get("matrix", False)))

    # -- group elements -------------------------------------------------

    def parts(self, key: Key) -> tuple[GElem, int]:
        if isinstance(key, HElem):
            if not self.matrix:
                raise BaseMismatchError(f"H-element {key} used in an O_n session")
            return key.g, key.p
        if self.matrix:
            raise BaseMismatchError(f"G-element {key} used in an M_k(O_n) session")
        return key, 0

    def make_key(self, g: GElem, p: int = 0) -> Key:
        if g.base != self.n:
            raise BaseMismatchError(f"group element over base {g.base} in a base-{self.n} session")
        if self.matrix:
            return HElem(g, p)
        if p != 0:
            raise ConfigError("an O_n session has no slot shift")
        return g

    def identity_key(self) -> Key:
        return self.make_key(GElem.identity(self.n))

    def mul(self, a: Key, b: Key) -> Key:
        if self.matrix:
            return h_op("mul", a, b)
        return g_mul(a, b)

    def inv(self, a: Key) -> Key:
        if self.matrix:
            return h_op("inv", a)
        return g_inv(a)

    # -- coefficients ---------------------------------------------------

    def zero_coefficient(self) -> Coefficient:
        return tuple(StepFunction.zero(self.n) for _ in range(self.k))

    def coefficient(self, value) -> Coefficient:
        """Accept a StepFunction (X-session), a tuple of them, or a SlotSet of supports."""
        if isinstance(value, SlotSet):
            value = tuple(StepFunction.indicator(s) for s in value.slots)
        elif isinstance(value, ClopenSet):
            value = (StepFunction.indicator(value),)
        elif isinstance(value, StepFunction):
            value = (value,)
        value = tuple(value)
        if len(value) != self.k:
            raise ConfigError(f"coefficient has {len(value)} slots, session has {self.k}")
        if any(f.base != self.n for f in value):
            raise BaseMismatchError(f"coefficient is not over base {self.n}")
        return value

    def domain(self, key: Key) -> SlotSet:
        g, p = self.parts(key)
        return y_beta(HElem(g, p), SlotSet.full(self.n, self.k), "domain")

    def range(self, key: Key) -> SlotSet:
        g, p = self.parts(key)
        return y_beta(HElem(g, p), self.domain(key), "image")

    def pullback(self, coeff: Coefficient, key: Key) -> Coefficient:
        """coeff o beta_key, slot by slot: slot t reads slot t+p pulled back along g."""
        g, p = self.parts(key)
        out = []
        for t in range(self.k):
            source = t + p
            if 0 <= source < self.k:
                out.append(act_pullback(coeff[source], g))
            else:
                out.append(StepFunction.zero(self.n))
        return tuple(out)


def coeff_is_zero(coeff: Coefficient) -> bool:
    return all(f.is_zero() for f in coeff)


def coeff_add(a: Coefficient, b: Coefficient) -> Coefficient:
    return tuple(x + y for x, y in zip(a, b))


def coeff_mul(a: Coefficient, b: Coefficient) -> Coefficient:
    return tuple(x * y for x, y in zip(a, b))


def coeff_scale(a: Coefficient, c) -> Coefficient:
    return tuple(x.scale(c) for x in a)


def coeff_conjugate(a: Coefficient) -> Coefficient:
    return tuple(x.conjugate() for x in a)


def coeff_support(a: Coefficient) -> SlotSet:
    return SlotSet(tuple(x.support() for x in a))
