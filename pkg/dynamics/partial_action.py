"""The partial action beta_(r,k)(x) = x/n^k + r of G on X, and of H on Y = X x S_k."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from config import CUT_DEPTH
from core.clopen import ClopenSet
from core.errors import BaseMismatchError, ConfigError, DomainError
from core.group import GElem, HElem, fixed_point, g_inv, g_mul
from core.nadic import NAdic, Point, nadic_exponent, nadic_max, nadic_min
from core.step import StepFunction

logger = logging.getLogger(__name__)


def _beta(g: GElem, x: NAdic) -> NAdic:
    return x.shift(-g.k) + g.r


def beta_domain(g: GElem) -> ClopenSet:
    """All x with x/n^k + r in X: (max(0, -r n^k), min(1, (1-r) n^k))."""
    lo = nadic_max(NAdic.zero(g.base), (-g.r).shift(g.k))
    hi = nadic_min(NAdic.one(g.base), (1 - g.r).shift(g.k))
    return ClopenSet.interval(lo, hi, g.base)


def beta_range(g: GElem) -> ClopenSet:
    return beta_image(g, beta_domain(g))


def beta_image(g: GElem, region: ClopenSet) -> ClopenSet:
    if region.base != g.base:
        raise BaseMismatchError("set and group element use different bases")
    if region.is_empty():
        return region
    inside = region.intersect(beta_domain(g))
    return inside.map_components(lambda x: _beta(g, x))


def beta_preimage(g: GElem, region: ClopenSet) -> ClopenSet:
    """beta_g^-1(region), always inside dom beta_g."""
    return beta_image(g_inv(g), region)


def beta_apply_point(g: GElem, x: Point) -> Point:
    if not beta_domain(g).contains(x):
        raise DomainError(f"point {x} is not in the domain of beta{g}")
    return Point.at(_beta(g, x.value), x.effective_side())


@dataclass(frozen=True)
class PartialMap:
    """Restriction of beta_g to a clopen domain (an opat)."""

    g: GElem
    domain: ClopenSet

    def __post_init__(self):
        if not self.domain.issubset(beta_domain(self.g)):
            raise DomainError(
                f"domain {self.domain} is not inside dom beta{self.g} = {beta_domain(self.g)}"
            )

    @classmethod
    def full(cls, g: GElem) -> PartialMap:
        return cls(g, beta_domain(g))

    @classmethod
    def identity(cls, base: int) -> PartialMap:
        return cls.full(GElem.identity(base))

    def range(self) -> ClopenSet:
        return beta_image(self.g, self.domain)

    def restrict(self, region: ClopenSet) -> PartialMap:
        return PartialMap(self.g, self.domain.intersect(region))

    def apply(self, x: Point) -> Point:
        if not self.domain.contains(x):
            raise DomainError(f"point {x} is not in the domain {self.domain}")
        return beta_apply_point(self.g, x)

    def is_empty(self) -> bool:
        return self.domain.is_empty()

    def to_json(self) -> dict:
        return {"g": self.g.to_json(), "domain": self.domain.to_json()}

    @classmethod
    def from_json(cls, data: dict, base: int) -> PartialMap:
        return cls(GElem.from_json(data["g"], base), ClopenSet.from_json(data["domain"], base))


def opat_compose(phi: PartialMap, psi: PartialMap) -> PartialMap:
    """phi o psi on {x in dom psi | psi(x) in dom phi}; a restriction of beta_(phi.g psi.g)."""
    middle = phi.domain.intersect(psi.range())
    domain = psi.domain.intersect(beta_preimage(psi.g, middle))
    return PartialMap(g_mul(phi.g, psi.g), domain)


def act_pullback(f: StepFunction, g: GElem) -> StepFunction:
    """f o beta_g, supported in dom beta_g."""
    if f.is_zero():
        return f
    if g.is_identity():
        return f
    pieces = []
    for (a, b), v in f.pieces:
        for comp in beta_preimage(g, ClopenSet.interval(a, b, f.base)).components:
            pieces.append((comp, v))
    return StepFunction(f.base, tuple(pieces))


def _inward_cut(x: Fraction, base: int, depth: int, upward: bool) -> NAdic:
    if nadic_exponent(x, base) is not None:
        return NAdic.from_fraction(x, base)
    scale = base**depth
    steps = math.ceil(x * scale) if upward else math.floor(x * scale)
    logger.debug(f"fixed point {x} is not {base}-adic; cut placed at {steps}/{base}^{depth}")
    return NAdic(steps, depth, base)


def descending_interval(g: GElem, depth: int | None = None) -> ClopenSet:
    """I_(r,k): the largest clopen interval of dom beta_g on which beta_g(t) <= t."""
    dom = beta_domain(g)
    if g.k == 0:
        return dom if g.r <= 0 else ClopenSet.empty(g.base)
    depth = CUT_DEPTH if depth is None else depth
    x_star = fixed_point(g)
    zero, one = Fraction(0), Fraction(1)
    if g.k > 0:
        if x_star >= one:
            return ClopenSet.empty(g.base)
        cut = _inward_cut(max(x_star, zero), g.base, depth, upward=True)
        return dom.intersect(ClopenSet.interval(cut, 1, g.base))
    if x_star <= zero:
        return ClopenSet.empty(g.base)
    cut = _inward_cut(min(x_star, one), g.base, depth, upward=False)
    return dom.intersect(ClopenSet.interval(0, cut, g.base))


def descending_is_full(g: GElem) -> bool:
    """I_(r,k) = dom beta_(r,k) iff k >= 0 and r <= 0, or k < 0 and r <= 1 - 1/n^k."""
    if g.r >= 1:
        return True
    if g.k >= 0:
        return g.r <= 0
    return g.r <= 1 - NAdic.one(g.base).shift(-g.k)


@dataclass(frozen=True)
class SlotSet:
    """A clopen subset of Y = X x S_k, one clopen set per slot."""

    slots: tuple[ClopenSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))
        if not self.slots:
            raise ConfigError("a slot set needs k >= 1 slots")
        if len({s.base for s in self.slots}) != 1:
            raise BaseMismatchError("slots use different bases")

    @classmethod
    def empty(cls, base: int, k: int) -> SlotSet:
        return cls(tuple(ClopenSet.empty(base) for _ in range(k)))

    @classmethod
    def full(cls, base: int, k: int) -> SlotSet:
        return cls(tuple(ClopenSet.full(base) for _ in range(k)))

    @classmethod
    def single(cls, region: ClopenSet, slot: int, k: int) -> SlotSet:
        if not 0 <= slot < k:
            raise ConfigError(f"slot {slot} outside S_{k}")
        return cls(tuple(region if t == slot else ClopenSet.empty(region.base) for t in range(k)))

    @property
    def k(self) -> int:
        return len(self.slots)

    @property
    def base(self) -> int:
        return self.slots[0].base

    def is_empty(self) -> bool:
        return all(s.is_empty() for s in self.slots)

    def to_json(self) -> list:
        return [s.to_json() for s in self.slots]

    @classmethod
    def from_json(cls, data: list, base: int) -> SlotSet:
        return cls(tuple(ClopenSet.from_json(s, base) for s in data))

    def __str__(self) -> str:
        return "; ".join(f"{t}: {s}" for t, s in enumerate(self.slots))


def y_beta(h: HElem, region: SlotSet, mode: Literal["domain", "image"]) -> SlotSet:
    """beta_(r,j,p)(x,t) = (x/n^j + r, t+p): its domain, or the image of region."""
    k = region.k
    if mode == "domain":
        dom = beta_domain(h.g)
        return SlotSet(
            tuple(dom if 0 <= t + h.p < k else ClopenSet.empty(h.base) for t in range(k))
        )
    if mode == "image":
        out = [ClopenSet.empty(h.base) for _ in range(k)]
        for t, part in enumerate(region.slots):
            if 0 <= t + h.p < k:
                out[t + h.p] = beta_image(h.g, part)
        return SlotSet(tuple(out))
    raise ConfigError(f"unknown y_beta mode '{mode}'")
