"""Subalgebras B(P) cut out by a set P of group elements, and the Volterra nest.

B(P) is tracked through its polynomial part only: an element belongs when every group element in
its support satisfies P.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Literal

from algebra.element import AlgebraElement
from algebra.relations import RelationReport, RelationResult
from algebra.session import Session
from config import SessionConfig
from core.clopen import ClopenSet
from core.errors import ConfigError
from core.group import GElem, g_inv, g_mul
from core.nadic import NAdic
from dynamics.partial_action import beta_image, descending_interval
from utils.sampling import grid_elements

logger = logging.getLogger(__name__)

KSign = Literal["any", "zero", "positive", "negative", "nonnegative", "nonpositive"]
NAMED_PREDICATES = ("UHF", "RefinementTAF", "Triangular")

# pairs beyond this many are sampled rather than enumerated
EXHAUSTIVE_PAIR_LIMIT = 40_000
MAX_COUNTEREXAMPLES = 10

_K_SIGNS = {
    "any": lambda k: True,
    "zero": lambda k: k == 0,
    "positive": lambda k: k > 0,
    "negative": lambda k: k < 0,
    "nonnegative": lambda k: k >= 0,
    "nonpositive": lambda k: k <= 0,
}


@dataclass(frozen=True)
class GroupPredicate:
    """One of the named sets P, or a custom threshold k_sign(k) and r >= r_min."""

    name: str
    r_min: Fraction | None = None
    k_sign: KSign = "any"

    def __post_init__(self):
        if self.name not in NAMED_PREDICATES and self.name != "custom":
            raise ConfigError(f"unknown predicate '{self.name}'")
        if self.k_sign not in _K_SIGNS:
            raise ConfigError(f"unknown k_sign '{self.k_sign}'")
        if self.r_min is not None:
            object.__setattr__(self, "r_min", Fraction(self.r_min))

    @classmethod
    def named(cls, name: str) -> GroupPredicate:
        return cls(name)

    @classmethod
    def custom(cls, r_min=None, k_sign: KSign = "any") -> GroupPredicate:
        return cls("custom", r_min, k_sign)

    def holds(self, g: GElem) -> bool:
        r, k = g.r.to_fraction(), g.k
        if self.name == "UHF":
            return k == 0
        if self.name == "RefinementTAF":
            return k == 0 and r >= 0
        if self.name == "Triangular":
            return k > 0 or (k == 0 and r >= 0)
        return _K_SIGNS[self.k_sign](k) and (self.r_min is None or r >= self.r_min)

    __call__ = holds

    def to_json(self) -> dict:
        if self.name != "custom":
            return {"name": self.name}
        r_min = None if self.r_min is None else str(self.r_min)
        return {"custom": {"r_min": r_min, "k_sign": self.k_sign}}

    @classmethod
    def from_json(cls, data: dict) -> GroupPredicate:
        if "custom" in data:
            body = data["custom"]
            r_min = body.get("r_min")
            return cls.custom(None if r_min is None else Fraction(r_min), body.get("k_sign", "any"))
        return cls.named(data["name"])

    def __str__(self) -> str:
        if self.name != "custom":
            return self.name
        return f"custom(r_min={self.r_min}, k_sign={self.k_sign})"


def _nest_session(session: Session):
    if session.matrix:
        raise ConfigError("the Volterra nest lives in an O_n session")


def volterra_projection(session: Session, r) -> AlgebraElement:
    """p_r = chi_[0, r-] U^(0,0); p_1 is the identity."""
    _nest_session(session)
    r = NAdic.of(r, session.n)
    if not 0 < r <= 1:
        raise ConfigError(f"nest level {r.to_text()} is outside (0,1]")
    return AlgebraElement.monomial(session, session.identity_key(), ClopenSet.interval(0, r, session.n))


def nest_generator(session: Session, g: GElem, depth: int | None = None) -> AlgebraElement:
    """T_g = chi_(beta_g(I_g)) U^g, zero when the descending interval is empty."""
    _nest_session(session)
    region = beta_image(g, descending_interval(g, depth))
    if region.is_empty():
        return AlgebraElement.zero(session)
    return AlgebraElement.monomial(session, session.make_key(g), region)


def nest_invariant(element: AlgebraElement, r) -> bool:
    """(I - p_r) A p_r == 0."""
    session = element.session
    p = volterra_projection(session, r)
    complement = AlgebraElement.identity(session) - p
    return (complement * element * p).is_zero()


def bp_membership(element: AlgebraElement, predicate: GroupPredicate) -> bool:
    return all(predicate.holds(element.session.parts(key)[0]) for key in element.keys())


def nest_levels(n: int, depth: int) -> list[NAdic]:
    """Every level m/n^e in (0,1] with e <= depth."""
    return [NAdic(m, depth, n) for m in range(1, n**depth + 1)]


def _height(g: GElem) -> tuple:
    return (max(abs(g.k), g.r.exponent, abs(g.r.numerator)),) + g.sort_key()


def predicate_closure_check(predicate: GroupPredicate, cfg: SessionConfig) -> RelationReport:
    """Whether P is closed under g_mul and g_inv over the configured grid.

    Small grids are enumerated pairwise; larger ones draw cfg.samples seeded pairs.
    Counterexamples are listed smallest first.
    """
    members = [g for g in grid_elements(cfg) if predicate.holds(g)]
    members.sort(key=_height)
    logger.info(f"closure check for {predicate}: {len(members)} grid elements in P")

    if len(members) ** 2 <= EXHAUSTIVE_PAIR_LIMIT:
        pairs = list(product(members, repeat=2))
    else:
        rng = random.Random(cfg.seed)
        pairs = [(rng.choice(members), rng.choice(members)) for _ in range(cfg.samples)]

    mul_bad = []
    for a, b in pairs:
        c = g_mul(a, b)
        if not predicate.holds(c):
            mul_bad.append(f"{a}*{b} = {c}")
    inv_bad = []
    for a in members:
        if not predicate.holds(g_inv(a)):
            inv_bad.append(f"{a}^-1 = {g_inv(a)}")

    results = (
        _closure_result("closed_under_mul", len(pairs), mul_bad),
        _closure_result("closed_under_inv", len(members), inv_bad),
    )
    return RelationReport(f"closure[{predicate}]", results)


def _closure_result(label: str, checked: int, bad: list[str]) -> RelationResult:
    if not bad:
        return RelationResult(label, True, checked=checked)
    shown = tuple(bad[:MAX_COUNTEREXAMPLES])
    return RelationResult(label, False, witness=shown[0], checked=checked, counterexamples=shown)


def invariant_region_generator(session: Session, g: GElem, region: ClopenSet) -> AlgebraElement:
    """chi_(beta_g(J)) U^g for a clopen J inside the domain of beta_g."""
    _nest_session(session)
    image = beta_image(g, region)
    if image.is_empty():
        return AlgebraElement.zero(session)
    return AlgebraElement.monomial(session, session.make_key(g), image)
