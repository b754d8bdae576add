"""Cuntz groupoid elements with symbolic tails and the cocycles to G and H.

An element (lambda z, |lambda| - |mu|, mu z) is stored as the two finite prefixes plus the name of
the shared tail z. Every identity checked here is affine in the tail, so working with the cylinder
pair Z(lambda, mu) is exact.
"""
from __future__ import annotations

from dataclasses import dataclass

from core.clopen import cylinder
from core.errors import BaseMismatchError, ComposabilityError, ConfigError
from core.group import GElem, HElem
from core.nadic import NAdic, Word, word_value
from dynamics.partial_action import SlotSet, beta_image, y_beta


@dataclass(frozen=True)
class GroupoidElement:
    lam: Word
    mu: Word
    tail: str = "z0"

    def __post_init__(self):
        if self.lam.base != self.mu.base:
            raise BaseMismatchError("lambda and mu use different bases")

    @property
    def base(self) -> int:
        return self.lam.base

    def k(self) -> int:
        return len(self.lam) - len(self.mu)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam.digits), "mu": list(self.mu.digits), "tail": self.tail}

    @classmethod
    def from_json(cls, data: dict, base: int) -> GroupoidElement:
        return cls(Word(tuple(data["lambda"]), base), Word(tuple(data["mu"]), base), data.get("tail", "z0"))

    def __str__(self) -> str:
        return f"(({self.lam}){self.tail}, {self.k()}, ({self.mu}){self.tail})"


@dataclass(frozen=True)
class YGroupoidElement:
    """((lambda z, q), q - i, (mu z, i))."""

    base_element: GroupoidElement
    i: int
    q: int

    @property
    def p(self) -> int:
        return self.q - self.i

    def check_slots(self, k: int):
        if not (0 <= self.i < k and 0 <= self.q < k):
            raise ConfigError(f"slots ({self.i}, {self.q}) are not both in S_{k}")

    def to_json(self) -> dict:
        return {**self.base_element.to_json(), "i": self.i, "q": self.q}

    @classmethod
    def from_json(cls, data: dict, base: int) -> YGroupoidElement:
        return cls(GroupoidElement.from_json(data, base), int(data["i"]), int(data["q"]))


def groupoid_unit(word: Word, tail: str = "z0") -> GroupoidElement:
    return GroupoidElement(word, word, tail)


def groupoid_inverse(gamma: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(gamma.mu, gamma.lam, gamma.tail)


def r_offset(lam: Word, mu: Word) -> NAdic:
    """r(lambda, mu) = s(lambda) - s(mu)/n^k with k = |lambda| - |mu|."""
    k = len(lam) - len(mu)
    return word_value(lam) - word_value(mu).shift(-k)


def cocycle(gamma: GroupoidElement) -> GElem:
    return GElem(r_offset(gamma.lam, gamma.mu), gamma.k())


def groupoid_compose(first: GroupoidElement, second: GroupoidElement) -> GroupoidElement:
    """first o second; needs first.mu and second.lam to be prefix-comparable."""
    if first.base != second.base:
        raise BaseMismatchError("groupoid elements use different bases")
    if first.mu.is_prefix_of(second.lam):
        # z1 = w z2: substitute and keep the tail of the second element
        w = second.lam.drop(len(first.mu))
        return GroupoidElement(first.lam + w, second.mu, second.tail)
    if second.lam.is_prefix_of(first.mu):
        w = first.mu.drop(len(second.lam))
        return GroupoidElement(first.lam, second.mu + w, first.tail)
    raise ComposabilityError(
        f"source ({first.mu}){first.tail} and range ({second.lam}){second.tail} share no tail"
    )


def graph_consistency(gamma: GroupoidElement) -> bool:
    """beta_c(gamma) carries the cylinder of mu onto the cylinder of lambda."""
    return beta_image(cocycle(gamma), cylinder(gamma.mu)) == cylinder(gamma.lam)


def y_cocycle(gamma: YGroupoidElement) -> HElem:
    return HElem(cocycle(gamma.base_element), gamma.p)


def y_groupoid_compose(first: YGroupoidElement, second: YGroupoidElement) -> YGroupoidElement:
    if first.i != second.q:
        raise ComposabilityError(f"source slot {first.i} differs from range slot {second.q}")
    return YGroupoidElement(groupoid_compose(first.base_element, second.base_element), second.i, first.q)


def y_graph_consistency(gamma: YGroupoidElement, k: int) -> bool:
    """beta_c carries cylinder(mu) x {i} onto cylinder(lambda) x {q}."""
    gamma.check_slots(k)
    source = SlotSet.single(cylinder(gamma.base_element.mu), gamma.i, k)
    target = SlotSet.single(cylinder(gamma.base_element.lam), gamma.q, k)
    return y_beta(y_cocycle(gamma), source, "image") == target
