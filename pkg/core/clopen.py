"""Clopen subsets of the doubled Cantor set X.

A component (a, b) stands for every point from a+ up to b-, with 0 and 1 read as the literal
endpoints. Each n-adic r in (0,1) is a cut between r- and r+, so components behave like half-open
intervals between cuts: touching components merge and set algebra reduces to a sweep over cuts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

from core.errors import BaseMismatchError, ConfigError
from core.nadic import NAdic, Point, Side, Word, check_base, word_value

ClopenOp = Literal["union", "intersect", "minus", "complement"]
Component = tuple[NAdic, NAdic]


@dataclass(frozen=True)
class ClopenSet:
    base: int
    components: tuple[Component, ...] = ()

    def __post_init__(self):
        check_base(self.base)
        comps = []
        for a, b in self.components:
            a, b = NAdic.of(a, self.base), NAdic.of(b, self.base)
            if a < 0 or b > 1:
                raise ConfigError(f"interval ({a.to_text()},{b.to_text()}) leaves [0,1]")
            if a < b:
                comps.append((a, b))
        comps.sort(key=lambda c: c[0].to_fraction())
        merged: list[Component] = []
        for a, b in comps:
            if merged and a <= merged[-1][1]:
                last_a, last_b = merged[-1]
                merged[-1] = (last_a, b if b > last_b else last_b)
            else:
                merged.append((a, b))
        object.__setattr__(self, "components", tuple(merged))

    # -- construction ---------------------------------------------------

    @classmethod
    def empty(cls, base: int) -> ClopenSet:
        return cls(base, ())

    @classmethod
    def full(cls, base: int) -> ClopenSet:
        return cls(base, ((NAdic.zero(base), NAdic.one(base)),))

    @classmethod
    def interval(cls, a, b, base: int) -> ClopenSet:
        """The component (a, b); degenerate or reversed bounds give the empty set."""
        a, b = NAdic.of(a, base), NAdic.of(b, base)
        if a >= b:
            return cls.empty(base)
        return cls(base, ((a, b),))

    # -- queries --------------------------------------------------------

    def is_empty(self) -> bool:
        return not self.components

    def is_full(self) -> bool:
        return self.components == ((NAdic.zero(self.base), NAdic.one(self.base)),)

    def contains(self, point: Point) -> bool:
        if point.value.base != self.base:
            raise BaseMismatchError("point and set use different bases")
        v, side = point.value, point.effective_side()
        for a, b in self.components:
            if side is Side.PLUS and a <= v < b:
                return True
            if side is Side.MINUS and a < v <= b:
                return True
        return False

    def covers(self, lo: NAdic, hi: NAdic) -> bool:
        """Whether the whole stretch between cuts lo and hi lies inside one component."""
        return any(a <= lo and hi <= b for a, b in self.components)

    def issubset(self, other: ClopenSet) -> bool:
        self._check(other)
        return all(other.covers(a, b) for a, b in self.components)

    def cuts(self) -> set[NAdic]:
        return {c for comp in self.components for c in comp}

    # -- boolean algebra ------------------------------------------------

    def _check(self, other: ClopenSet):
        if other.base != self.base:
            raise BaseMismatchError(f"cannot combine base {self.base} with base {other.base}")

    def _sweep(self, other: ClopenSet, keep: Callable[[bool, bool], bool]) -> ClopenSet:
        self._check(other)
        cuts = sorted(self.cuts() | other.cuts() | {NAdic.zero(self.base), NAdic.one(self.base)})
        pieces = [
            (lo, hi)
            for lo, hi in zip(cuts, cuts[1:])
            if keep(self.covers(lo, hi), other.covers(lo, hi))
        ]
        return ClopenSet(self.base, tuple(pieces))

    def union(self, other: ClopenSet) -> ClopenSet:
        self._check(other)
        return ClopenSet(self.base, self.components + other.components)

    def intersect(self, other: ClopenSet) -> ClopenSet:
        if self.is_empty() or other.is_empty():
            self._check(other)
            return ClopenSet.empty(self.base)
        return self._sweep(other, lambda x, y: x and y)

    def minus(self, other: ClopenSet) -> ClopenSet:
        if other.is_empty():
            self._check(other)
            return self
        return self._sweep(other, lambda x, y: x and not y)

    def complement(self) -> ClopenSet:
        return ClopenSet.full(self.base).minus(self)

    __or__ = union
    __and__ = intersect
    __sub__ = minus

    def __invert__(self) -> ClopenSet:
        return self.complement()

    def map_components(self, fn: Callable[[NAdic], NAdic]) -> ClopenSet:
        """Image under an order-preserving map of the cuts."""
        return ClopenSet(self.base, tuple((fn(a), fn(b)) for a, b in self.components))

    # -- output ---------------------------------------------------------

    def to_json(self) -> list[list[str]]:
        return [[str(a), str(b)] for a, b in self.components]

    @classmethod
    def from_json(cls, data: list, base: int) -> ClopenSet:
        return cls(base, tuple((NAdic.parse(a, base), NAdic.parse(b, base)) for a, b in data))

    def __str__(self) -> str:
        if self.is_empty():
            return "{}"
        return " u ".join(f"[{a.to_text()},{b.to_text()}]" for a, b in self.components)


def cylinder(word: Word) -> ClopenSet:
    """Points whose digit expansion starts with word: (s(w), s(w) + n^-|w|)."""
    start = word_value(word)
    return ClopenSet.interval(start, start + NAdic(1, len(word), word.base), word.base)


def clopen_combine(op: ClopenOp, a: ClopenSet, b: ClopenSet | None = None) -> ClopenSet:
    if op == "complement":
        return a.complement()
    if b is None:
        raise ConfigError(f"clopen operation '{op}' needs two operands")
    if op == "union":
        return a.union(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "minus":
        return a.minus(b)
    raise ConfigError(f"unknown clopen operation '{op}'")
