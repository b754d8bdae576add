"""Finitely piecewise-constant functions on X with Gaussian-rational values."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

from core.clopen import ClopenSet, Component
from core.errors import BaseMismatchError, ConfigError
from core.nadic import NAdic, Point, check_base
from core.scalar import ONE, ZERO, Scalar

StepOp = Literal["add", "mul", "conjugate", "scale"]
Piece = tuple[Component, Scalar]


@dataclass(frozen=True)
class StepFunction:
    base: int
    pieces: tuple[Piece, ...] = ()

    def __post_init__(self):
        check_base(self.base)
        pieces = sorted(
            (
                ((NAdic.of(a, self.base), NAdic.of(b, self.base)), Scalar.of(v))
                for (a, b), v in self.pieces
            ),
            key=lambda p: p[0][0].to_fraction(),
        )
        canon: list[Piece] = []
        for (a, b), v in pieces:
            if a >= b or v.is_zero():
                continue
            if a < 0 or b > 1:
                raise ConfigError(f"piece ({a.to_text()},{b.to_text()}) leaves [0,1]")
            if canon:
                (pa, pb), pv = canon[-1]
                if a < pb:
                    raise ConfigError("step function pieces overlap; use StepFunction.from_pieces")
                if a == pb and v == pv:
                    canon[-1] = ((pa, b), v)
                    continue
            canon.append(((a, b), v))
        object.__setattr__(self, "pieces", tuple(canon))

    # -- construction ---------------------------------------------------

    @classmethod
    def zero(cls, base: int) -> StepFunction:
        return cls(base, ())

    @classmethod
    def constant(cls, value, base: int) -> StepFunction:
        return cls.indicator(ClopenSet.full(base), value)

    @classmethod
    def indicator(cls, support: ClopenSet, value=ONE) -> StepFunction:
        value = Scalar.of(value)
        return cls(support.base, tuple((comp, value) for comp in support.components))

    @classmethod
    def from_pieces(cls, base: int, pieces) -> StepFunction:
        """Sum of value * indicator over possibly overlapping pieces."""
        total = cls.zero(base)
        for (a, b), v in pieces:
            total = total + cls.indicator(ClopenSet.interval(a, b, base), v)
        return total

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.pieces

    def support(self) -> ClopenSet:
        return ClopenSet(self.base, tuple(comp for comp, _ in self.pieces))

    def cuts(self) -> set[NAdic]:
        return {c for (a, b), _ in self.pieces for c in (a, b)}

    def value_on(self, lo: NAdic, hi: NAdic) -> Scalar:
        for (a, b), v in self.pieces:
            if a <= lo and hi <= b:
                return v
        return ZERO

    def evaluate(self, point: Point) -> Scalar:
        for comp, v in self.pieces:
            if ClopenSet(self.base, (comp,)).contains(point):
                return v
        return ZERO

    def values(self) -> set[Scalar]:
        return {v for _, v in self.pieces}

    # -- pointwise algebra ----------------------------------------------

    def _pointwise(self, other: StepFunction, fn: Callable[[Scalar, Scalar], Scalar]) -> StepFunction:
        if other.base != self.base:
            raise BaseMismatchError(f"cannot combine base {self.base} with base {other.base}")
        cuts = sorted(self.cuts() | other.cuts() | {NAdic.zero(self.base), NAdic.one(self.base)})
        pieces = []
        for lo, hi in zip(cuts, cuts[1:]):
            v = fn(self.value_on(lo, hi), other.value_on(lo, hi))
            if not v.is_zero():
                pieces.append(((lo, hi), v))
        return StepFunction(self.base, tuple(pieces))

    def __add__(self, other: StepFunction) -> StepFunction:
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return self._pointwise(other, lambda x, y: x + y)

    def __mul__(self, other) -> StepFunction:
        if isinstance(other, StepFunction):
            if self.is_zero() or other.is_zero():
                return StepFunction.zero(self.base)
            return self._pointwise(other, lambda x, y: x * y)
        return self.scale(other)

    def __neg__(self) -> StepFunction:
        return self.scale(Scalar(-1))

    def __sub__(self, other: StepFunction) -> StepFunction:
        return self + (-other)

    def scale(self, c) -> StepFunction:
        c = Scalar.of(c)
        if c.is_zero():
            return StepFunction.zero(self.base)
        return StepFunction(self.base, tuple((comp, v * c) for comp, v in self.pieces))

    def conjugate(self) -> StepFunction:
        return StepFunction(self.base, tuple((comp, v.conjugate()) for comp, v in self.pieces))

    def restrict(self, region: ClopenSet) -> StepFunction:
        return self * StepFunction.indicator(region)

    def map_components(self, fn: Callable[[NAdic], NAdic]) -> StepFunction:
        """Transport the pieces along an order-preserving bijection of cuts."""
        return StepFunction(self.base, tuple(((fn(a), fn(b)), v) for (a, b), v in self.pieces))

    # -- output ---------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"interval": [str(a), str(b)], "re": str(v.re), "im": str(v.im)}
            for (a, b), v in self.pieces
        ]

    @classmethod
    def from_json(cls, data: list, base: int) -> StepFunction:
        return cls(
            base,
            tuple(
                (
                    (NAdic.parse(item["interval"][0], base), NAdic.parse(item["interval"][1], base)),
                    Scalar(Fraction(item["re"]), Fraction(item["im"])),
                )
                for item in data
            ),
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{v}*chi[{a.to_text()},{b.to_text()}]" for (a, b), v in self.pieces)


def step_combine(op: StepOp, f: StepFunction, g: StepFunction | Scalar | None = None) -> StepFunction:
    if op == "conjugate":
        return f.conjugate()
    if g is None:
        raise ConfigError(f"step operation '{op}' needs two operands")
    if op == "add":
        if not isinstance(g, StepFunction):
            g = StepFunction.constant(g, f.base)
        return f + g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ConfigError(f"unknown step operation '{op}'")
