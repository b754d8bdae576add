"""Finite sums  sum_g f_g U^g  in the dense *-subalgebra of the partial crossed product.

Multiplication and adjoint on monomials:

    e U^g . f U^h = e . (f o beta_g^-1) U^gh
    (f U^g)*      = conj(f o beta_g) U^g^-1
"""
from __future__ import annotations

from dataclasses import dataclass

from algebra.session import (
    Coefficient,
    Key,
    Session,
    coeff_add,
    coeff_conjugate,
    coeff_is_zero,
    coeff_mul,
    coeff_scale,
    coeff_support,
)
from core.errors import BaseMismatchError, CoefficientInvariantError, ConfigError
from core.scalar import ONE, Scalar


Term = tuple[Key, Coefficient]


@dataclass(frozen=True)
class AlgebraElement:
    session: Session
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        seen = set()
        kept = []
        for key, coeff in self.terms:
            self.session.parts(key)
            if key in seen:
                raise ConfigError(f"repeated group element {key}; use AlgebraElement.from_terms")
            seen.add(key)
            if not coeff_is_zero(coeff):
                kept.append((key, self.session.coefficient(coeff)))
        kept.sort(key=lambda term: term[0].sort_key())
        object.__setattr__(self, "terms", tuple(kept))

    # -- construction ---------------------------------------------------

    @classmethod
    def from_terms(cls, session: Session, terms) -> AlgebraElement:
        """Sum terms, merging repeated group elements."""
        acc: dict[Key, Coefficient] = {}
        for key, coeff in terms:
            coeff = session.coefficient(coeff)
            acc[key] = coeff_add(acc[key], coeff) if key in acc else coeff
        return cls(session, tuple(acc.items()))

    @classmethod
    def zero(cls, session: Session) -> AlgebraElement:
        return cls(session, ())

    @classmethod
    def identity(cls, session: Session) -> AlgebraElement:
        return substitute_unit(session, session.identity_key())

    @classmethod
    def monomial(cls, session: Session, key: Key, coeff) -> AlgebraElement:
        """f U^g, refusing coefficients that leave ran beta_g."""
        coeff = session.coefficient(coeff)
        allowed = session.range(key)
        support = coeff_support(coeff)
        for t, (part, room) in enumerate(zip(support.slots, allowed.slots)):
            if not part.issubset(room):
                raise CoefficientInvariantError(
                    f"coefficient support {part} (slot {t}) is not inside ran beta{key} = {room}",
                    interval=part,
                    allowed=room,
                )
        return cls(session, ((key, coeff),))

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def keys(self) -> list[Key]:
        return [key for key, _ in self.terms]

    def coefficient_of(self, key: Key) -> Coefficient:
        for k, coeff in self.terms:
            if k == key:
                return coeff
        return self.session.zero_coefficient()

    def satisfies_invariant(self) -> bool:
        """support(f_g) inside ran beta_g for every term."""
        for key, coeff in self.terms:
            allowed = self.session.range(key)
            for part, room in zip(coeff_support(coeff).slots, allowed.slots):
                if not part.issubset(room):
                    return False
        return True

    def is_core(self) -> bool:
        """All terms lie over k = 0 (and p = 0): the UHF core."""
        for key in self.keys():
            g, p = self.session.parts(key)
            if g.k != 0 or p != 0:
                return False
        return True

    # -- algebra --------------------------------------------------------

    def _check(self, other: AlgebraElement):
        if other.session != self.session:
            raise BaseMismatchError(f"session {other.session} used with session {self.session}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return elem_linear(ONE, self, ONE, other)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return elem_linear(ONE, self, Scalar(-1), other)

    def __neg__(self) -> AlgebraElement:
        return self.scale(Scalar(-1))

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return elem_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> AlgebraElement:
        return self.scale(other)

    def scale(self, c) -> AlgebraElement:
        c = Scalar.of(c)
        if c.is_zero():
            return AlgebraElement.zero(self.session)
        return AlgebraElement(self.session, tuple((key, coeff_scale(coeff, c)) for key, coeff in self.terms))

    def adjoint(self) -> AlgebraElement:
        return elem_adjoint(self)

    def __str__(self) -> str:
        from utils.serialize import to_text

        return to_text(self)


def substitute_unit(session: Session, key: Key) -> AlgebraElement:
    """chi_(ran beta_g) U^g, the stand-in for the missing U^g."""
    return AlgebraElement(session, ((key, session.coefficient(session.range(key))),))


def elem_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    session = a.session
    acc: dict[Key, Coefficient] = {}
    for g, e in a.terms:
        g_inverse = session.inv(g)
        for h, f in b.terms:
            product = coeff_mul(e, session.pullback(f, g_inverse))
            if coeff_is_zero(product):
                continue
            key = session.mul(g, h)
            acc[key] = coeff_add(acc[key], product) if key in acc else product
    return AlgebraElement(session, tuple(acc.items()))


def elem_adjoint(a: AlgebraElement) -> AlgebraElement:
    session = a.session
    terms = [
        (session.inv(g), coeff_conjugate(session.pullback(f, g)))
        for g, f in a.terms
    ]
    return AlgebraElement(session, tuple(terms))


def elem_linear(c1, a: AlgebraElement, c2, b: AlgebraElement) -> AlgebraElement:
    """c1 a + c2 b."""
    a._check(b)
    return AlgebraElement.from_terms(
        a.session,
        [(key, coeff_scale(coeff, c1)) for key, coeff in a.terms]
        + [(key, coeff_scale(coeff, c2)) for key, coeff in b.terms],
    )
