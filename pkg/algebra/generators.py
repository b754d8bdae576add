"""Named generators: the Cuntz isometries S_i, S(phi) for an opat, and the M_k(O_n) family."""
from __future__ import annotations

import logging

from algebra.element import AlgebraElement
from algebra.session import Session
from core.clopen import ClopenSet
from core.errors import ConfigError
from core.group import GElem
from core.nadic import NAdic
from dynamics.partial_action import PartialMap, SlotSet

logger = logging.getLogger(__name__)


def _digit_interval(i: int, n: int) -> ClopenSet:
    return ClopenSet.interval(NAdic(i - 1, 1, n), NAdic(i, 1, n), n)


def cuntz_generator(session: Session, i: int) -> AlgebraElement:
    """S_i = chi_[(i-1)/n, i/n] U^((i-1)/n, 1), placed in slot 0 of a matrix session."""
    n = session.n
    if not 1 <= i <= n:
        raise ConfigError(f"generator index {i} is outside 1..{n}")
    key = session.make_key(GElem(NAdic(i - 1, 1, n), 1))
    coeff = SlotSet.single(_digit_interval(i, n), 0, session.k)
    return AlgebraElement.monomial(session, key, coeff)


def s_of_opat(session: Session, phi: PartialMap) -> AlgebraElement:
    """S(phi) = chi_(ran phi) U^g."""
    if session.matrix:
        raise ConfigError("S(phi) is defined for O_n sessions")
    return AlgebraElement.monomial(session, session.make_key(phi.g), phi.range())


def matrix_generators(session: Session) -> dict[str, AlgebraElement]:
    """T_1..T_n, R_1..R_(k-1) and the vertex projections P_1..P_k of M_k(O_n).

    T_n shifts slot k-1 to slot 0, so its initial projection is P_k.
    """
    if not session.matrix:
        raise ConfigError("matrix generators need an M_k(O_n) session")
    n, k = session.n, session.k
    full = ClopenSet.full(n)
    gens: dict[str, AlgebraElement] = {}
    for i in range(1, n + 1):
        p = 1 - k if i == n else 0
        key = session.make_key(GElem(NAdic(i - 1, 1, n), 1), p)
        gens[f"T{i}"] = AlgebraElement.monomial(session, key, SlotSet.single(_digit_interval(i, n), 0, k))
    for i in range(1, k):
        key = session.make_key(GElem.identity(n), 1)
        gens[f"R{i}"] = AlgebraElement.monomial(session, key, SlotSet.single(full, i, k))
    for i in range(1, k + 1):
        gens[f"P{i}"] = AlgebraElement.monomial(session, session.identity_key(), SlotSet.single(full, i - 1, k))
    logger.debug(f"built {len(gens)} generators for n={n}, k={k}")
    return gens
