import logging
import random

from algebra.element import AlgebraElement
from algebra.session import Session
from config import SessionConfig
from core.clopen import ClopenSet
from core.group import GElem, HElem
from core.nadic import NAdic, Word
from core.scalar import Scalar
from core.step import StepFunction
from dynamics.groupoid import GroupoidElement
from dynamics.partial_action import PartialMap, beta_domain

logger = logging.getLogger(__name__)

# depth of the random cuts used for clopen sets and step functions
SAMPLE_DEPTH = 3


def make_rng(cfg: SessionConfig) -> random.Random:
    return random.Random(cfg.seed)


def grid_rationals(n: int, max_exponent: int, max_numerator: int) -> list[NAdic]:
    """Every p/n^e with |p| <= max_numerator and 0 <= e <= max_exponent, without repeats."""
    values = {NAdic(p, e, n) for e in range(max_exponent + 1) for p in range(-max_numerator, max_numerator + 1)}
    return sorted(values)


def grid_elements(cfg: SessionConfig) -> list[GElem]:
    rationals = grid_rationals(cfg.n, cfg.max_exponent, cfg.max_numerator)
    elements = [GElem(r, k) for k in range(-cfg.max_k, cfg.max_k + 1) for r in rationals]
    logger.debug(f"grid of {len(elements)} group elements for n={cfg.n}")
    return elements


def random_nadic(rng: random.Random, cfg: SessionConfig) -> NAdic:
    e = rng.randint(0, cfg.max_exponent)
    return NAdic(rng.randint(-cfg.max_numerator, cfg.max_numerator), e, cfg.n)


def random_unit_nadic(rng: random.Random, n: int, depth: int = SAMPLE_DEPTH) -> NAdic:
    """A cut m/n^depth inside [0,1]."""
    return NAdic(rng.randint(0, n**depth), depth, n)


def random_gelem(rng: random.Random, cfg: SessionConfig) -> GElem:
    return GElem(random_nadic(rng, cfg), rng.randint(-cfg.max_k, cfg.max_k))


def random_live_gelem(rng: random.Random, cfg: SessionConfig) -> GElem:
    """A group element with r in [0,1), so beta_g has a nonempty domain."""
    depth = max(cfg.max_exponent, 1)
    r = NAdic(rng.randint(0, cfg.n**depth - 1), depth, cfg.n)
    return GElem(r, rng.randint(-cfg.max_k, cfg.max_k))


def random_helem(rng: random.Random, cfg: SessionConfig) -> HElem:
    return HElem(random_gelem(rng, cfg), rng.randint(-(cfg.k - 1), cfg.k - 1))


def random_word(rng: random.Random, n: int, max_length: int) -> Word:
    length = rng.randint(0, max_length)
    return Word(tuple(rng.randrange(n) for _ in range(length)), n)


def random_groupoid_element(rng: random.Random, n: int, max_length: int) -> GroupoidElement:
    return GroupoidElement(random_word(rng, n, max_length), random_word(rng, n, max_length))


def random_clopen(rng: random.Random, n: int, pieces: int = 3) -> ClopenSet:
    comps = []
    for _ in range(rng.randint(0, pieces)):
        a, b = sorted((random_unit_nadic(rng, n), random_unit_nadic(rng, n)))
        comps.append((a, b))
    return ClopenSet(n, tuple(comps))


def random_scalar(rng: random.Random) -> Scalar:
    return Scalar(rng.randint(-3, 3), rng.choice((0, 0, rng.randint(-2, 2))))


def random_step(rng: random.Random, n: int, pieces: int = 3) -> StepFunction:
    cuts = sorted({random_unit_nadic(rng, n) for _ in range(2 * pieces)})
    return StepFunction(n, tuple(((a, b), random_scalar(rng)) for a, b in zip(cuts, cuts[1:])))


def random_opat(rng: random.Random, cfg: SessionConfig) -> PartialMap:
    """beta_g restricted to a random clopen part of its domain."""
    g = random_live_gelem(rng, cfg)
    domain = beta_domain(g)
    if rng.random() < 0.5:
        domain = domain.intersect(random_clopen(rng, cfg.n))
    return PartialMap(g, domain)


def random_key(rng: random.Random, session: Session, cfg: SessionConfig):
    g = random_live_gelem(rng, cfg)
    if session.matrix:
        return HElem(g, rng.randint(-(session.k - 1), session.k - 1))
    return g


def random_monomial(rng: random.Random, session: Session, cfg: SessionConfig) -> AlgebraElement:
    """f U^g with f a random step function cut down to ran beta_g, slot by slot."""
    key = random_key(rng, session, cfg)
    allowed = session.range(key)
    coeff = tuple(random_step(rng, session.n).restrict(room) for room in allowed.slots)
    return AlgebraElement(session, ((key, coeff),))


def random_element(rng: random.Random, session: Session, cfg: SessionConfig, terms: int = 3) -> AlgebraElement:
    total = AlgebraElement.zero(session)
    for _ in range(rng.randint(0, terms)):
        total = total + random_monomial(rng, session, cfg)
    return total


def random_core_element(rng: random.Random, session: Session, cfg: SessionConfig, terms: int = 3) -> AlgebraElement:
    """A sum of monomials over k = 0 (and p = 0)."""
    total = AlgebraElement.zero(session)
    depth = max(cfg.max_exponent, 1)
    for _ in range(rng.randint(1, terms)):
        r = NAdic(rng.randint(1 - cfg.n**depth, cfg.n**depth - 1), depth, cfg.n)
        key = session.make_key(GElem(r, 0))
        coeff = tuple(random_step(rng, session.n).restrict(room) for room in session.range(key).slots)
        total = total + AlgebraElement(session, ((key, coeff),))
    return total
