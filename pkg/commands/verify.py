import logging
from itertools import product
from typing import Callable, Iterable

import click

from algebra.element import substitute_unit
from algebra.generators import cuntz_generator, s_of_opat
from algebra.nest import (
    GroupPredicate,
    bp_membership,
    nest_generator,
    nest_invariant,
    nest_levels,
    predicate_closure_check,
    volterra_projection,
)
from algebra.relations import RelationReport, RelationResult, verify_relations
from algebra.session import Session
from config import SessionConfig
from core.errors import ConfigError, PcplabError
from core.group import GElem, HElem, embed_rational, fixed_point, g_inv, g_mul, h_op
from core.nadic import NAdic, Point, Side, Word, nadic_exponent
from dynamics.groupoid import (
    GroupoidElement,
    YGroupoidElement,
    cocycle,
    graph_consistency,
    groupoid_compose,
    groupoid_inverse,
    y_cocycle,
    y_graph_consistency,
    y_groupoid_compose,
)
from dynamics.partial_action import (
    PartialMap,
    beta_apply_point,
    beta_domain,
    beta_image,
    descending_interval,
    descending_is_full,
    opat_compose,
)
from utils import sampling
from utils.parser import parse_expr
from utils.serialize import dumps, from_json, to_json, to_text

logger = logging.getLogger(__name__)

SUITES = ("cuntz", "groupoid", "nest", "matrix", "algebra-axioms", "group", "opat", "closure", "serialize")

# (closed under mul, closed under inv) for the named subalgebras
EXPECTED_CLOSURE = {
    "UHF": (True, True),
    "RefinementTAF": (True, False),
    "Triangular": (True, False),
}

Check = tuple[bool, str]


def aggregate(label: str, checks: Iterable[Check]) -> RelationResult:
    """Fold many (ok, description) checks into one relation with the first failure as witness."""
    checked = 0
    witness = None
    for ok, description in checks:
        checked += 1
        if not ok and witness is None:
            witness = description
    if witness is not None:
        logger.warning(f"{label} fails: {witness}")
    return RelationResult(label, witness is None, witness, checked)


def _edge_points(region) -> list[Point]:
    points = []
    for a, b in region.components:
        points.append(Point.at(a, Side.PLUS))
        points.append(Point.at(b, Side.MINUS))
    return points


def _matrix_config(cfg: SessionConfig) -> SessionConfig:
    if cfg.matrix:
        return cfg
    return SessionConfig(cfg.n, 2, True, cfg.seed, cfg.samples, cfg.max_word_length,
                         cfg.max_random_word_length, cfg.max_exponent, cfg.max_numerator,
                         cfg.max_k, cfg.nest_depth, cfg.cut_depth)


# -- suites ---------------------------------------------------------------


def suite_cuntz(cfg: SessionConfig) -> RelationReport:
    return verify_relations("cuntz", Session.cuntz(cfg.n))


def suite_matrix(cfg: SessionConfig) -> RelationReport:
    cfg = _matrix_config(cfg)
    return verify_relations("cuntz_krieger", cfg.session())


def suite_group(cfg: SessionConfig) -> RelationReport:
    rng = sampling.make_rng(cfg)
    n = cfg.n

    triples = [tuple(sampling.random_gelem(rng, cfg) for _ in range(3)) for _ in range(cfg.samples)]
    h_triples = [tuple(sampling.random_helem(rng, _matrix_config(cfg)) for _ in range(3)) for _ in range(cfg.samples)]
    e, he = GElem.identity(n), HElem.identity(n)

    results = [
        aggregate("G_assoc", ((g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c)), f"{a},{b},{c}") for a, b, c in triples)),
        aggregate("G_identity", ((g_mul(e, a) == a == g_mul(a, e), str(a)) for a, _, _ in triples)),
        aggregate("G_inverse", ((g_mul(a, g_inv(a)) == e == g_mul(g_inv(a), a), str(a)) for a, _, _ in triples)),
        aggregate(
            "H_assoc",
            ((h_op("mul", h_op("mul", a, b), c) == h_op("mul", a, h_op("mul", b, c)), f"{a},{b},{c}") for a, b, c in h_triples),
        ),
        aggregate(
            "H_inverse",
            ((h_op("mul", a, h_op("inv", a)) == he == h_op("mul", h_op("inv", a), a), str(a)) for a, _, _ in h_triples),
        ),
        aggregate(
            "embed_homomorphism",
            ((embed_rational(a.r + b.r) == g_mul(embed_rational(a.r), embed_rational(b.r)), f"{a.r},{b.r}") for a, b, _ in triples),
        ),
        aggregate(
            "delta_action",
            ((a.r.shift(-b.k).shift(-c.k) == a.r.shift(-(b.k + c.k)), f"{a.r},{b.k},{c.k}") for a, b, c in triples),
        ),
    ]

    pairs = [(sampling.random_live_gelem(rng, cfg), sampling.random_live_gelem(rng, cfg)) for _ in range(cfg.samples)]

    def restriction_checks():
        for g, h in pairs:
            composite = opat_compose(PartialMap.full(g), PartialMap.full(h))
            gh = g_mul(g, h)
            yield composite.g == gh, f"group part of {g} o {h}"
            yield composite.domain.issubset(beta_domain(gh)), f"domain of {g} o {h}"
            for x in _edge_points(composite.domain):
                lhs = beta_apply_point(g, beta_apply_point(h, x))
                yield lhs == beta_apply_point(gh, x), f"{g} o {h} at {x}"

    def inverse_checks():
        for g, _ in pairs:
            dom = beta_domain(g)
            yield beta_image(g, dom) == beta_domain(g_inv(g)), f"range of {g}"
            for x in _edge_points(dom):
                yield beta_apply_point(g_inv(g), beta_apply_point(g, x)) == x, f"{g} round trip at {x}"

    results.append(aggregate("restriction_law", restriction_checks()))
    results.append(aggregate("inverse_law", inverse_checks()))
    return RelationReport("group", tuple(results))


def suite_opat(cfg: SessionConfig) -> RelationReport:
    rng = sampling.make_rng(cfg)
    session = Session.cuntz(cfg.n)

    def homomorphism_checks():
        for _ in range(cfg.samples):
            phi, psi = sampling.random_opat(rng, cfg), sampling.random_opat(rng, cfg)
            lhs = s_of_opat(session, opat_compose(phi, psi))
            rhs = s_of_opat(session, phi) * s_of_opat(session, psi)
            yield lhs == rhs, f"S({phi.g} on {phi.domain}) S({psi.g} on {psi.domain})"

    g, h = GElem.of(0, 1, cfg.n), GElem.of(0, -1, cfg.n)
    product_gh = substitute_unit(session, g) * substitute_unit(session, h)
    composite = s_of_opat(session, opat_compose(PartialMap.full(g), PartialMap.full(h)))
    results = [
        aggregate("S(phi o psi) = S(phi)S(psi)", homomorphism_checks()),
        aggregate("substitute_product_is_composite", [(product_gh == composite, to_text(product_gh - composite))]),
        aggregate(
            "substitute_product_is_proper",
            [(product_gh != substitute_unit(session, g_mul(g, h)), to_text(product_gh))],
        ),
    ]
    return RelationReport("opat", tuple(results))


def all_words(n: int, max_length: int) -> list[Word]:
    words = []
    for length in range(max_length + 1):
        words.extend(Word(digits, n) for digits in product(range(n), repeat=length))
    return words


def suite_groupoid(cfg: SessionConfig) -> RelationReport:
    n = cfg.n
    rng = sampling.make_rng(cfg)
    words = all_words(n, cfg.max_word_length)
    elements = [GroupoidElement(lam, mu) for lam in words for mu in words]
    cocycles = {gamma: cocycle(gamma) for gamma in elements}

    def multiplicative(first, second):
        joined = groupoid_compose(first, second)
        expected = g_mul(cocycles.get(first) or cocycle(first), cocycles.get(second) or cocycle(second))
        return cocycle(joined) == expected, f"{first} o {second}"

    def exhaustive_checks():
        for first in elements:
            for second in elements:
                if first.mu.is_prefix_of(second.lam) or second.lam.is_prefix_of(first.mu):
                    yield multiplicative(first, second)

    def random_pair():
        first = sampling.random_groupoid_element(rng, n, cfg.max_random_word_length)
        if rng.random() < 0.5:
            lam = first.mu + sampling.random_word(rng, n, cfg.max_random_word_length)
        else:
            lam = Word(first.mu.digits[: rng.randint(0, len(first.mu))], n)
        second = GroupoidElement(lam, sampling.random_word(rng, n, cfg.max_random_word_length))
        return first, second

    def random_checks():
        for _ in range(cfg.samples):
            yield multiplicative(*random_pair())

    def representative_checks():
        for gamma in elements:
            for d in range(n):
                tail = Word((d,), n)
                longer = GroupoidElement(gamma.lam + tail, gamma.mu + tail)
                yield cocycle(longer) == cocycles[gamma], f"{gamma} extended by {d}"

    def tail_checks():
        for gamma in elements:
            renamed = GroupoidElement(gamma.lam, gamma.mu, "z1")
            yield cocycle(renamed) == cocycles[gamma], str(gamma)

    mcfg = _matrix_config(cfg)
    k = mcfg.k

    def y_checks():
        for _ in range(cfg.samples):
            first, second = random_pair()
            q1, i1, i2 = rng.randrange(k), rng.randrange(k), rng.randrange(k)
            y1 = YGroupoidElement(first, i1, q1)
            y2 = YGroupoidElement(second, i2, i1)
            joined = y_groupoid_compose(y1, y2)
            yield y_cocycle(joined) == h_op("mul", y_cocycle(y1), y_cocycle(y2)), f"{y1} o {y2}"
            yield y_graph_consistency(y1, k) and y_graph_consistency(joined, k), f"graph of {y1}"

    results = [
        aggregate("cocycle_exhaustive", exhaustive_checks()),
        aggregate("cocycle_random", random_checks()),
        aggregate("graph_consistency", ((graph_consistency(gamma), str(gamma)) for gamma in elements)),
        aggregate(
            "cocycle_inverse",
            ((cocycle(groupoid_inverse(gamma)) == g_inv(cocycles[gamma]), str(gamma)) for gamma in elements),
        ),
        aggregate("representative_independence", representative_checks()),
        aggregate("tail_independence", tail_checks()),
        aggregate("y_cocycle", y_checks()),
    ]
    return RelationReport("groupoid", tuple(results))


def suite_nest(cfg: SessionConfig) -> RelationReport:
    n = cfg.n
    session = Session.cuntz(n)
    grid = sampling.grid_elements(cfg)
    levels = nest_levels(n, cfg.nest_depth)

    def invariance_checks():
        for g in grid:
            generator = nest_generator(session, g, cfg.cut_depth)
            if generator.is_zero():
                continue
            for r in levels:
                yield nest_invariant(generator, r), f"T{g} at level {r.to_text()}"

    def remark_checks():
        for g in grid:
            full = descending_interval(g, cfg.cut_depth) == beta_domain(g)
            yield descending_is_full(g) == full, str(g)

    def fixed_point_checks():
        for g in grid:
            region = descending_interval(g, cfg.cut_depth)
            dom = beta_domain(g)
            x_star = fixed_point(g)
            if region.is_empty() or region == dom or x_star is None or nadic_exponent(x_star, n) is None:
                continue
            cut = NAdic.from_fraction(x_star, n)
            yield cut in region.cuts() and cut not in dom.cuts(), f"{g} cut at {x_star}"

    def nest_property_checks():
        for r, s in product(levels, repeat=2):
            p_r, p_s = volterra_projection(session, r), volterra_projection(session, s)
            low = p_r if r <= s else p_s
            yield p_r * p_s == low == p_s * p_r, f"p_{r.to_text()} p_{s.to_text()}"

    s2 = cuntz_generator(session, 2)
    first_cut = NAdic(1, 1, n)
    results = [
        aggregate("nest_invariance", invariance_checks()),
        aggregate("descending_is_full", remark_checks()),
        aggregate("cut_at_fixed_point", fixed_point_checks()),
        aggregate("nest_property", nest_property_checks()),
        aggregate("S2_leaves_nest", [(not nest_invariant(s2, first_cut), f"S2 at {first_cut.to_text()}")]),
    ]
    return RelationReport("nest", tuple(results))


def suite_algebra_axioms(cfg: SessionConfig) -> RelationReport:
    rng = sampling.make_rng(cfg)
    session = cfg.session()
    triples = [tuple(sampling.random_monomial(rng, session, cfg) for _ in range(3)) for _ in range(cfg.samples)]

    def invariant_checks():
        for a, b, _ in triples:
            yield (a * b).satisfies_invariant(), f"{a} * {b}"
            yield a.adjoint().satisfies_invariant(), f"({a})*"

    results = [
        aggregate("associativity", (((a * b) * c == a * (b * c), f"{a} | {b} | {c}") for a, b, c in triples)),
        aggregate("adjoint_of_product", (((a * b).adjoint() == b.adjoint() * a.adjoint(), f"{a} | {b}") for a, b, _ in triples)),
        aggregate("involution", ((a.adjoint().adjoint() == a, str(a)) for a, _, _ in triples)),
        aggregate("distributivity", ((a * (b + c) == a * b + a * c, f"{a} | {b} | {c}") for a, b, c in triples)),
        aggregate("coefficient_invariant", invariant_checks()),
    ]
    return RelationReport("algebra-axioms", tuple(results))


def suite_closure(cfg: SessionConfig) -> RelationReport:
    rng = sampling.make_rng(cfg)
    results = []
    for name, (want_mul, want_inv) in EXPECTED_CLOSURE.items():
        report = predicate_closure_check(GroupPredicate.named(name), cfg)
        for label, want in (("closed_under_mul", want_mul), ("closed_under_inv", want_inv)):
            found = report.get(label)
            results.append(
                RelationResult(
                    f"{name}:{label}",
                    found.passed == want,
                    found.witness,
                    found.checked,
                    found.counterexamples,
                )
            )

    session = cfg.session()
    core_pairs = [
        (sampling.random_core_element(rng, session, cfg), sampling.random_core_element(rng, session, cfg))
        for _ in range(cfg.samples)
    ]
    results.append(
        aggregate("core_closure", (((a * b).is_core() and a.adjoint().is_core(), f"{a} | {b}") for a, b in core_pairs))
    )

    triangular = GroupPredicate.named("Triangular")

    def membership_checks():
        for _ in range(cfg.samples):
            a = sampling.random_monomial(rng, session, cfg)
            b = sampling.random_monomial(rng, session, cfg)
            if bp_membership(a, triangular) and bp_membership(b, triangular):
                yield bp_membership(a * b, triangular), f"{a} | {b}"

    results.append(aggregate("Triangular:membership_multiplicative", membership_checks()))
    return RelationReport("closure", tuple(results))


def suite_serialize(cfg: SessionConfig) -> RelationReport:
    session = cfg.session()

    def sample():
        rng = sampling.make_rng(cfg)
        return [sampling.random_element(rng, session, cfg) for _ in range(cfg.samples)]

    elements = sample()
    results = [
        aggregate("text_round_trip", ((parse_expr(to_text(a), session) == a, to_text(a)) for a in elements)),
        aggregate("json_round_trip", ((from_json(to_json(a)) == a, to_text(a)) for a in elements)),
        aggregate(
            "json_stable",
            [(dumps([to_json(a) for a in elements]) == dumps([to_json(a) for a in sample()]), "resampled json differs")],
        ),
    ]
    return RelationReport("serialize", tuple(results))


SUITE_RUNNERS: dict[str, Callable[[SessionConfig], RelationReport]] = {
    "cuntz": suite_cuntz,
    "groupoid": suite_groupoid,
    "nest": suite_nest,
    "matrix": suite_matrix,
    "algebra-axioms": suite_algebra_axioms,
    "group": suite_group,
    "opat": suite_opat,
    "closure": suite_closure,
    "serialize": suite_serialize,
}


def run_suite(name: str, cfg: SessionConfig) -> RelationReport:
    if name == "all":
        return RelationReport.merge("all", [run_suite(suite, cfg) for suite in SUITES])
    if name not in SUITE_RUNNERS:
        raise ConfigError(f"unknown suite '{name}'")
    logger.info(f"Running suite {name} (n={cfg.n}, k={cfg.k}, seed={cfg.seed})")
    report = SUITE_RUNNERS[name](cfg)
    logger.info(f"Suite {name}: {len(report.relations)} relations, {len(report.failures())} failures")
    return report


def _print_report(report: RelationReport):
    for r in report.relations:
        if r.passed:
            click.echo(f"PASS  {r.label} ({r.checked} checked)")
        else:
            click.echo(f"FAIL  {r.label}: {r.witness}")
    status = "passed" if report.passed else "FAILED"
    click.echo(f"{report.suite}: {len(report.relations)} relations, {status}")


def handle(suite: str, n: int, k: int | None, seed: int, samples: int, as_json: bool) -> int:
    """Run a suite and return the process exit code."""
    # 1. Build the session config and run the suite
    try:
        cfg = SessionConfig(n, k or 1, k is not None, seed, samples)
        report = run_suite(suite, cfg)
    except PcplabError as e:
        logger.error(f"Invalid configuration: {e}")
        click.echo(f"error: {e}", err=True)
        return 2

    # 2. Report
    if as_json:
        click.echo(dumps(report.to_json()))
    else:
        _print_report(report)
    return 0 if report.passed else 1
