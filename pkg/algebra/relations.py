"""Relation reports and the Cuntz / Cuntz-Krieger relation suites.

Every check is an exact equality: the difference of the two sides must canonicalize to the empty sum.
The graph behind M_k(O_n) has vertices v_1..v_k, the n edges T_i (T_1..T_(n-1) loop at v_1, T_n runs
from v_k to v_1) and the edges R_i from v_i to v_(i+1).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Literal

from algebra.element import AlgebraElement
from algebra.generators import cuntz_generator, matrix_generators
from algebra.session import Session
from core.errors import ConfigError

logger = logging.getLogger(__name__)

RelationKind = Literal["cuntz", "cuntz_krieger"]


@dataclass(frozen=True)
class RelationResult:
    label: str
    passed: bool
    witness: str | None = None
    checked: int = 1
    counterexamples: tuple[str, ...] = ()

    def to_json(self) -> dict:
        data = {"label": self.label, "passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            data["witness"] = self.witness
        if self.counterexamples:
            data["counterexamples"] = list(self.counterexamples)
        return data


@dataclass(frozen=True)
class RelationReport:
    suite: str
    relations: tuple[RelationResult, ...] = ()

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.relations)

    def failures(self) -> list[RelationResult]:
        return [r for r in self.relations if not r.passed]

    def get(self, label: str) -> RelationResult:
        for r in self.relations:
            if r.label == label:
                return r
        raise KeyError(label)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "relations": [r.to_json() for r in self.relations],
        }

    @classmethod
    def merge(cls, suite: str, reports: Iterable[RelationReport]) -> RelationReport:
        """Combine suites; labels gain the sub-suite prefix and are ordered by label."""
        relations = [
            RelationResult(f"{rep.suite}:{r.label}", r.passed, r.witness, r.checked, r.counterexamples)
            for rep in reports
            for r in rep.relations
        ]
        relations.sort(key=lambda r: r.label)
        return cls(suite, tuple(relations))


def check_equal(label: str, lhs: AlgebraElement, rhs: AlgebraElement) -> RelationResult:
    diff = lhs - rhs
    if diff.is_zero():
        return RelationResult(label, True)
    from utils.serialize import to_text

    witness = to_text(diff)
    logger.warning(f"relation {label} fails: lhs - rhs = {witness}")
    return RelationResult(label, False, witness)


def ck_edges(n: int, k: int) -> list[tuple[str, int, int]]:
    """(edge name, source vertex, range vertex), vertices numbered from 1."""
    edges = [(f"T{i}", 1, 1) for i in range(1, n)]
    edges.append((f"T{n}", k, 1))
    edges.extend((f"R{i}", i, i + 1) for i in range(1, k))
    return edges


def _cuntz_relations(session: Session, gens: dict[str, AlgebraElement]) -> list[RelationResult]:
    n = session.n
    one = AlgebraElement.identity(session)
    zero = AlgebraElement.zero(session)
    results = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = gens[f"S{i}"].adjoint() * gens[f"S{j}"]
            results.append(check_equal(f"S*S[{i},{j}]", lhs, one if i == j else zero))
    total = zero
    for i in range(1, n + 1):
        total = total + gens[f"S{i}"] * gens[f"S{i}"].adjoint()
    results.append(check_equal("sum_SS*", total, one))
    return results


def _ck_relations(session: Session, gens: dict[str, AlgebraElement]) -> list[RelationResult]:
    n, k = session.n, session.k
    edges = ck_edges(n, k)
    zero = AlgebraElement.zero(session)
    results = []
    for name, source, _ in edges:
        s = gens[name]
        results.append(check_equal(f"CK_source[{name}]", s.adjoint() * s, gens[f"P{source}"]))
    for v in range(1, k + 1):
        total = zero
        for name, _, target in edges:
            if target == v:
                total = total + gens[name] * gens[name].adjoint()
        results.append(check_equal(f"CK_range[v{v}]", total, gens[f"P{v}"]))
    for v in range(1, k + 1):
        p = gens[f"P{v}"]
        results.append(check_equal(f"CK_idempotent[v{v}]", p * p, p))
        results.append(check_equal(f"CK_selfadjoint[v{v}]", p.adjoint(), p))
        for w in range(v + 1, k + 1):
            results.append(check_equal(f"CK_orth[v{v},v{w}]", p * gens[f"P{w}"], zero))
    total = zero
    for v in range(1, k + 1):
        total = total + gens[f"P{v}"]
    results.append(check_equal("CK_vertex_sum", total, AlgebraElement.identity(session)))
    return results


def verify_relations(
    kind: RelationKind,
    session: Session,
    generators: dict[str, AlgebraElement] | None = None,
) -> RelationReport:
    """Check the Cuntz or Cuntz-Krieger relations; failures are reported with a witness."""
    if kind == "cuntz":
        gens = {f"S{i}": cuntz_generator(session, i) for i in range(1, session.n + 1)}
        gens.update(generators or {})
        results = _cuntz_relations(session, gens)
    elif kind == "cuntz_krieger":
        gens = matrix_generators(session)
        gens.update(generators or {})
        results = _ck_relations(session, gens)
    else:
        raise ConfigError(f"unknown relation kind '{kind}'")
    report = RelationReport(kind, tuple(results))
    logger.info(f"{kind}: {len(results)} relations, {len(report.failures())} failures")
    return report
