from fractions import Fraction

import pytest

from algebra.element import AlgebraElement
from algebra.generators import cuntz_generator, matrix_generators, s_of_opat
from algebra.relations import RelationReport, RelationResult, check_equal, ck_edges, verify_relations
from algebra.session import Session
from core.clopen import ClopenSet
from core.errors import ConfigError
from core.group import GElem, HElem
from core.nadic import NAdic
from dynamics.partial_action import PartialMap


def g(r, k, n=2):
    return GElem.of(Fraction(r), k, n)


def interval(a, b, n=2):
    return ClopenSet.interval(NAdic.of(Fraction(a), n), NAdic.of(Fraction(b), n), n)


def test_cuntz_generator_shape(x2, x3):
    assert cuntz_generator(x2, 1) == AlgebraElement.monomial(x2, g(0, 1), interval(0, "1/2"))
    assert cuntz_generator(x3, 3) == AlgebraElement.monomial(x3, g("2/3", 1, 3), interval("2/3", 1, 3))
    with pytest.raises(ConfigError):
        cuntz_generator(x2, 3)
    with pytest.raises(ConfigError):
        cuntz_generator(x2, 0)


def test_s_of_opat(x2, y22):
    phi = PartialMap(g(0, 1), interval(0, "1/2"))
    assert s_of_opat(x2, phi) == AlgebraElement.monomial(x2, g(0, 1), interval(0, "1/4"))
    with pytest.raises(ConfigError):
        s_of_opat(y22, phi)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cuntz_relations_hold(n):
    report = verify_relations("cuntz", Session.cuntz(n))
    assert report.passed
    assert len(report.relations) == n * n + 1


def test_broken_generator_is_caught(x2):
    broken = AlgebraElement.monomial(x2, g("1/2", 1), interval("1/2", "3/4"))
    report = verify_relations("cuntz", x2, generators={"S2": broken})
    assert not report.passed
    failed = report.get("S*S[2,2]")
    assert not failed.passed
    assert failed.witness
    assert report.get("S*S[1,1]").passed


def test_ck_edges():
    assert ck_edges(2, 3) == [("T1", 1, 1), ("T2", 3, 1), ("R1", 1, 2), ("R2", 2, 3)]
    assert ck_edges(3, 1) == [("T1", 1, 1), ("T2", 1, 1), ("T3", 1, 1)]


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (2, 3), (3, 2)])
def test_cuntz_krieger_relations_hold(n, k):
    report = verify_relations("cuntz_krieger", Session.matrices(n, k))
    assert report.passed, [r.label for r in report.failures()]


def test_ck_relation_count(y22):
    report = verify_relations("cuntz_krieger", y22)
    assert len(report.relations) == 11
    assert report.get("CK_source[T2]").passed


def test_matrix_generators(y22):
    gens = matrix_generators(y22)
    assert sorted(gens) == ["P1", "P2", "R1", "T1", "T2"]
    assert gens["T2"].keys() == [HElem(g("1/2", 1), -1)]
    assert gens["T2"].adjoint() * gens["T2"] == gens["P2"]
    assert gens["R1"] * gens["R1"].adjoint() == gens["P2"]
    assert gens["P1"] + gens["P2"] == AlgebraElement.identity(y22)


def test_single_slot_matrix_generators_match_cuntz(x2):
    y21 = Session.matrices(2, 1)
    gens = matrix_generators(y21)
    for i in (1, 2):
        (key, coeff), = gens[f"T{i}"].terms
        (plain_key, plain_coeff), = cuntz_generator(x2, i).terms
        assert key == HElem(plain_key, 0)
        assert coeff == plain_coeff


def test_matrix_generators_need_matrix_session(x2):
    with pytest.raises(ConfigError):
        matrix_generators(x2)
    with pytest.raises(ConfigError):
        verify_relations("unknown", x2)


def test_check_equal_witness(x2):
    one = AlgebraElement.identity(x2)
    assert check_equal("same", one, one).passed
    failed = check_equal("different", one, AlgebraElement.zero(x2))
    assert failed.witness == "chi[0,1] U(0,0)"


def test_merge_prefixes_and_sorts():
    a = RelationReport("b", (RelationResult("x", True),))
    b = RelationReport("a", (RelationResult("y", False, "w"),))
    merged = RelationReport.merge("all", [a, b])
    assert [r.label for r in merged.relations] == ["a:y", "b:x"]
    assert not merged.passed
    assert merged.to_json()["relations"][0] == {"label": "a:y", "passed": False, "checked": 1, "witness": "w"}
