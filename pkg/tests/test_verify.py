import pytest

from commands.verify import SUITES, aggregate, all_words, run_suite
from config import SessionConfig
from core.errors import ConfigError


@pytest.fixture
def quick_cfg():
    return SessionConfig(2, samples=40, max_exponent=3, max_k=2, nest_depth=3)


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_passes_on_a_small_grid(suite, quick_cfg):
    report = run_suite(suite, quick_cfg)
    assert report.passed, [(r.label, r.witness) for r in report.failures()]


@pytest.mark.parametrize("n", [3, 4])
def test_groupoid_suite_other_bases(n):
    report = run_suite("groupoid", SessionConfig(n, samples=50, max_word_length=2))
    assert report.passed


def test_matrix_suite_uses_two_slots_by_default():
    report = run_suite("matrix", SessionConfig(3))
    assert report.passed
    assert report.get("CK_source[T3]").passed
    assert report.get("CK_orth[v1,v2]").passed


def test_nest_suite_default_grid():
    report = run_suite("nest", SessionConfig(2))
    assert report.passed
    assert report.get("nest_invariance").checked > 0


def test_closure_suite_records_counterexamples(quick_cfg):
    report = run_suite("closure", quick_cfg)
    inverse = report.get("Triangular:closed_under_inv")
    assert inverse.passed
    assert inverse.counterexamples


def test_all_prefixes_labels(small_cfg):
    report = run_suite("all", small_cfg)
    assert report.passed
    assert report.get("cuntz:sum_SS*").passed
    assert all(":" in r.label for r in report.relations)


def test_unknown_suite():
    with pytest.raises(ConfigError):
        run_suite("everything", SessionConfig(2))


def test_aggregate_keeps_first_failure():
    result = aggregate("demo", [(True, "a"), (False, "b"), (False, "c")])
    assert not result.passed
    assert result.witness == "b"
    assert result.checked == 3


def test_all_words():
    assert len(all_words(2, 3)) == 15
    assert len(all_words(3, 1)) == 4
