import json

import pytest
from click.testing import CliRunner

from main import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_verify_cuntz_passes(runner):
    result = runner.invoke(cli, ["verify", "--suite", "cuntz", "--n", "2"])
    assert result.exit_code == 0
    assert "PASS  S*S[1,1]" in result.output
    assert "cuntz: 5 relations, passed" in result.output


def test_verify_rejects_bad_base(runner):
    result = runner.invoke(cli, ["verify", "--suite", "cuntz", "--n", "1"])
    assert result.exit_code == 2


def test_verify_rejects_unknown_suite(runner):
    result = runner.invoke(cli, ["verify", "--suite", "everything", "--n", "2"])
    assert result.exit_code == 2


def test_verify_matrix_json(runner):
    result = runner.invoke(cli, ["verify", "--suite", "matrix", "--n", "2", "--k", "3", "--json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["suite"] == "cuntz_krieger"
    assert report["passed"] is True


def test_verify_json_is_stable(runner):
    args = ["verify", "--suite", "group", "--n", "3", "--samples", "30", "--seed", "7", "--json"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_eval_prints_canonical_form(runner):
    result = runner.invoke(cli, ["eval", "--n", "2", "S1' * S1"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "chi[0,1] U(0,0)"


def test_eval_matrix(runner):
    result = runner.invoke(cli, ["eval", "--n", "2", "--k", "2", "T2' * T2"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "chi[0,1;1] U(0,0,0)"


def test_eval_json(runner):
    result = runner.invoke(cli, ["eval", "--n", "2", "--json", "S1"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["terms"][0]["g"]["k"] == 1


@pytest.mark.parametrize("expr", ["chi[0,1] U(1/2,1)", "S1 +", "chi[0,1/3]"])
def test_eval_errors_exit_two(runner, expr):
    result = runner.invoke(cli, ["eval", "--n", "2", expr])
    assert result.exit_code == 2


def test_cocycle(runner):
    result = runner.invoke(cli, ["cocycle", "--n", "2", "--lambda", "1", "--mu", "0,1"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "(0,-1)"


def test_cocycle_with_slots(runner):
    result = runner.invoke(cli, ["cocycle", "--n", "2", "--lambda", "1,1", "--i", "1", "--q", "0"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "(3/4,2,-1)"


def test_cocycle_needs_both_slots(runner):
    result = runner.invoke(cli, ["cocycle", "--n", "2", "--lambda", "1", "--i", "1"])
    assert result.exit_code == 2


def test_cocycle_rejects_bad_digit(runner):
    result = runner.invoke(cli, ["cocycle", "--n", "2", "--lambda", "2"])
    assert result.exit_code == 2


@pytest.mark.parametrize("name", ["PCPLAB_SEED", "PCPLAB_SAMPLES"])
def test_bad_env_setting_is_usage_error(runner, name):
    result = runner.invoke(cli, ["verify", "--suite", "cuntz", "--n", "2"], env={name: "abc"})
    assert result.exit_code == 2
    assert name in result.output
