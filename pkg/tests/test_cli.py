"""
Unit tests for the command-line front end
Tests output text, JSON payloads, exit codes and seeded determinism of main()
"""

import json

import pytest

from src.models.commands import CoeffCommand
from src.orchestrator.cli import main
from src.orchestrator.command_runner import EXIT_INPUT_ERROR, EXIT_OK, EXIT_PRECONDITION, run
from src.utils.config import KernelSettings

# ==========================================
# TEST FIXTURES
# ==========================================


@pytest.fixture
def settings(tmp_path):
    return KernelSettings(log_dir=str(tmp_path / "logs"))


@pytest.fixture
def cli(settings, capsys):
    """Runs main() and returns (exit code, stdout, stderr)"""

    def invoke(*argv: str):
        code = main([*argv, "--no-log-file"], settings=settings)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


# ==========================================
# INTEGRATE
# ==========================================


def test_integrate_prints_exact_value(cli):
    code, out, _ = cli("integrate", "-k", "2", "-n", "4", "c(1,Q)^4")
    assert code == EXIT_OK
    assert out == "2\n"


def test_integrate_with_oracle(cli):
    code, out, _ = cli("integrate", "-k", "2", "-n", "4", "euler(sym(3,dual(S)))", "--oracle", "3", "--seed", "5")
    assert code == EXIT_OK
    assert out.splitlines() == ["27", "oracle: 27 over 3 trials (seed 5): agree"]


def test_integrate_json_schema(cli):
    code, out, _ = cli("integrate", "-k", "2", "-n", "4", "euler(sym(3,dual(S)))", "--oracle", "3", "--json")
    assert code == EXIT_OK
    assert json.loads(out) == {
        "value": "27",
        "oracle": {"trials": 3, "agree": True},
        "spec": {"k": 2, "n": 4},
    }


def test_integrate_json_without_oracle(cli):
    _, out, _ = cli("integrate", "-k", "1", "-n", "2", "c(1,Q)", "--json")
    assert json.loads(out)["oracle"] is None


def test_rational_values_print_as_fraction(cli):
    _, out, _ = cli("integrate", "-k", "1", "-n", "2", "1/3*c(1,Q)")
    assert out == "1/3\n"


def test_over_degree_exits_with_precondition_code(cli):
    code, out, err = cli("integrate", "-k", "2", "-n", "4", "c(1,Q)^5")
    assert code == EXIT_PRECONDITION
    assert out == ""
    assert "DegreeExceedsDimension" in err


def test_precondition_error_as_json(cli):
    code, out, _ = cli("integrate", "-k", "2", "-n", "4", "c(1,Q)^5", "--json")
    assert code == EXIT_PRECONDITION
    assert json.loads(out)["error"]["type"] == "DegreeExceedsDimension"


@pytest.mark.parametrize(
    "argv",
    [
        ("integrate", "-k", "2", "-n", "4", "c(1,Q"),
        ("integrate", "-k", "3", "-n", "3", "1"),
        ("integrate", "-k", "2"),
        ("integrate", "-k", "2", "-n", "4", "1", "--oracle", "1"),
        ("frobnicate",),
    ],
)
def test_input_errors_exit_one(cli, argv):
    code, _, err = cli(*argv)
    assert code == EXIT_INPUT_ERROR
    assert "error:" in err


def test_parse_error_message_has_offset(cli):
    _, _, err = cli("integrate", "-k", "2", "-n", "4", "c(1,Q")
    assert "ParseError" in err
    assert "offset 6" in err


def test_repeated_runs_are_byte_identical(cli):
    argv = ("integrate", "-k", "2", "-n", "5", "c(1,Q)^6", "--oracle", "4", "--seed", "31")
    first = cli(*argv)
    second = cli(*argv)
    assert first[0] == second[0] == EXIT_OK
    assert first[1] == second[1]


# ==========================================
# IDENTITY
# ==========================================


def test_identity_prop1(cli):
    code, out, _ = cli("identity", "prop1", "-n", "3", "z^2", "--lambdas", "0,1,2")
    assert code == EXIT_OK
    assert out.splitlines() == ["lambdas: (0, 1, 2)", "lhs: 1", "rhs: 1", "VERDICT: equal"]


def test_identity_power_sum(cli):
    _, out, _ = cli("identity", "power_sum", "-n", "2", "-m", "3", "--lambdas", "1,2")
    assert "lhs: 7" in out.splitlines()
    assert out.splitlines()[-1] == "VERDICT: equal"


def test_identity_main_and_double(cli):
    _, out, _ = cli("identity", "main", "-n", "3", "-k", "2", "x1*x2", "--lambdas", "0,1,2")
    assert out.splitlines()[1:] == ["lhs: 1", "rhs: 1", "VERDICT: equal"]
    _, out, _ = cli("identity", "double", "-n", "2", "-k", "1", "y1 - x1", "--lambdas", "0,1")
    assert out.splitlines()[1:] == ["lhs: -2", "rhs: -2", "VERDICT: equal"]


def test_identity_chen_louck(cli):
    _, out, _ = cli("identity", "chen_louck", "-n", "4", "-k", "2", "x1 + x2", "--lambdas", "0,1,2,3")
    assert out.splitlines()[1:] == ["lhs: x1 + x2", "rhs: x1 + x2", "VERDICT: equal"]


def test_identity_with_seeded_weights(cli):
    first = cli("identity", "power_sum", "-n", "4", "-m", "5", "--seed", "8", "--json")
    second = cli("identity", "power_sum", "-n", "4", "-m", "5", "--seed", "8", "--json")
    assert first == second
    payload = json.loads(first[1])
    assert payload["verdict"] == "equal"
    assert payload["which"] == "power_sum"


def test_identity_precondition_and_input_errors(cli):
    assert cli("identity", "main", "-n", "3", "-k", "2", "x1 - x2")[0] == EXIT_PRECONDITION
    assert cli("identity", "main", "-n", "3", "-k", "2")[0] == EXIT_INPUT_ERROR
    assert cli("identity", "prop1", "-n", "3", "z", "--lambdas", "0,1")[0] == EXIT_INPUT_ERROR
    assert cli("identity", "prop1", "-n", "3", "z", "--lambdas", "0,0,1")[0] == EXIT_INPUT_ERROR
    assert cli("identity", "power_sum", "-n", "3")[0] == EXIT_INPUT_ERROR


# ==========================================
# COEFF AND EXPAND
# ==========================================


def test_coeff(cli):
    code, out, _ = cli("coeff", "(x1 - x2)*(x2 - x1)", "x1*x2")
    assert code == EXIT_OK
    assert out == "2\n"


def test_coeff_rejects_non_monomial(cli):
    assert cli("coeff", "x1", "2*x1")[0] == EXIT_INPUT_ERROR


def test_expand(cli):
    code, out, _ = cli("expand", "-k", "2", "-n", "4", "euler(sym(3,dual(S)))")
    assert code == EXIT_OK
    assert out == "18*x1^3*x2 + 45*x1^2*x2^2 + 18*x1*x2^3\n"


def test_expand_json(cli):
    _, out, _ = cli("expand", "-k", "1", "-n", "2", "c(1,Q) + 1", "--json")
    assert json.loads(out) == {"polynomial": "y1 + 1", "spec": {"k": 1, "n": 2}}


def test_expand_rejects_raw_asymmetric_roots(cli):
    assert cli("expand", "-k", "2", "-n", "4", "x1")[0] == EXIT_PRECONDITION


def test_runner_used_directly():
    outcome = run(CoeffCommand(poly="x1^2 + 3*x1*y1", monomial="x1*y1"))
    assert outcome.exit_code == EXIT_OK
    assert outcome.stdout == "3"


# ==========================================
# BATCH
# ==========================================


def _write_corpus(path, cases):
    path.write_text(json.dumps(cases), encoding="utf-8")
    return str(path)


def test_batch_passes(cli, tmp_path):
    corpus = _write_corpus(
        tmp_path / "corpus.json",
        [
            {"name": "quartic", "k": 2, "n": 4, "expr": "c(1,Q)^4", "expected": "2"},
            {"name": "too high", "k": 2, "n": 4, "expr": "c(1,Q)^5", "expect_error": "DegreeExceedsDimension"},
        ],
    )
    code, out, _ = cli("batch", corpus, "--oracle", "2")
    assert code == EXIT_OK
    assert "PASS" in out
    assert "Total Cases:  2" in out


def test_batch_failure_exit_code(cli, tmp_path):
    corpus = _write_corpus(
        tmp_path / "corpus.json",
        [{"name": "wrong", "k": 2, "n": 4, "expr": "c(1,Q)^4", "expected": "3"}],
    )
    code, out, _ = cli("batch", corpus, "--json")
    assert code == EXIT_INPUT_ERROR
    summary = json.loads(out)
    assert summary["fail_count"] == 1
    assert summary["results"][0]["value"] == "2"


def test_batch_missing_corpus(cli, tmp_path):
    code, _, err = cli("batch", str(tmp_path / "absent.json"))
    assert code == EXIT_INPUT_ERROR
    assert "not found" in err
