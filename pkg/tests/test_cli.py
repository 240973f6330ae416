"""Command-line interface: contract outputs, exit codes, JSON round trips."""

import json

import pytest

import ellcomb.cli as cli
from ellcomb.ncword import NormalForm
from ellcomb.special_fn import ParameterSet, pair_to_complex, theta
from ellcomb.verify import CheckReport
from ellcomb.weightpoly import WeightPolynomial


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


def test_normal_order_weyl_frozen_output(capsys):
    code, out, err = run_cli(
        capsys, "normal-order", "--system", "weyl", "--word", "xyxxyxyy",
        "--family", "q", "--q", "1,0")
    assert code == 0
    assert out == "x^4 y^4 + 4 x^3 y^3 + 2 x^2 y^2"


def test_binom_q_frozen_output(capsys):
    code, out, err = run_cli(
        capsys, "binom", "--family", "q", "--q", "0.5,0", "--n", "2", "--k", "1")
    assert code == 0
    assert out == "1.5"


def test_theta_value_and_json(capsys):
    code, out, _ = run_cli(capsys, "theta", "--x", "0.5", "--p", "0")
    assert code == 0 and out == "0.5"
    code, out, _ = run_cli(capsys, "theta", "--x", "0.5,0.25", "--p", "0.1,0", "--json")
    assert code == 0
    doc = json.loads(out)
    want = theta(0.5 + 0.25j, 0.1)
    assert abs(pair_to_complex(doc["value"]) - want) < 1e-15


def test_complex_flag_accepts_bare_real(capsys):
    code_bare, out_bare, _ = run_cli(capsys, "theta", "--x", "0.4", "--p", "0.2")
    code_pair, out_pair, _ = run_cli(capsys, "theta", "--x", "0.4,0", "--p", "0.2,0")
    assert code_bare == code_pair == 0
    assert out_bare == out_pair


def test_weight_symbolic_and_numeric(capsys):
    code, out, _ = run_cli(capsys, "weight", "--s", "1", "--t", "1")
    assert code == 0 and out == "w(1,1)"
    code, out, _ = run_cli(capsys, "weight", "--s", "2", "--t", "2", "--json")
    assert code == 0
    poly = WeightPolynomial.from_json(json.loads(out))
    assert poly == WeightPolynomial.symbol(2, 2)
    code, out, _ = run_cli(
        capsys, "weight", "--family", "q", "--q", "0.5", "--s", "1", "--t", "3", "--big")
    assert code == 0 and out == "0.125"


def test_normal_order_symbolic_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "normal-order", "--system", "comm",
                           "--word", "yx", "--json")
    assert code == 0
    nf = NormalForm.from_json(json.loads(out))
    assert nf == NormalForm({(1, 1): WeightPolynomial.symbol(1, 1)})


def test_normal_order_rejects_bad_word(capsys):
    code, out, err = run_cli(capsys, "normal-order", "--system", "weyl",
                             "--word", "xyz")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    assert len(err.splitlines()) == 1


def test_rook_file_commands(capsys):
    code, out, _ = run_cli(capsys, "rook", "--board", "1,2,2,3", "--k", "2",
                           "--family", "q", "--q", "1")
    assert code == 0 and out == "14"
    code, out, _ = run_cli(capsys, "file", "--board", "1,2", "--k", "2",
                           "--family", "q", "--q", "1")
    assert code == 0 and out == "2"
    code, out, _ = run_cli(capsys, "rook", "--board", "1,2", "--k", "1", "--json")
    assert code == 0
    poly = WeightPolynomial.from_json(json.loads(out))
    w = WeightPolynomial.symbol
    assert poly == w(1, 1) + w(1, 1) * w(2, 2) + w(2, 2)


def test_board_cap_enforced(capsys):
    code, _, err = run_cli(capsys, "rook", "--board", "1,2,9", "--k", "1")
    assert code == 2 and "cap" in err
    code, _, err = run_cli(capsys, "file", "--board", ",".join("1" * 9), "--k", "1")
    assert code == 2 and "cap" in err


def test_fib_modes(capsys):
    code, out, _ = run_cli(capsys, "fib", "--n", "5", "--aq",
                           "--a", "0.3", "--q", "0.5")
    assert code == 0
    rec = float(out)
    code, out, _ = run_cli(capsys, "fib", "--n", "5", "--aq",
                           "--a", "0.3", "--q", "0.5", "--closed")
    assert code == 0
    assert abs(float(out) - rec) < 1e-10
    code, out, _ = run_cli(capsys, "fib", "--n", "4", "--elliptic", "--a", "0.4",
                           "--b", "0.3", "--q", "0.5,0.1", "--p", "0.1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert "value" in doc


def test_fib_flag_validation(capsys):
    code, _, err = run_cli(capsys, "fib", "--n", "4", "--elliptic", "--a", "0.4")
    assert code == 2 and err
    code, _, err = run_cli(capsys, "fib", "--n", "4", "--aq", "--a", "0.4")
    assert code == 2 and err
    code, _, err = run_cli(capsys, "fib", "--n", "4", "--elliptic", "--a", "0.4",
                           "--b", "0.3", "--q", "0.5", "--p", "0.1", "--closed")
    assert code == 2 and "--aq" in err


def test_usage_errors_exit_two(capsys):
    code, _, _ = run_cli(capsys, "theta", "--x", "abc", "--p", "0.1")
    assert code == 2
    code, _, _ = run_cli(capsys, "no-such-command")
    assert code == 2
    code, _, _ = run_cli(capsys, "binom", "--family", "bq", "--n", "2", "--k", "1")
    assert code == 2
    code, _, err = run_cli(capsys, "theta", "--x", "0", "--p", "0.1")
    assert code == 2 and err.startswith("error:")


def test_verify_single_check_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "theta-addition",
                           "--seed", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["id"] == "theta-addition"
    assert doc["pass"] is True
    report = CheckReport.from_json(doc)
    assert report.passed and report.seed == 1


def test_verify_text_line_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "theta-inversion", "--seed", "3")
    assert code == 0
    assert out.startswith("PASS theta-inversion ")
    assert "max_rel_err=" in out


def test_verify_unknown_id(capsys):
    code, _, err = run_cli(capsys, "verify", "--id", "bogus")
    assert code == 2 and "unknown check id" in err


def test_verify_order_override(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "binom-recursion-closed",
                           "--seed", "2", "--order", "3")
    assert code == 0 and out.startswith("PASS")


def test_verify_failure_exits_one(capsys, monkeypatch):
    failing = CheckReport(
        id="theta-inversion", trials=10, failures=3, max_rel_err=0.5,
        seed=0, elapsed_ms=1, passed=False, samples=("deadbeef",))
    monkeypatch.setattr(cli, "run_check", lambda *a, **k: failing)
    code, out, _ = run_cli(capsys, "verify", "--id", "theta-inversion")
    assert code == 1
    assert out.startswith("FAIL theta-inversion")
    code, out, _ = run_cli(capsys, "verify", "--id", "theta-inversion", "--json")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_verify_all_emits_one_json_document(capsys, monkeypatch):
    import ellcomb.verify as verify_mod
    reports = [run_one for run_one in [
        CheckReport(id="a-check", trials=1, failures=0, max_rel_err=0.0,
                    seed=0, elapsed_ms=1, passed=True, samples=()),
        CheckReport(id="b-check", trials=1, failures=0, max_rel_err=0.0,
                    seed=0, elapsed_ms=1, passed=True, samples=()),
    ]]
    monkeypatch.setattr(cli, "run_all", lambda seed: reports)
    code, out, _ = run_cli(capsys, "verify", "--json")
    assert code == 0
    docs = json.loads(out)
    assert [d["id"] for d in docs] == ["a-check", "b-check"]


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    assert "theta" in out and "verify" in out
