"""Command-line interface: output formats and the exit-code contract."""

import json

import pytest

from deszeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bernoulli_csv(capsys):
    code, out, _ = run(capsys, "bernoulli", "--max", "2")
    assert code == 0
    assert out.splitlines() == ["1", "-1/2", "1/6"]


def test_bernoulli_single(capsys):
    code, out, _ = run(capsys, "bernoulli", "--max", "0")
    assert code == 0
    assert out.strip() == "1"


def test_bernoulli_json(capsys):
    code, out, _ = run(capsys, "bernoulli", "--max", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["values"] == ["1", "-1/2", "1/6", "0", "-1/30"]


def test_bernoulli_negative_max(capsys):
    code, _, err = run(capsys, "bernoulli", "--max", "-1")
    assert code == 2
    assert "error" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bernoulli", "--max", "2", "--bogus"])
    assert exc.value.code == 2


def test_twisted_bernoulli_json_round_trip(capsys):
    from deszeta.cyclotomic import CycloElement, RootOfUnity, twisted_bernoulli

    code, out, _ = run(
        capsys, "twisted-bernoulli", "--c", "3", "--a", "1", "--max", "3",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    xi = RootOfUnity(3, 1)
    for row in data["values"]:
        el = CycloElement.from_json(row["element"])
        assert el == twisted_bernoulli(row["n"], xi)


def test_twisted_bernoulli_trivial_root(capsys):
    code, _, err = run(capsys, "twisted-bernoulli", "--c", "3", "--a", "3", "--max", "1")
    assert code == 2


def test_multi_bernoulli_table(capsys):
    code, out, _ = run(
        capsys, "multi-bernoulli", "--r", "2", "--c", "3", "--a-list", "1,2",
        "--gamma", "1,1/2", "--max", "1", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["values"]) == 4


def test_multi_bernoulli_length_mismatch(capsys):
    code, _, _ = run(
        capsys, "multi-bernoulli", "--r", "2", "--c", "3", "--a-list", "1",
        "--max", "1",
    )
    assert code == 2


def test_desing_values_contains_known_value(capsys):
    code, out, _ = run(
        capsys, "desing-values", "--r", "2", "--kmax", "2", "--gamma", "1,1"
    )
    assert code == 0
    assert "0,2,1/18" in out.splitlines()


def test_desing_values_guards(capsys):
    assert run(capsys, "desing-values", "--r", "5", "--kmax", "2")[0] == 2
    assert run(capsys, "desing-values", "--r", "2", "--kmax", "9")[0] == 2


def test_coeffs_json_round_trip(capsys):
    from deszeta.coeffs import CoeffTable, expand_G

    for r in ("1", "2", "3"):
        code, out, _ = run(capsys, "coeffs", "--r", r, "--format", "json")
        assert code == 0
        assert CoeffTable.from_json(json.loads(out)) == expand_G(int(r))


def test_coeffs_tex(capsys):
    code, out, _ = run(capsys, "coeffs", "--r", "2", "--format", "tex")
    assert code == 0
    assert "zeta_2" in out and out.count("\\left(") == 3


def test_coeffs_out_of_range(capsys):
    assert run(capsys, "coeffs", "--r", "7")[0] == 2


def test_eval_pair(capsys):
    code, out, _ = run(capsys, "eval", "--s", "-1,1")
    assert code == 0
    data = json.loads(out)
    assert abs(data["value"]["re"] - 0.125) < 1e-6


def test_eval_single(capsys):
    code, out, _ = run(capsys, "eval", "--s", "1")
    assert code == 0
    assert json.loads(out)["value"]["re"] == -1.0


def test_eval_bad_input(capsys):
    assert run(capsys, "eval", "--s", "nonsense")[0] == 2
    assert run(capsys, "eval", "--s", "1,2,3")[0] == 2


def test_eval_tolerance_exit(capsys):
    code, _, err = run(capsys, "eval", "--s", "-1,1", "--tol", "1e-30")
    assert code == 3
    assert "tolerance" in err


def test_verify_exact_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "exact")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 7
    assert all("PASS" in l for l in lines)
    # deterministic ordering by check id
    assert lines == sorted(lines)


def test_verify_bad_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2
