import json
from fractions import Fraction

import pytest

from ntheta import cli, dedekind
from ntheta.cli import CommandError, format_rational, main, parse_args


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParseArgs:
    def test_dedekind_defaults(self):
        cmd = parse_args(["dedekind", "--p", "3", "--q", "1"])
        assert cmd.name == "dedekind" and cmd.args == {"p": 3, "q": 1, "method": "sawtooth"}

    def test_lens_all(self):
        cmd = parse_args(["lens", "--p", "2", "--q", "1", "--all"])
        assert cmd.args["all"] and cmd.args["mode"] == "exact"
        assert parse_args(["lens", "--p", "65", "--q", "1", "--all"]).args["mode"] == "float"
        assert parse_args(["lens", "--p", "65", "--q", "1", "--all", "--exact"]).args["mode"] == "exact"

    def test_gcd_error(self):
        with pytest.raises(CommandError, match="gcd") as info:
            parse_args(["dedekind", "--p", "4", "--q", "2"])
        assert info.value.exit_code == 2

    @pytest.mark.parametrize(
        "argv,fragment",
        [
            (["frobnicate"], "invalid choice"),
            (["dedekind", "--p", "x", "--q", "1"], "malformed integer"),
            (["dedekind", "--q", "1"], "required"),
            (["lens", "--p", "3", "--q", "1"], "required"),
            (["lens", "--p", "3", "--q", "1", "--all", "--bogus"], "unrecognized"),
            (["alexander", "--poly", "0:1", "--functional", "theta"], "requires --i"),
            (["alexander", "--poly", "0:1", "--functional", "induce", "--d", "1"], "requires --d and --k"),
            (["lens", "--p", "3", "--q", "1", "--all", "--exact", "--mode", "float"], "conflicts"),
        ],
    )
    def test_usage_errors(self, argv, fragment):
        with pytest.raises(CommandError, match=fragment) as info:
            parse_args(argv)
        assert info.value.exit_code == 1

    def test_validation_errors(self):
        for argv in (["lens", "--p", "3", "--q", "1", "--alpha", "3"], ["alexander", "--poly", "2;1"], ["lens", "--p", "0", "--q", "1", "--all"]):
            with pytest.raises(CommandError) as info:
                parse_args(argv)
            assert info.value.exit_code == 2


def test_format_rational():
    assert format_rational(Fraction(1, 18)) == "1/18"
    assert format_rational(Fraction(-4, 18)) == "-2/9"
    assert format_rational(Fraction(0, 5)) == "0"
    assert format_rational(Fraction(1, 3), decimal=4) == "1/3 ~ 0.3333"
    assert format_rational(Fraction(-2, 3), decimal=2) == "-2/3 ~ -0.67"
    assert format_rational(Fraction(7, 2), decimal=0) == "7/2 ~ 4"


def test_dedekind_command(capsys):
    code, out, _ = run(capsys, "dedekind", "--p", "3", "--q", "1")
    assert code == 0 and "s: 1/18" in out
    code, out, _ = run(capsys, "dedekind", "--p", "5", "--q", "3", "--method", "cotangent", "--json")
    assert code == 0 and json.loads(out)["s"] == str(dedekind.dedekind_sum(3, 5))


def test_lens_commands(capsys):
    code, out, _ = run(capsys, "lens", "--p", "2", "--q", "1", "--all", "--json")
    data = json.loads(out)
    assert code == 0 and [e["ntheta"] for e in data["spectrum"]] == ["-1/8", "1/8"]
    assert data["total_check"] == "0"
    code, out, _ = run(capsys, "lens", "--p", "3", "--q", "1", "--alpha", "0", "--route", "closed_form")
    assert code == 0 and "ntheta: -1/4" in out
    code, out, _ = run(capsys, "lens", "--p", "70", "--q", "3", "--all", "--json")
    assert code == 0 and json.loads(out)["mode"] == "float"


def test_json_decimal(capsys):
    code, out, _ = run(capsys, "dedekind", "--p", "3", "--q", "1", "--json", "--decimal", "3")
    assert json.loads(out) == {"command": "dedekind", "p": 3, "q": 1, "method": "sawtooth", "s": "1/18", "s_decimal": "0.056"}


def test_alexander_commands(capsys):
    T = "2:1,0:-1,-2:1"
    assert "value: 1" in run(capsys, "alexander", "--poly", T, "--functional", "weight")[1]
    assert "value: 0" in run(capsys, "alexander", "--poly", T, "--functional", "theta", "--i", "1")[1]
    assert "value: 2" in run(capsys, "alexander", "--poly", T, "--functional", "gamma")[1]
    out = run(capsys, "alexander", "--poly", "0:1", "--functional", "induce", "--d", "2", "--k", "2", "--json")[1]
    assert json.loads(out)["value"] == "1:1/2,-1:1/2"
    code, out, _ = run(capsys, "alexander", "--poly", "2:1", "--functional", "validate", "--json")
    assert code == 0 and json.loads(out)["violation"] == "symmetry"
    code, _, err = run(capsys, "alexander", "--poly", "1:1,-1:1", "--functional", "weight")
    assert code == 2 and "integer exponents" in err


def test_chain_command(tmp_path, capsys):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps({"steps": [{"p": 5, "q": 2, "d": 1, "k": 1, "alexander": "0:1"}]}), encoding="utf-8")
    code, out, _ = run(capsys, "chain", str(path), "--json")
    data = json.loads(out)
    assert code == 0 and data["h1_order"] == 5 and data["lambda"] == str(-dedekind.dedekind_sum(2, 5))
    assert data["ntheta_total"] == data["lambda_prime"]
    path.write_text('{"steps": [{"p": 1, "q": 1, "d": 1, "k": 1, "weight": "1"}, {"p": 1, "q": 1, "d": 2, "k": 1, "weight": "0"}]}')
    code, _, err = run(capsys, "chain", str(path))
    assert code == 2 and "step 1" in err
    path.write_text("{not json")
    assert run(capsys, "chain", str(path))[0] == 2
    assert run(capsys, "chain", str(tmp_path / "missing.json"))[0] == 2


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and all(c["failures"] == 0 for c in data["checks"])


def test_selftest_detects_injected_fault(capsys, monkeypatch):
    real = dedekind.dedekind_sum
    monkeypatch.setattr(dedekind, "dedekind_sum", lambda q, p: real(q, p) + Fraction(1, 10**6))
    code, _, err = run(capsys, "selftest")
    assert code == 3 and "FAILED" in err


def test_contract_violation_exit_code(capsys, monkeypatch):
    def broken(L, mode="auto"):
        raise cli.lens.ContractViolation("forced")

    monkeypatch.setattr(cli.lens, "ntheta_spectrum", broken)
    assert run(capsys, "lens", "--p", "3", "--q", "1", "--all")[0] == 3


def test_deterministic_output(capsys):
    a = run(capsys, "lens", "--p", "9", "--q", "2", "--all")[1]
    b = run(capsys, "lens", "--p", "9", "--q", "2", "--all")[1]
    assert a == b
