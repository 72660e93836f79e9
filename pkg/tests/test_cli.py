import json

import pytest

from indecpoly.cli import main
from indecpoly.fields import ZZ, finite_field
from indecpoly.parsing import ParseError, parse_poly
from indecpoly.mpoly import MPoly


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- parsing ---------------------------------------------------------------

def test_parse_chain_example_over_integers():
    F = parse_poly("y^2 + x^3 - 2", ZZ)
    assert F == MPoly(ZZ, 2, {(0, 2): 1, (3, 0): 1, (0, 0): -2})


def test_parse_over_field():
    F3 = finite_field(3)
    assert parse_poly("x*y", F3) == MPoly(F3, 2, {(1, 1): 1})
    assert parse_poly("2*x + 4", F3) == MPoly.from_dense(F3, [1, 2], 1)
    assert parse_poly("2*x + 4", F3, nvars=2) == MPoly(F3, 2, {(1, 0): 2, (0, 0): 1})


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x^^2", finite_field(3))
    assert "offset 2" in str(err.value)


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(ParseError):
        parse_poly("2x", finite_field(3))


def test_parse_numbered_variables():
    F3 = finite_field(3)
    f = parse_poly("x1*x2 + x3^2", F3)
    assert f.n == 3
    assert f == MPoly(F3, 3, {(1, 1, 0): 1, (0, 0, 2): 1})


def test_parse_generator_symbol_extension_field():
    F4 = finite_field(2, 2)
    f = parse_poly("t*x + 1", F4)
    assert f == MPoly(F4, 1, {(1,): F4.element(2), (0,): F4.one})
    assert parse_poly(f.format(), F4) == f


def test_round_trip_print_parse():
    F3 = finite_field(3)
    for text in ("x*y", "x^2 + 2*x*y + y^2 + 1", "2*x^3 + y"):
        f = parse_poly(text, F3)
        assert parse_poly(f.format(), F3) == f
    F = parse_poly("y^2 + x^3 - 2", ZZ)
    assert parse_poly(F.format(), ZZ) == F


# -- subcommands -----------------------------------------------------------

def test_cli_spectrum(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--field", "3", "x*y")
    assert code == 0
    payload = json.loads(out)
    assert payload["rho"] == 1
    assert payload["orbits"][0]["representative"] == "0"
    assert payload["orbits"][0]["multiplicity"] == 1
    assert payload["stein_holds"] is True


def test_cli_census_all_methods(capsys):
    code, out, _ = run_cli(capsys, "census", "--q", "2", "--n", "2", "--d", "4",
                           "--method", "all")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    methods = {rec.get("method") for rec in lines if "method" in rec}
    assert methods == {"closed", "recursion", "enumeration"}
    assert all(rec["N"] == "31744" for rec in lines if "N" in rec)
    assert lines[-1] == {"agreement": True}


def test_cli_modp(capsys):
    code, out, _ = run_cli(capsys, "modp", "y^2 + x^3", "--primes-to", "11")
    assert code == 0
    payload = json.loads(out)
    assert payload["good_primes"] == [5, 7, 11]
    assert payload["delta_red"] == "x^3 - l"


def test_cli_decompose_and_indec(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--field", "5", "x^4 + 2*x^2")
    assert code == 0
    payload = json.loads(out)
    assert payload["decompositions"] == [
        {"outer_degree": 2, "outer": "t^2 + 2*t", "inner": "x^2"}
    ]
    code, out, _ = run_cli(capsys, "indec", "--field", "2", "x*y")
    assert json.loads(out)["indecomposable"] is True


def test_cli_pthpower(capsys):
    code, out, _ = run_cli(capsys, "pthpower", "--field", "3", "x^3 + y^3")
    assert code == 0
    assert json.loads(out)["root"] == "x + y"


def test_cli_enumerate_and_jobs_determinism(capsys):
    code1, out1, _ = run_cli(capsys, "enumerate", "--q", "2", "--n", "2", "--d", "3")
    code2, out2, _ = run_cli(capsys, "enumerate", "--q", "2", "--n", "2", "--d", "3",
                             "--jobs", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["D"] == "24"


def test_cli_check_bounds_and_bd_lemma(capsys):
    code, out, _ = run_cli(capsys, "check-bounds", "--q", "2", "--d", "8")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True and payload["beta"] == "1/2"
    code, out, _ = run_cli(capsys, "bd-lemma", "--dmax", "1000")
    assert json.loads(out)["holds"] is True


def test_cli_exit_codes(capsys):
    code, _, err = run_cli(capsys, "spectrum", "--field", "3", "x^^2")
    assert code == 1 and "offset 2" in err
    code, _, err = run_cli(capsys, "spectrum", "--field", "3", "(x+y)^2")
    assert code == 1 and "spectrum" in err
    with pytest.raises(SystemExit) as exc:
        main(["unknown-command"])
    assert exc.value.code == 2


def test_cli_deterministic_output(capsys):
    a = run_cli(capsys, "spectrum", "--field", "3", "x*y")
    b = run_cli(capsys, "spectrum", "--field", "3", "x*y")
    assert a == b


def test_cli_text_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "text", "census", "--q", "2",
                           "--n", "2", "--d", "2", "--method", "recursion")
    assert code == 0
    assert "D: 12" in out


def test_cli_guard_env(capsys, monkeypatch):
    monkeypatch.setenv("SPEC_GUARD", "10")
    code, _, err = run_cli(capsys, "enumerate", "--q", "2", "--n", "2", "--d", "3")
    assert code == 1
    assert "guard" in err


def test_report_polynomials_reparse(capsys):
    _, out, _ = run_cli(capsys, "spectrum", "--field", "3", "x*y")
    payload = json.loads(out)
    F3 = finite_field(3)
    assert parse_poly(payload["poly"], F3) == MPoly(F3, 2, {(1, 1): 1})
    assert parse_poly(payload["s_poly"], F3, nvars=1) == MPoly.from_dense(F3, [0, 1], 1)
