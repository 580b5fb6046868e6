"""Command-line contract: exit codes, determinism, formats, work caps."""

import json

import pytest

from guinand.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# ---- exit-status contract ----------------------------------------------------

def test_verify_passing(capsys):
    code, out, _ = run(["verify", "--k", "5", "--phi", "t*exp(-pi*t^2/2)",
                        "--nmax", "400", "--tol", "1e-10"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["identity"] == "k5"
    assert report["rel_residual"] <= 1e-10
    assert report["truncation"] == {"N": 400}


def test_verify_residual_failure_exits_2(capsys):
    # an impossible tolerance forces the residual branch
    code, out, _ = run(["verify", "--k", "5", "--phi", "t*exp(-pi*t^2/2)",
                        "--nmax", "400", "--tol", "1e-18"], capsys)
    assert code == 2
    assert json.loads(out)["rel_residual"] > 1e-18


def test_parse_error_exits_1(capsys):
    code, _, err = run(["verify", "--k", "5", "--phi", "t*exp(pi*t^2)"], capsys)
    assert code == 1
    assert "parse error at byte" in err


def test_unknown_flag_exits_1(capsys):
    code, _, err = run(["verify", "--k", "5", "--phi", "t*exp(-pi*t^2)",
                        "--frobnicate"], capsys)
    assert code == 1
    assert "error" in err.lower()


def test_unknown_subcommand_exits_1(capsys):
    code, _, _ = run(["shrubbery"], capsys)
    assert code == 1


def test_bad_k_exits_1(capsys):
    code, _, err = run(["verify", "--k", "4", "--phi", "t*exp(-pi*t^2)"], capsys)
    assert code == 1
    assert "odd" in err


@pytest.mark.parametrize("argv", [
    ["rk", "--k", "0", "--nmax", "5"],
    ["coeffs", "--k", "2"],
    ["sphere-ft", "--k", "3"],                      # missing --t
    ["sphere-ft", "--k", "3", "--t", "1", "--t-grid", "0:1:0.5"],
    ["sphere-ft", "--k", "3", "--t", "1", "--methods", "wat"],
    ["verify-shifted", "--k", "3", "--eta", "x,y,z", "--xi", "0,0,1/2",
     "--phi", "t*exp(-pi*t^2)"],
])
def test_malformed_inputs_exit_1(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 1


# ---- outputs -----------------------------------------------------------------

def test_rk_csv(capsys):
    code, out, _ = run(["rk", "--k", "3", "--nmax", "4", "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines() == ["n,r_k", "0,1", "1,6", "2,12", "3,8", "4,6"]


def test_coeffs_exact_output(capsys):
    code, out, _ = run(["coeffs", "--k", "7", "--format", "exact"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "alpha(7) = 1/60 * pi^-2"
    assert "beta(0,7) = 3/4 * pi^-2" in lines
    assert "beta(2,7) = 1/4 * pi^-2" in lines


def test_coeffs_json_output(capsys):
    code, out, _ = run(["coeffs", "--k", "5", "--format", "json"], capsys)
    obj = json.loads(out)
    assert obj["alpha"] == {"num": -1, "den": 6, "pi_power": -1}
    assert obj["beta"][1] == {"j": 1, "num": -1, "den": 2, "pi_power": -1}


def test_sphere_ft_four_methods(capsys):
    code, out, _ = run(["sphere-ft", "--k", "9", "--t", "2.0",
                        "--methods", "closed,bessel,recurrence,besselpoly"], capsys)
    assert code == 0
    rows = json.loads(out)
    values = [r["value"] for r in rows]
    assert len(values) == 4
    spread = max(values) - min(values)
    assert spread <= 1e-12 * max(abs(v) for v in values)


def test_sphere_ft_grid_csv(capsys):
    code, out, _ = run(["sphere-ft", "--k", "3", "--t-grid", "0.5:1.5:0.5",
                        "--methods", "closed", "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,t,method,value"
    assert len(lines) == 4


def test_radial_ft_json(capsys):
    code, out, _ = run(["radial-ft", "--k", "3", "--f", "exp(-pi*t^2)",
                        "--t", "1.0", "--methods", "closed,quadrature"], capsys)
    assert code == 0
    rows = json.loads(out)
    assert {r["method"] for r in rows} == {"closed", "quadrature"}
    a, b = (complex(*r["value"]) for r in rows)
    assert abs(a - b) < 1e-10


def test_duality_subcommand(capsys):
    code, out, _ = run(["duality", "--k", "7", "--phi", "t^3*exp(-pi*t^2)",
                        "--nmax", "400", "--tol", "1e-9"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["rel_diff"] <= 1e-9


def test_verify_shifted_subcommand(capsys):
    code, out, _ = run(["verify-shifted", "--k", "3", "--eta", "1/2,0,0",
                        "--xi", "0,1/3,0", "--phi", "t*exp(-pi*t^2)",
                        "--r-time", "5", "--r-freq", "5", "--tol", "1e-8"], capsys)
    assert code == 0
    assert json.loads(out)["identity"] == "shifted"


def test_odd_normalization_notice(capsys):
    code, out, err = run(["verify", "--k", "3", "--phi", "(1+t)*exp(-pi*t^2)",
                          "--nmax", "100"], capsys)
    assert code == 0
    assert "odd part" in err
    # odd part of (1+t) e^{-pi t^2} is 2 t e^{-pi t^2}: identity still holds
    assert json.loads(out)["rel_residual"] <= 1e-10


def test_workcap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("GUINAND_WORKCAP", "10")
    code, _, err = run(["rk", "--k", "3", "--nmax", "100"], capsys)
    assert code == 1
    assert "cap" in err


def test_json_determinism(tmp_path, capsys):
    argv = ["verify", "--k", "5", "--phi", "t*exp(-pi*t^2/2)", "--nmax", "200"]
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(argv + ["--output", str(p1)]) == 0
    assert main(argv + ["--output", str(p2)]) == 0
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()


def test_float_serialization_17g(capsys):
    code, out, _ = run(["verify", "--k", "3", "--phi", "t*exp(-pi*t^2/2)",
                        "--nmax", "400"], capsys)
    report = json.loads(out)
    assert abs(report["lhs"][0] - 2.8602371906953891) < 1e-13
    # round-trip: 17 significant digits preserve the double exactly
    assert report["lhs"][0] == float(repr(report["lhs"][0]))


def test_verify_csv_shell_table(capsys):
    code, out, _ = run(["verify", "--k", "3", "--phi", "t*exp(-pi*t^2)",
                        "--nmax", "10", "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("n,r_k,lhs_term_re")
    assert len(lines) > 5
