"""Command-line interface: output formats, exit codes, determinism.

Most cases drive cli.main in-process (fast, still via real argv parsing); a
couple go through an actual subprocess to cover the module entry point.
"""

import csv
import io
import json
import subprocess
import sys

import pytest

from polybernoulli import cli
from polybernoulli.zeta import hurwitz_zeta

from mpmath import mp


def run_main(argv, capsys, env_precision=None, monkeypatch=None):
    if env_precision is not None:
        monkeypatch.setenv("POLYBERNOULLI_PRECISION", env_precision)
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_subprocess(argv):
    return subprocess.run(
        [sys.executable, "-m", "polybernoulli.cli", *argv],
        capture_output=True,
        text=True,
    )


# ------------------------------------------------------------------- tables


def test_pb_neg_table_contains_known_entries(capsys):
    code, out, _ = run_main(
        ["table", "--kind", "pb-neg", "--n", "0:3", "--k", "0:3", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    cells = {(e["n"], e["k"]): e["value"] for e in data["entries"]}
    assert cells[(1, 1)] == "2"
    assert cells[(2, 2)] == "14"
    assert cells[(0, 0)] == "1"
    assert data["params"] == {"alpha": "1", "beta": "0"}


def test_gpb_poly_table_classical_first_rows(capsys):
    code, out, _ = run_main(
        ["table", "--kind", "gpb-poly", "--n", "0:1", "--k", "1",
         "--alpha", "1", "--beta", "0", "--format", "json"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    coeffs = {e["n"]: e["coeffs"] for e in data["entries"]}
    assert coeffs[0] == ["1"]
    assert coeffs[1] == ["1/2", "1"]


def test_table_csv_mirrors_json(capsys):
    args = ["table", "--kind", "pb-number", "--n", "0:3", "--k=-2:2"]
    _, json_out, _ = run_main(args + ["--format", "json"], capsys)
    _, csv_out, _ = run_main(args + ["--format", "csv"], capsys)
    data = json.loads(json_out)
    rows = list(csv.reader(io.StringIO(csv_out)))
    assert rows[0] == ["n", "k", "value"]
    got = [(int(r[0]), int(r[1]), r[2]) for r in rows[1:]]
    want = [(e["n"], e["k"], e["value"]) for e in data["entries"]]
    assert got == want


def test_sym_poly_table_terms_cell(capsys):
    code, out, _ = run_main(
        ["table", "--kind", "sym-poly", "--n", "1", "--m", "1",
         "--alpha", "1", "--beta", "0", "--format", "csv"],
        capsys,
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "m", "terms"]
    # C_1^(-1)(x, y) at classical parameters: every term i:j:coeff parses
    cell = rows[1][2]
    for part in cell.split(";"):
        i, j, c = part.split(":")
        int(i), int(j)
        assert c


# --------------------------------------------------------------------- eval


def test_eval_gpb_poly_exact(capsys):
    code, out, _ = run_main(
        ["eval", "--kind", "gpb-poly", "--n", "1", "--k", "1",
         "--alpha", "1", "--beta", "0", "--x", "0"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["mode"] == "exact"
    assert data["value"] == "1/2"


def test_eval_zeta_negative_s_is_exact(capsys):
    # s = -2 truncates: value is B_2^(1)(-1) = 1 - 1 + 1/6
    code, out, _ = run_main(
        ["eval", "--kind", "zeta", "--k", "1", "--s=-2", "--x", "1",
         "--alpha", "1", "--beta", "0"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["mode"] == "exact"
    assert data["value"] == "1/6"


def test_eval_zeta_numeric_series(capsys):
    code, out, _ = run_main(
        ["eval", "--kind", "zeta", "--k", "2", "--s", "3/2", "--x", "30",
         "--alpha", "1", "--beta", "1/2", "--precision", "80"],
        capsys,
    )
    assert code == 0
    data = json.loads(out)
    assert data["mode"] == "numeric"
    assert data["route"] == "series"
    assert data["terms"] > 0
    assert float(data["error_bound"]) < 1e-20


def test_eval_zeta_quadrature_route_text(capsys):
    code, out, _ = run_main(
        ["eval", "--kind", "zeta", "--k", "1", "--s", "3", "--x", "2",
         "--alpha", "1/2", "--beta", "1/2", "--precision", "64",
         "--route", "quadrature", "--format", "text"],
        capsys,
    )
    assert code == 0
    assert out.startswith("value=")
    assert "route=quadrature" in out
    # cross-check the printed value against the Hurwitz chain: 3 zeta(4, 5/2)
    printed = out.split()[0].split("=", 1)[1]
    hz, _ = hurwitz_zeta(4, "5/2", 96)
    with mp.workprec(120):
        assert abs(mp.mpf(printed) - 3 * hz) < mp.mpf("1e-15")


def test_eval_honors_precision_env(capsys, monkeypatch):
    code, out, _ = run_main(
        ["eval", "--kind", "zeta", "--k", "2", "--s", "2", "--x", "40",
         "--alpha", "1", "--beta", "1"],
        capsys,
        env_precision="96",
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert json.loads(out)["precision"] == 96


def test_eval_rejects_bad_env(capsys, monkeypatch):
    code, _, err = run_main(
        ["eval", "--kind", "zeta", "--k", "2", "--s", "2", "--x", "40",
         "--alpha", "1", "--beta", "1"],
        capsys,
        env_precision="not-a-number",
        monkeypatch=monkeypatch,
    )
    assert code == 2
    assert "error:" in err


# --------------------------------------------------------------- exit codes


def test_exit_code_empty_range(capsys):
    code, _, err = run_main(
        ["table", "--kind", "pb-number", "--n", "5:1", "--k", "1"], capsys
    )
    assert code == 3
    assert "empty" in err


def test_exit_code_oversize(capsys):
    code, _, _ = run_main(
        ["table", "--kind", "pb-number", "--n", "0:99", "--k", "1"], capsys
    )
    assert code == 3


def test_exit_code_bad_request(capsys):
    code, _, _ = run_main(["verify", "--suite", "no-such-suite"], capsys)
    assert code == 2
    code, _, _ = run_main(
        ["eval", "--kind", "zeta", "--k", "0", "--s", "2", "--x", "10"], capsys
    )
    assert code == 2


def test_exit_code_non_convergence(capsys):
    code, _, err = run_main(
        ["eval", "--kind", "zeta", "--k", "1", "--s", "2", "--x", "50",
         "--alpha", "1", "--beta", "1", "--max-terms", "3"],
        capsys,
    )
    assert code == 4
    assert "error:" in err


def test_argparse_failure_maps_to_bad_request(capsys):
    code, _, _ = run_main(["table", "--kind", "pb-number", "--n", "zero"], capsys)
    assert code == 2


# ------------------------------------------------------------------- verify


def test_verify_single_suite_human(capsys):
    code, out, err = run_main(
        ["verify", "--suite", "exact-arith", "--seed", "5"], capsys
    )
    assert code == 0
    assert "suite exact-arith" in out
    assert "all checks passed (seed 5)" in out
    assert "wall time" in err  # timing must stay off stdout


def test_verify_json_deterministic(capsys):
    a = cli.render_to_string(["verify", "--suite", "lonesum", "--seed", "9", "--format", "json"])
    b = cli.render_to_string(["verify", "--suite", "lonesum", "--seed", "9", "--format", "json"])
    assert a == b
    assert json.loads(a)["ok"] is True


# ------------------------------------------------------------ entry points


def test_subprocess_entry_point():
    proc = run_subprocess(
        ["table", "--kind", "pb-neg", "--n", "1:2", "--k", "1:2", "--format", "csv"]
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "n,k,value"
    assert "1,1,2" in proc.stdout
    assert "2,2,14" in proc.stdout


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_main(
        ["table", "--kind", "pb-number", "--n", "0:2", "--k", "1",
         "--out", str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""  # the report went to the file instead
    assert json.loads(target.read_text())["kind"] == "pb-number"
