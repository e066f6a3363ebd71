import csv
import io
import json
import math
import subprocess
import sys

import pytest

from refined_bohr import cli, radii, schur
from refined_bohr.errors import NoRootInUnitInterval


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def as_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def sig17(text):
    digits = text.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
    return len(digits) <= 17


def test_radius_examples(capsys):
    code, rec, err = as_json(capsys, "radius", "--theorem", "thm7-j")
    assert code == 0 and abs(rec["radius"] - 0.385795) < 1e-6
    assert err.startswith("# refined-bohr radius")
    _, rec, _ = as_json(capsys, "radius", "--theorem", "thm1-r", "--n", "1")
    assert rec["radius"] == pytest.approx(0.23606797749979, abs=1e-13)
    _, rec, _ = as_json(capsys, "radius", "--theorem", "thm3", "--p", "2", "--m", "0", "--a0", "0.5")
    assert rec["radius"] == pytest.approx(0.4**0.5, abs=1e-12)
    assert {"residual", "root_count"} <= set(rec)


def test_radius_csv(capsys):
    code, out, _ = run(capsys, "radius", "--theorem", "thm1-rsq", "--n", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["radius", "residual", "root_count"]
    assert float(rows[1][0]) == radii.radius("thm1-rsq", N=2)


@pytest.mark.parametrize("argv", [
    ["radius", "--theorem", "thm1-r"],
    ["radius", "--theorem", "nope"],
    ["radius", "--theorem", "thm2", "--a0", "1.5"],
    ["verify", "--theorem", "thmb", "--trials", "0"],
    ["sharpness", "--theorem", "thmd", "--p", "2", "--m", "1"],
    ["table", "--sweep", "thm1-r", "--param", "n", "--from", "1", "--to", "3", "--step", "0.5"],
    ["evaluate", "--theorem", "thmb", "--recipe", "moebius(a=oops", "--r", "0.2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_USAGE and "error" in err


def test_argparse_errors_exit_2():
    for argv in (["radius"], ["sample", "--seed", "1", "--profile", "bogus"], ["nosuch"]):
        with pytest.raises(SystemExit) as err:
            cli.main(argv)
        assert err.value.code == 2


def test_solver_error_exit_3(capsys, monkeypatch):
    def boom(q):
        raise NoRootInUnitInterval("no root")

    monkeypatch.setattr(cli.radii, "solve", boom)
    code, _, err = run(capsys, "radius", "--theorem", "thm1-r", "--n", "2")
    assert code == cli.EXIT_SOLVER and "solver error" in err


def test_verify_examples(capsys):
    code, rep, _ = as_json(capsys, "verify", "--theorem", "thmb-modulus", "--trials", "1000", "--seed", "42")
    assert code == 0 and rep["failures"] == [] and rep["trials"] == 1000
    code, rep, _ = as_json(capsys, "verify", "--theorem", "thm5", "--trials", "200", "--seed", "9")
    assert code == 0 and "a0_filter" in rep["params"]
    code, rep, _ = as_json(capsys, "verify", "--theorem", "lemmas", "--trials", "1000", "--seed", "42")
    assert code == 0 and rep["theorem"] == "lemmas"


def test_verify_replay_failure_exit_1(capsys):
    recipe = schur.moebius(0.7, "-").text()
    code, rep, _ = as_json(capsys, "verify", "--theorem", "thm5", "--trials", "1", "--replay", recipe, "--r",
                           str(1 / 3))
    assert code == 1 and rep["failures"][0]["recipe"] == recipe


def test_json_round_trip_idempotent(capsys):
    _, out, _ = run(capsys, "verify", "--theorem", "thm2", "--trials", "30", "--seed", "3")
    once = json.dumps(json.loads(out), indent=2, allow_nan=False)
    assert once == out.rstrip("\n")
    assert json.dumps(json.loads(once), indent=2) == once


def test_sharpness_examples(capsys):
    code, cert, _ = as_json(capsys, "sharpness", "--theorem", "thm2")
    assert code == 0 and any(w["a"] == 0.999 for w in cert["witnesses"])
    code, cert, _ = as_json(capsys, "sharpness", "--theorem", "thm6-g")
    assert code == 0 and cert["window"]["r"] == 0.21 and cert["window"]["a"] == 0.99
    assert cert["window"]["value_lower"] > 1
    code, cert, _ = as_json(capsys, "sharpness", "--theorem", "thm4-lambda-first")
    w = cert["witnesses"][0]
    assert code == 0 and w["a"] == 0.999 and w["lambda"] == pytest.approx(8 / 9 * 1.01)


def test_sharpness_no_witness_exit_1(capsys):
    code, rec, _ = as_json(capsys, "sharpness", "--theorem", "thm1-r", "--n", "1", "--a-grid", "0", "--eps-grid",
                           "1e-9")
    assert code == 1 and rec["valid"] is False and rec["scanned"]


def table(capsys, *argv):
    code, out, _ = run(capsys, "table", *argv)
    assert code == 0
    return list(csv.DictReader(io.StringIO(out))), out


def test_table_thm2_sq(capsys):
    rows, out = table(capsys, "--sweep", "thm2-sq", "--param", "a0", "--from", "0", "--to", "0.9", "--step", "0.1")
    assert out.splitlines()[0] == "param,radius,residual,one_third,inv_two_plus_a0"
    assert len(rows) == 10
    for row in rows:
        assert float(row["one_third"]) < float(row["radius"]) < float(row["inv_two_plus_a0"])
        assert sig17(row["radius"])


def test_table_thm1_increasing(capsys):
    rows, _ = table(capsys, "--sweep", "thm1-r", "--param", "n", "--from", "1", "--to", "10", "--step", "1")
    vals = [float(r["radius"]) for r in rows]
    assert len(vals) == 10 and all(b > a for a, b in zip(vals, vals[1:]))


def test_table_cor2a(capsys):
    rows, _ = table(capsys, "--sweep", "cor2a", "--param", "a0", "--from", "0", "--to", "0.99", "--step", "0.01",
                    "--p", "1")
    assert len(rows) == 100
    assert min(float(r["radius"]) for r in rows) >= 0.6 - 1e-12


def test_table_json(capsys):
    code, rows, _ = as_json(capsys, "table", "--sweep", "thm3", "--param", "p", "--from", "1", "--to", "3",
                            "--step", "1", "--m", "1", "--a0", "0.4", "--format", "json")
    assert [r["param"] for r in rows] == [1, 2, 3]
    assert all(r["radius"] >= r["cor1a_bound"] - 1e-12 for r in rows)


def test_sample_determinism_and_replay(capsys):
    _, a, _ = run(capsys, "sample", "--seed", "1", "--profile", "blaschke")
    schur.sample.cache_clear()
    _, b, _ = run(capsys, "sample", "--seed", "1", "--profile", "blaschke")
    assert a == b
    rec = json.loads(a)
    assert len(rec["coeffs"]) == 16
    c0, c1 = (complex(*rec["coeffs"][k]) for k in (0, 1))
    assert abs(c1) <= 1 - abs(c0) ** 2 + 1e-12
    code, rep, _ = as_json(capsys, "verify", "--theorem", "thmb", "--trials", "3", "--replay", rec["recipe"])
    assert code == 0 and rep["params"]["functions"] == 1


def test_sample_convex_alias(capsys):
    _, rec, _ = as_json(capsys, "sample", "--seed", "4", "--profile", "convex")
    assert rec["profile"] == "convex-combo"


def test_evaluate(capsys):
    recipe = schur.moebius(0.5, "+").text()
    code, rec, _ = as_json(capsys, "evaluate", "--theorem", "thmb", "--recipe", recipe, "--r", "0.4")
    assert code == 0 and rec["upper"] == pytest.approx(1.0, abs=1e-12)
    assert rec["radius"] == pytest.approx(0.4)


def test_env_order(capsys, monkeypatch):
    monkeypatch.setenv("BOHR_DEFAULT_ORDER", "64")
    _, rec, _ = as_json(capsys, "sample", "--seed", "2")
    assert rec["order"] == 64
    monkeypatch.setenv("BOHR_DEFAULT_ORDER", "-3")
    code, _, _ = run(capsys, "sample", "--seed", "2")
    assert code == cli.EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "refined_bohr", "radius", "--theorem", "thmf"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["radius"] == pytest.approx((math.sqrt(17) - 3) / 4, abs=1e-12)
