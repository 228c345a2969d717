import csv
import io
import json
import subprocess
import sys

import pytest

from thompsonf import __version__
from thompsonf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    data = json.loads(out)
    assert data["tool"] == "thompsonf" and data["version"] == __version__
    assert data["schema"] == 1 and data["exact"] is True
    assert "wallTime" not in data
    return data["result"]


def test_word_problem(capsys):
    r = run_json(capsys, "wp", "x0^-2 x1 x0^2 x1^-1 x0^-1 x1^-1 x0 x1", "--algorithm", "both")
    assert r["trivial"] and r["agree"]
    assert r["cyclic"]["iterations"] == 2
    assert [s["renamedPositions"] for s in r["cyclic"]["trace"]] == [[5, 9], [2, 7], []]
    r = run_json(capsys, "wp", "x0 x1", "--algorithm", "cyclic")
    assert not r["trivial"]


def test_random_word_batch(capsys):
    r = run_json(capsys, "wp", "--random", "300", "--length", "12", "--seed", "4")
    assert r["mismatches"] == 0 and r["words"] == 300


def test_normal_form(capsys):
    r = run_json(capsys, "nf", "x1 x0")
    assert r["normalForm"] == "x0 x2" and r["positive"] == [0, 2]


def test_bb_rows_and_csv(capsys):
    r = run_json(capsys, "bb", "--n", "2", "--k", "1")
    assert r["rows"][0]["size"] == 3 and r["rows"][0]["density"] == "4/3"
    code, out, _ = run(capsys, "bb", "--n", "2-4", "--k", "0-1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 6
    assert list(rows[0]) == ["n", "k", "genset", "size", "density", "cheeger",
                             "specialCount", "prunedDensity"]
    r = run_json(capsys, "bb", "--n", "8", "--k", "1", "--mode", "prune")
    assert r["rows"][0]["specialCount"] == 1 and r["rows"][0]["prunedDensity"]
    r = run_json(capsys, "bb", "--n", "9", "--k", "1", "--witnesses", "3", "--fractions")
    assert r["special"]["count"] == 2 and len(r["special"]["witnesses"]) == 2
    assert set(r["acceptance"]) == {"x0", "x0^-1", "x1", "x1^-1"}


def test_enumeration_mode_matches_dp(capsys):
    a = run_json(capsys, "bb", "--n", "7", "--k", "2", "--mode", "enumerate", "--genset", "x0,x1,x2")
    b = run_json(capsys, "bb", "--n", "7", "--k", "2", "--genset", "x0,x1,x2")
    assert a["rows"] == b["rows"]


def test_cayley_and_evac(capsys, tmp_path):
    snap = tmp_path / "ball.json"
    r = run_json(capsys, "cayley", "--gens", "x0,x1", "--ball", "1", "--export", str(snap))
    assert r["stats"]["size"] == 5
    r = run_json(capsys, "evac", str(snap), "--C", "1")
    assert r["feasible"] and not r["usesInversePair"]
    elems = tmp_path / "y.txt"
    elems.write_text("1\nx0\n")
    r = run_json(capsys, "cayley", "--elements", str(elems), "--doubling", "2")
    assert r["stats"]["density"] == "1" and r["stats"]["cheeger"] == "3"
    assert r["doubling"]["AY"] == 4 and not r["doubling"]["below"]


def test_ring_commands(capsys):
    assert run_json(capsys, "ring", "verify", "--preset", "012", "--alpha", "2", "--beta", "3")["holds"]
    assert not run_json(capsys, "ring", "verify", "--preset", "one-minus")["holds"]
    r = run_json(capsys, "ring", "solve", "--coef", "x0", "--coef", "x1", "--D", "1")
    assert r["kernelDim"] == 1
    r = run_json(capsys, "ring", "solve", "--coef", "x0", "--coef", "x1", "--D", "1", "--field", "GF(101)")
    assert r["kernelDim"] == 1
    r = run_json(capsys, "ring", "verify", "--a", "1 - x0", "--u", "1 + x0 - x1 - x3 - x0 x3 + x1 x3",
                 "--b", "1 - x1", "--v", "1 - x3 - x0^2 + x0 x1")
    assert r["holds"]


def test_other_commands(capsys):
    rows = run_json(capsys, "catalan", "10")["rows"]
    assert rows[-1]["catalan"] == 16796 and rows[-1]["forests"] == 16796
    assert [r["triples"] for r in rows[2:6]] == [1, 3, 9, 28]
    r = run_json(capsys, "gamma", "4")
    assert r["vertices"] == 3
    rows = run_json(capsys, "phi", "0-2")["rows"]
    assert rows[2]["phi"] == [0, 1, 1, 2, 1]
    assert rows[0]["xiLow"] == rows[0]["xiHigh"] == "1"


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "bb", "--n", "9", "--k", "3", "--mode", "enumerate", "--cap", "10")[0] == 2
    assert run(capsys, "evac", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "wp", "x0", "--format", "csv")[0] == 1
    assert run(capsys, "wp", "x9q")[0] == 1
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 1


def test_timing_is_opt_in(capsys):
    code, out, _ = run(capsys, "catalan", "4", "--timing")
    assert "wallTime" in json.loads(out)


def test_output_is_deterministic(capsys):
    argv = ["bb", "--n", "3-9", "--k", "1-2", "--mode", "prune"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_console_script():
    p = subprocess.run([sys.executable, "-m", "thompsonf.cli", "catalan", "3"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["command"] == "catalan"
