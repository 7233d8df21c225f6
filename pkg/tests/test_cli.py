from __future__ import annotations

import json
import os
import shutil
import subprocess
import sys

import pytest

from qtorus.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def cfg2(tmp_path):
    p = tmp_path / "n2.txt"
    p.write_text("n = 2\ntheta[1,2] = 1/3\ndegree_bound = 1\n")
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_relations(cfg2, capsys):
    code, out, _ = run(["verify", "relations", "--config", cfg2], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["summary"]["failed"] == 0


def test_verify_all_classical(tmp_path, capsys):
    p = tmp_path / "zero.txt"
    p.write_text("n = 2\ndegree_bound = 1\n")
    code, out, _ = run(["verify", "all", "--config", str(p)], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["notes"]["relations.commutative"] is True


def test_report_is_deterministic(cfg2, tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "hopf", "--config", cfg2, "--out", str(a)]) == 0
    assert main(["verify", "hopf", "--config", cfg2, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_classify(cfg2, capsys):
    code, out, _ = run(["classify", "--config", cfg2, "--bound", "1", "--coreps"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["notes"]["count"] == doc["notes"]["classical_count"] == 9
    dims = sorted(row["dim"] for row in doc["notes"]["table"])
    assert dims == [1] * 6 + [2] * 3
    assert len(doc["notes"]["coreps"]) == 9


def test_classify_n3_table(tmp_path, capsys):
    p = tmp_path / "n3.txt"
    p.write_text("n = 3\ntheta[1,2] = 1/2\n")
    code, out, _ = run(["classify", "--config", str(p), "--bound", "1"], capsys)
    doc = json.loads(out)
    assert code == 0
    row = next(r for r in doc["notes"]["table"] if r["orbit"] == [1, 1, 0] and r["irrep"] == ["triv", "triv"])
    assert row["stabilizer_order"] == 2 and row["dim"] == 3


def test_classify_user_table(tmp_path, capsys):
    shutil.copy(os.path.join(DATA, "s4_irreps.json"), tmp_path / "s4.json")
    p = tmp_path / "n4.txt"
    p.write_text("n = 4\ndegree_bound = 0\nirrep_table = s4.json\n")
    code, out, _ = run(["classify", "--config", str(p)], capsys)
    assert code == 0 and json.loads(out)["notes"]["count"] == 5
    q = tmp_path / "n4bare.txt"
    q.write_text("n = 4\ndegree_bound = 0\n")
    code, _, err = run(["classify", "--config", str(q)], capsys)
    assert code == 2 and "irrep_table" in err


def test_eval(cfg2, capsys):
    code, out, _ = run(["eval", "x1 * x1*", "--config", cfg2], capsys)
    assert code == 0 and out.strip() == "x^[0,0]"
    code, out, _ = run(["eval", "u[1,2]", "--config", cfg2], capsys)
    assert out.strip() == "m[sigma=[2,1], r=[1,0]]"
    code, _, err = run(["eval", "x1 +", "--config", cfg2], capsys)
    assert code == 2 and "position 4" in err


def test_model(tmp_path, capsys):
    trip = tmp_path / "u.txt"
    code, out, _ = run(["model", "--M", "3", "--triplets", str(trip)], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["notes"]["dimension"] == 6
    assert trip.read_text().startswith("# U[1,1]")
    code, _, err = run(["model", "--M", "4"], capsys)
    assert code == 2 and "multiple" in err


def test_config_errors(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("n = 2\ntheta[1,2] = 0.25\n")
    code, _, err = run(["verify", "relations", "--config", str(p)], capsys)
    assert code == 2 and "rational" in err
    code, _, _ = run(["verify", "relations", "--config", str(tmp_path / "nope.txt")], capsys)
    assert code == 2


def test_console_script(cfg2):
    exe = shutil.which("qtorus")
    cmd = [exe] if exe else [sys.executable, "-m", "qtorus.cli"]
    proc = subprocess.run(cmd + ["verify", "cocycles", "--config", cfg2], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["passed"]
