import csv
import io
import json
import subprocess
import sys

import pytest

from rmtorus.classify import profile
from rmtorus.cli import main
from rmtorus.serialize import profile_from_json, profile_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_sqrt2(capsys):
    code, out, _ = run(capsys, "classify", "-g", "3,-4,-2,3", "-v", "3,1")
    assert code == 0
    assert "koszul: holds" in out and "dual g: 6,11,1,2" in out


def test_classify_golden(capsys):
    code, out, _ = run(capsys, "classify", "-g", "2,1,1,1", "-v", "0,1")
    assert "finitely_generated: fails" in out


def test_classify_line_bundle(capsys):
    code, out, _ = run(capsys, "classify", "-g", "1,4,0,1", "-v", "0,1", "--alpha", "trivial")
    assert "quadratic: holds" in out and "koszul: holds" in out


def test_classify_json_round_trip(capsys):
    code, out, _ = run(capsys, "--json", "classify", "-g", "3,-4,-2,3", "-v", "3,1")
    data = json.loads(out)
    assert data["koszul"] == "holds" and data["N"] == 6 and data["M"] == 14
    p = profile_from_json(data)
    assert profile_to_json(p) == {k: data[k] for k in profile_to_json(p)}
    assert data["dual"]["g"] == [["6", "11"], ["1", "2"]]


def test_classify_inadmissible(capsys):
    code, out, _ = run(capsys, "classify", "-g", "0,-1,1,0", "-v", "1,0")
    assert code == 0 and "admissible: no" in out


def test_validation_errors(capsys):
    for argv in (
        ["classify", "-g", "2,0,0,1", "-v", "0,1"],
        ["classify", "-g", "1,4,0,1", "-v", "0,2"],
        ["classify", "-g", "1,4,0,1", "-v", "0.5,1"],
        ["classify", "-g", "1,4,0", "-v", "0,1"],
        ["descent", "--alpha", "1", "--beta", "0", "--gamma", "-4", "-v", "1,0"],
        ["dual", "3", "1"] + ["-g", "2,1,1,1"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 2, argv
        assert "Traceback" not in err and err.startswith("error:")


def test_negative_vector_argument(capsys):
    code, out, _ = run(capsys, "classify", "-g", "2,-1,-3,2", "-v", "-1,0")
    assert code == 0 and "M: 3" in out


def test_descent(capsys):
    code, out, _ = run(capsys, "descent", "--alpha", "1", "--beta", "0", "--gamma", "-2", "-v", "1,0", "-n", "2")
    assert out.split("\n")[1:3] == ["(-1,-1)", "(-4,-3)"]
    code, out, _ = run(capsys, "--json", "descent", "--alpha", "1", "--beta", "0", "--gamma", "-2", "-v", "1,0", "-n", "2")
    assert json.loads(out)["chain"] == [["-1", "-1"], ["-4", "-3"]]


def test_construct(capsys):
    code, out, _ = run(capsys, "construct-rm", "--alpha", "1", "--beta", "0", "--gamma", "-2")
    assert code == 0 and "g: 3,-4,-2,3" in out
    code, out, _ = run(capsys, "construct-rm", "--alpha", "1", "--beta", "0", "--gamma", "-2", "--koszul-grade", "--json")
    data = json.loads(out)
    assert data["koszul_grade"] is True
    assert profile_from_json(data).M == data["M"]


def test_ample_seq(capsys):
    code, out, _ = run(capsys, "--json", "ample-seq", "--theta-alpha", "1", "--theta-beta", "0", "--theta-gamma", "-2", "--count", "3")
    items = json.loads(out)["items"]
    assert [(i["d"], i["r"]) for i in items] == [("9", "5"), ("11", "7"), ("17", "11")]


def test_survey(capsys):
    code, out, _ = run(capsys, "survey", "--N", "2:6", "--M", "1:10")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 50
    byNM = {(int(r["N"]), int(r["M"])): r for r in rows}
    assert (6, 14) not in byNM
    assert byNM[(4, 3)]["ample-class"] == "holds" and byNM[(4, 3)]["koszul"] == "fails"
    assert all(v == "holds" for k, v in byNM[(2, 4)].items() if k not in ("N", "M"))
    code, out, _ = run(capsys, "survey", "--N", "5:4", "--M", "1:3")
    assert out.strip() == "N,M,degree_one,quadratic,koszul,finitely_generated,ample-class"


def test_hilbert_dual_orbit(capsys):
    code, out, _ = run(capsys, "hilbert", "6", "14", "--horizon", "3")
    assert "1, 14, 84, 490" in out
    code, out, _ = run(capsys, "dual", "6", "14")
    assert "N = 8, M = 14" in out
    code, out, _ = run(capsys, "--json", "--horizon", "2", "orbit", "-g", "3,-4,-2,3", "-v", "3,1")
    assert json.loads(out)["chi"]["1,2"] == "112"


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "run", "--suite", "series")
    assert code == 0 and "series: ok" in out


def test_oracle_violation_exit_code(capsys, monkeypatch):
    import rmtorus.cli as cli
    from rmtorus.oracle import OracleReport, OracleResult

    monkeypatch.setattr(cli, "run_all", lambda *a, **k: OracleReport([OracleResult("series", False, "forced")]))
    code, out, _ = run(capsys, "oracle", "run", "--suite", "series")
    assert code == 3 and "VIOLATION" in out


def test_internal_error_exit_code(capsys, monkeypatch):
    import rmtorus.cli as cli

    def boom(*a, **k):
        raise AssertionError("invariant broken")

    monkeypatch.setattr(cli, "hilbert_series", boom)
    code, _, err = run(capsys, "hilbert", "2", "4")
    assert code == 1 and "internal error" in err


def test_argparse_errors_exit_2():
    proc = subprocess.run([sys.executable, "-m", "rmtorus", "classify", "-g", "1,1,0,1"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "rmtorus", "classify", "-g", "1,2,0,2", "-v", "0,1"], capture_output=True, text=True)
    assert proc.returncode == 2 and "Traceback" not in proc.stderr
