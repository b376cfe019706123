import json
import subprocess
import sys

import pytest

from parastat.cli import main
from parastat.grading import parse_form, preset


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_form(capsys):
    code, out, _ = run(capsys, "form", "LS")
    assert code == 0 and parse_form(out) == preset("LS")


def test_algebra_list(capsys):
    code, out, _ = run(capsys, "algebra", "list")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 12
    assert lines[0].split()[0] == "fLA_min" and "11:f3+" in lines[0]
    assert "11:" not in lines[-1]


def test_algebra_check(capsys):
    code, out, _ = run(capsys, "algebra", "check", "fCLS_min")
    assert code == 0 and "jacobi: ok" in out
    with pytest.raises(SystemExit):
        main(["algebra", "check", "fLA_sub"])


def test_spectrum_and_hilbert(capsys):
    code, out, _ = run(capsys, "spectrum", "LS_min", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 8 and doc["spectrum"]["l+1"] == 2
    code, out, _ = run(capsys, "hilbert", "fLS_sub")
    assert out.splitlines()[-1] == "E=l+1 : 0 0 0 1 0 0 -1 0 0 1 0 0 1 0 0 0"


def test_discriminate(capsys):
    code, out, _ = run(capsys, "discriminate", "LS_min/CLS_min", "--level", "lambda+2")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "Discriminable"
    assert doc["p_plus"] == [["1/2", "1/2"], ["1/2", "1/2"]]
    assert doc["p_minus"] == [["1/2", "-1/2"], ["-1/2", "1/2"]]
    assert doc["support"] == ["w12", "w15"]
    code, out, _ = run(capsys, "discriminate", "pCLS_sub<->fLS_sub", "--level", "l+1")
    doc = json.loads(out)
    assert doc["verdict"] == "Indistinguishable" and doc["overlap"] == "1/2"
    code, _, err = run(capsys, "discriminate", "LS_min/CLS_min", "--level", "1")
    assert code == 2 and "share" in err


def test_gedanken_run(capsys):
    argv = ["gedanken", "run", "--pair", "LA_min/CLA_min", "--seed", "11", "--trials", "2",
            "--format", "json"]
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["correct"] is True
    assert run(capsys, *argv)[1] == out


def test_gedanken_refuses_degenerate_lambda(capsys):
    code, out, err = run(capsys, "gedanken", "run", "--pair", "LS_min/CLS_min", "--seed", "1",
                         "--lambda", "2")
    assert code == 2 and out == ""
    assert "coincide" in err


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "parastat", "form", "CLA", "--classify"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.rstrip().endswith("ColorLieAlgebra")
