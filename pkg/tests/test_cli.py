import json
import subprocess
import sys

import pytest

from foxpoly import foxcalc
from foxpoly.cli import main
from conftest import EXAMPLE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_example(capsys):
    code, out, _ = run(capsys, "analyze", EXAMPLE, "--char", "0,1")
    assert code == 0
    report = json.loads(out)
    assert report["classification"] == {"kind": "nice", "proper_power": None, "torsion_free": True}
    assert report["abelianization"]["b1"] == 2
    assert report["polytope"]["single"] == [[0, 0], [0, 1]]
    assert report["thickness"] == [{"character": [0, 1], "induced": [0, 1], "thickness": 1}]
    assert report["splitting"]["table"][0]["complexity"] == 2
    assert report["markings"]["marked"] == []
    assert "cancellation_note" in report["polytope"]


def test_analyze_trace(capsys):
    _, out, _ = run(capsys, "analyze", EXAMPLE, "--trace", "--json")
    report = json.loads(out)
    assert report["two_formula_agree"] is True
    assert report["fox_terms"]["generator"] == "a"
    assert report["fox_terms_other"]["generator"] == "b"
    assert len(report["fox_terms"]["terms"]) == 8


def test_analyze_torsion(capsys):
    code, out, _ = run(capsys, "analyze", "x,y|yy")
    assert code == 0
    report = json.loads(out)
    assert report["splitting"] == {"reason": "torsion", "table": []}
    assert report["polytope"]["class"] == {"positive": [[0]], "negative": [[0], [1]]}
    assert report["polytope"]["single"] is None
    assert report["markings"]["rule"] == "torsion"


def test_analyze_warns_on_conjugate(capsys):
    _, out, _ = run(capsys, "analyze", "x,y|yxyXYY")
    assert json.loads(out)["warnings"] == ["relator was cyclically reduced; conjugator y"]


@pytest.mark.parametrize("argv, code, needle", [
    (["analyze", "x,y|"], 3, "free_rank2"),
    (["analyze", "x,y|xxYYYYY"], 3, "other_b1_1"),
    (["analyze", "x,y|xq"], 2, "position"),
    (["analyze", "x,y|xyXYY", "--char", "1,1"], 4, "does not factor"),
])
def test_analyze_errors(capsys, argv, code, needle):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    assert needle in err


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "foxpoly", "analyze", EXAMPLE]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--count", "20")
    assert code == 0
    assert "all suites passed" in out


def test_verify_zero_count_is_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--count", "0", "--suite", "fundamental")
    assert code == 0 and "0/0 ok" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_verify_catches_injected_sign_error(capsys, monkeypatch):
    real = foxcalc.fox_derivative

    def flipped(w, z):
        return -real(w, z)

    monkeypatch.setattr(foxcalc, "fox_derivative", flipped)
    code, out, _ = run(capsys, "verify", "--count", "30", "--suite", "fundamental",
                       "--suite", "scan_vs_recursion")
    assert code == 1
    assert "FAIL" in out
    assert "replay: foxpoly verify --seed 42 --suite fundamental" in out
