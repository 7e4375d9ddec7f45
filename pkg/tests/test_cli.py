import json
import subprocess
import sys

import pytest

from lorentz_homog.catalog import parse
from lorentz_homog.cli import run


def test_marks_f4():
    assert run(["marks", "F4"]) == (0, "2 3 4 2")


@pytest.mark.parametrize(
    "argv",
    [["marks", "SO4"], ["frobnicate"], ["marks", "F4", "--bogus"], ["orbits", "A3", "--node", "9"],
     ["dual", "sl:1"], ["verify"], ["verify", "TABLE_I", "--group", "E_8"], ["enumerate-class2", "--max-dim", "-1"],
     ["--format", "xml", "marks", "A1"]],
)
def test_invalid_input_exits_2(argv):
    assert run(argv)[0] == 2


def test_verify_all():
    code, text = run(["verify", "--all"])
    assert code == 0
    assert "SU_8" in text and text.count("note:") >= 1
    assert run(["verify", "--all"])[1] == text


@pytest.mark.parametrize(
    "argv",
    [["roots", "B2"], ["marks", "E6"], ["orbits", "G2"], ["orbits", "C3", "--node", "1"],
     ["enumerate-compact", "--max-rank", "2"], ["enumerate-compact", "--group", "E6"],
     ["enumerate-class2", "--max-dim", "7"], ["dual", "G2"], ["dual", "sopq:2,3,2,0"],
     ["case", "su1n:3"], ["verify", "SECTION4_LIST", "--group", "E_7"]],
)
def test_json_parses(argv):
    code, text = run(argv + ["--format", "json"])
    assert code == 0
    data = json.loads(text)
    parse(text)
    assert run(["--format", "json"] + argv) == (code, text)
    assert data is not None


def test_case_spectrum_json_rationals():
    data = json.loads(run(["case", "su1n:3", "--format", "json"])[1])
    spec = [s for s in data["spectra"] if s["element"] == "z" and s["subspace"] == "p'"]
    assert spec[0]["eigenvalues"] == [["-2/1", 2]]
    assert data["dims"]["p'"] == 4


def test_class2_json_round_trip():
    code, text = run(["enumerate-class2", "--max-dim", "11", "--format", "json"])
    assert code == 0 and len(parse(text)) == 10


def test_console_entry():
    out = subprocess.run([sys.executable, "-m", "lorentz_homog", "marks", "E8"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "2 3 4 6 5 4 3 2"
    bad = subprocess.run([sys.executable, "-m", "lorentz_homog", "roots", "Z9"], capture_output=True, text=True)
    assert bad.returncode == 2
