import json
import subprocess
import sys

import pytest

from edwards_law.cli import main
from edwards_law.curve import CurveParams, enumerate_points, iota

from oracles import curve_points_bf


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- certify ------------------------------------------------------------------

def test_certify_affine_closure_prints_cofactors(capsys):
    code, out, _ = run(capsys, "certify", "--filter", "affine_closure")
    assert code == 0
    assert "PASS affine_closure" in out
    for q in ("x2^2*y1^2*y2^2*d^2", "-y1^2*d + 1", "-y1^2*d"):
        assert f"cofactor {q} " in out


def test_certify_json_and_out(capsys, tmp_path):
    code, out, _ = run(capsys, "certify", "--filter", "dichotomy_minus", "--json", "--out", str(tmp_path))
    assert code == 0
    data = json.loads(out)
    assert data["failed"] == 0 and len(data["certificates"]) == 3
    files = sorted(p.name for p in (tmp_path / "certificates").iterdir())
    assert files == [f"dichotomy_minus.{k}.json" for k in range(3)]


def test_certify_unknown_filter(capsys):
    code, _, err = run(capsys, "certify", "--filter", "nothing_like_this")
    assert code == 2 and "no certificate" in err


def test_export_cert(capsys, tmp_path):
    code, out, _ = run(capsys, "export-cert", "closure", "--out", str(tmp_path))
    assert code == 0
    data = json.loads((tmp_path / "certificates" / "closure.json").read_text())
    assert data["name"] == "closure" and data["schema"] == 1
    code, _, _ = run(capsys, "export-cert", "no_such")
    assert code == 2


# -- group-check --------------------------------------------------------------

def test_group_check_affine(capsys):
    code, out, _ = run(capsys, "group-check", "--p", "13", "--c", "1", "--d", "2",
                       "--mode", "affine", "--level", "full")
    assert code == 0 and "all axioms hold" in out


def test_group_check_projective(capsys):
    code, _, _ = run(capsys, "group-check", "--p", "13", "--t", "2", "--mode", "projective",
                     "--level", "full")
    assert code == 0


def test_group_check_projective_from_general_params(capsys):
    code, out, _ = run(capsys, "group-check", "--p", "13", "--c", "1", "--d", "4",
                       "--mode", "projective", "--json")
    assert code == 0 and json.loads(out)["params"]["t"] == 2


def test_group_check_square_d(capsys):
    code, _, err = run(capsys, "group-check", "--p", "13", "--c", "1", "--d", "4", "--mode", "affine")
    assert code == 2
    assert "hypothesis violated" in err and "witness" in err


def test_report_is_byte_identical(capsys, tmp_path):
    for sub in ("a", "b"):
        code, _, _ = run(capsys, "group-check", "--p", "29", "--t", "3", "--mode", "projective",
                         "--seed", "5", "--out", str(tmp_path / sub))
        assert code == 0
    a = (tmp_path / "a" / "report.json").read_bytes()
    assert a == (tmp_path / "b" / "report.json").read_bytes()
    assert json.loads(a)["schema"] == 1
    timing = json.loads((tmp_path / "a" / "timing.json").read_text())
    assert timing and "timing" not in json.loads(a)


# -- add ----------------------------------------------------------------------

def test_add_identity_and_inverse(capsys):
    params = CurveParams.general(13, 1, 2)
    for P in enumerate_points(params):
        x, y = P.key()
        code, out, _ = run(capsys, "add", "--p", "13", "--c", "1", "--d", "2",
                           "--P", "1,0", "--Q", f"{x},{y}")
        assert code == 0 and out.strip() == f"{x},{y}"
        ix, iy = iota(P).key()
        code, out, _ = run(capsys, "add", "--p", "13", "--d", "2",
                           "--P", f"{x},{y}", "--Q", f"{ix},{iy}")
        assert out.strip() == "1,0"


def test_add_nonsummable_is_structured(capsys):
    code, out, _ = run(capsys, "add", "--p", "13", "--t", "2", "--P", "4,5", "--Q", "4,5", "--json")
    assert code == 1
    data = json.loads(out)
    assert data["summable"] is False and 0 in (data["delta_x"], data["delta_y"])


def test_projective_add_of_nonsummable_pair(capsys):
    code, out, _ = run(capsys, "add", "--p", "13", "--t", "2", "--P", "4,5", "--Q", "4,5",
                       "--layer", "projective", "--json")
    assert code == 0
    assert json.loads(out)["class"]


def test_add_off_curve(capsys):
    code, _, err = run(capsys, "add", "--p", "13", "--d", "2", "--P", "0,0", "--Q", "1,0")
    assert code == 2 and "not on" in err


# -- enumerate ----------------------------------------------------------------

def test_enumerate_circle(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "5", "--c", "1", "--d", "0", "--json")
    assert code == 0
    data = json.loads(out)
    assert sorted(map(tuple, data["points"])) == sorted(curve_points_bf(5, 1, 0))


def test_enumerate_off_oo(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "17", "--t", "2", "--json")
    data = json.loads(out)
    off = sorted(tuple(p) for p in data["points"] if 0 in p)
    assert off == [(0, 1), (0, 16), (1, 0), (16, 0)]
    assert data["count"] - data["oo"] == 4


def test_enumerate_projective(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "13", "--t", "2", "--mode", "projective", "--json")
    data = json.loads(out)
    assert data["count"] == 16
    oo = [P for P in curve_points_bf(13, 1, 4) if P[0] and P[1]]
    assert sum(len(c) == 2 for c in data["classes"]) == len(oo)
    assert sum(len(c) == 1 for c in data["classes"]) == 8


# -- usage --------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["add", "--p", "13", "--t", "2", "--d", "4", "--P", "1,0", "--Q", "1,0"],
    ["add", "--p", "13", "--P", "1,0", "--Q", "1,0"],
    ["add", "--p", "12", "--d", "2", "--P", "1,0", "--Q", "1,0"],
    ["add", "--p", "13", "--d", "2", "--P", "one", "--Q", "1,0"],
    ["group-check", "--p", "13", "--t", "1", "--mode", "projective"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "edwards_law.cli", "enumerate", "--p", "5", "--d", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "4 points" in proc.stdout
