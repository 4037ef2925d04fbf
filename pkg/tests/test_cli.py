import json
import subprocess
import sys

import pytest

from hadamat import constructions as C
from hadamat import fileformat
from hadamat.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("F_3", "F_5", "D_1", "D_2", "D_3", "D_4", "A_12"):
        p = tmp_path / f"{name.replace('_', '')}.mat"
        fileformat.write(p, C.get(name))
        out[name] = str(p)
    p = tmp_path / "I.mat"
    fileformat.write(p, C.identity(5))
    out["I"] = str(p)
    p = tmp_path / "J3.mat"
    p.write_text("hadamat-matrix v1\norder 1\ndim 3\nscale 0\n1 1 1\n1 1 1\n1 1 1\n")
    out["J3"] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_gen_fourier(capsys):
    code, out, _ = run(capsys, "gen", "F5")
    assert code == 0
    assert fileformat.loads(out) == C.fourier(5)


def test_gen_catalog_and_circulant(capsys):
    code, out, _ = run(capsys, "gen", "D_1")
    assert code == 0 and fileformat.loads(out) == C.get("D_1")
    code, out, _ = run(capsys, "gen", "circulant", "--n", "5", "--row", "1,z5^1,z5^4,z5^4,z5^1")
    assert code == 0
    # a = zeta_5 is the second printed root, so this is D_2
    assert fileformat.loads(out).same_entries(C.get("D_2"))
    code, out, _ = run(capsys, "gen", "I", "--n", "3", "--order", "12")
    assert code == 0 and fileformat.loads(out).order == 12


def test_gen_unknown(capsys):
    code, _, err = run(capsys, "gen", "Z_9")
    assert code == 2 and "D_1" in err


def test_check(capsys, files):
    code, out, _ = run(capsys, "check", "hadamard", files["F_5"])
    assert code == 0 and "true" in out
    code, out, _ = run(capsys, "check", "hadamard", files["J3"])
    assert code == 0 and "false" in out
    code, _, _ = run(capsys, "check", "hadamard", files["J3"], "--assert")
    assert code == 1
    code, _, _ = run(capsys, "--assert", "check", "hadamard", files["F_5"])
    assert code == 0


def test_check_mub_json(capsys, files):
    code, out, _ = run(capsys, "check", "mub", files["I"], files["D_1"], files["D_2"], files["D_3"],
                       files["D_4"], "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is True and len(data["pairwise"]) == 10


def test_check_other_kinds(capsys, files):
    code, out, _ = run(capsys, "check", "inverse-orthogonal", files["D_2"])
    assert code == 0 and "true" in out
    code, out, _ = run(capsys, "check", "unitary", files["I"], "--assert")
    assert code == 0


def test_equiv(capsys, files):
    code, out, _ = run(capsys, "equiv", files["F_3"], files["A_12"])
    assert code == 0 and "equivalent: true" in out
    code, out, _ = run(capsys, "equiv", files["F_5"], files["D_1"], "--exhaustive", "--json")
    data = json.loads(out)
    assert data["pairs_examined"] == 14400 and data["equivalent"] is True
    code, _, err = run(capsys, "equiv", files["F_3"], files["F_5"])
    assert code == 2 and "differ" in err


def test_canon(capsys, files):
    code, out, _ = run(capsys, "canon", files["D_4"])
    m = fileformat.loads(out)
    assert code == 0 and all(m[0, j] == 1 for j in range(5))


def test_search(capsys, monkeypatch):
    code, out, _ = run(capsys, "search", "--n", "2", "--N", "4")
    assert code == 0 and out.startswith("0 1\n0 3\n# summary")
    code, out, _ = run(capsys, "search", "--n", "2", "--N", "4", "--format", "matrix")
    assert out.count("hadamat-matrix v1") == 2
    code, _, _ = run(capsys, "search", "--n", "2", "--N", "2", "--assert")
    assert code == 1
    monkeypatch.setenv("HADAMAT_BUDGET", "5")
    code, _, err = run(capsys, "search", "--n", "4", "--N", "4")
    assert code == 2 and "64" in err


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.mat"
    bad.write_text("hadamat-matrix v1\norder 60\ndim 2\nscale 0\n1 1\n")
    code, _, _ = run(capsys, "check", "hadamard", str(bad))
    assert code == 2
    code, _, _ = run(capsys, "check", "hadamard", str(tmp_path / "missing.mat"))
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    code, _, _ = run(capsys)
    assert code == 2


def test_verify_paper_to_file(capsys, tmp_path):
    p = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify-paper", "-o", str(p))
    assert code == 0 and "claims" in out
    data = json.loads(p.read_text())
    assert data["schema"] == "hadamat-report/1"
    code, _, _ = run(capsys, "verify-paper", "-o", str(p), "--assert")
    assert code == 1  # some claims fail


def test_console_script(files):
    r = subprocess.run([sys.executable, "-m", "hadamat.cli", "check", "hadamard", files["J3"], "--assert"],
                       capture_output=True, text=True)
    assert r.returncode == 1
    r = subprocess.run([sys.executable, "-m", "hadamat.cli", "gen", "nothing"], capture_output=True, text=True)
    assert r.returncode == 2


def test_mixed_orders_lifted(capsys, tmp_path):
    i5 = tmp_path / "i5.mat"
    fileformat.write(i5, C.identity(5, 1))
    d1 = tmp_path / "d1.mat"
    fileformat.write(d1, C.get("D_1"))
    code, out, _ = run(capsys, "check", "mub", str(i5), str(d1), "--assert")
    assert code == 0 and "mub: true" in out
    code, _, err = run(capsys, "check", "mub", str(i5), str(d1), "--order", "7")
    assert code == 2
