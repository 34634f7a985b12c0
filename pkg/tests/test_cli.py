"""Golden-file tests for every CLI verb, plus exit-code and determinism checks.

Expected outputs in tests/golden/*.out were derived by hand from the
defining relations, not captured from the program.
"""
import json
import subprocess
import sys
from pathlib import Path

import pytest

from gwa.cli import main

GOLDEN = Path(__file__).parent / "golden"
DERS = GOLDEN / "ders"
INV_Q_MINUS = "sigma=q*h^-1;a=h-1"

CASES = [
    ("normalize", ["normalize", "-A", "weyl_q", "y*x"], 0),
    ("mul", ["mul", "-A", "weyl_q", "x", "x", "y"], 0),
    ("comm", ["comm", "--algebra", "group_algebra", "x", "h"], 0),
    ("normalize_localized", ["normalize", "-L", "phi=q*v", "u*v"], 0),
    ("central_list", ["central", "-A", INV_Q_MINUS], 0),
    ("central_negative", ["central", "-A", "group_algebra", "h"], 1),
    ("central_quantum", ["central", "-A", "weyl_q"], 0),
    ("unit", ["unit", "-A", "group_algebra", "3*h^2"], 0),
    ("unit_negative", ["unit", "-A", INV_Q_MINUS, "x"], 1),
    ("classify", ["classify", "-A", "weyl_q"], 0),
    ("validate_valid", ["validate-der", str(DERS / "ad_x_group.json")], 0),
    ("validate_invalid", ["validate-der", str(DERS / "z1_nonmonomial.json")], 1),
    ("apply", ["apply-der", str(DERS / "delta2_weyl.json"), "x^2"], 0),
    ("decompose_quantum", ["decompose-der", str(DERS / "ad_y_delta1_weyl.json")], 0),
    ("decompose_involution", ["decompose-der", str(DERS / "dz1z2_group.json")], 0),
    ("decompose_invalid", ["decompose-der", str(DERS / "z1_nonmonomial.json")], 1),
    ("iso_negative", ["iso", "--a1", "sigma=q*h^-1;a=1", "--a2", INV_Q_MINUS], 1),
    ("iso_positive", ["iso", "--a1", "sigma=q*h^-1;a=h+q*h^-1", "--a2", "sigma=q*h^-1;a=h^2+q"], 0),
    ("det_m1", ["det-m", "1"], 0),
    ("det_m2", ["det-m", "2"], 0),
    ("preset_list", ["preset-list"], 0),
    ("det_m1_json", ["--json", "det-m", "1"], 0),
    ("comm_json", ["comm", "--json", "-A", "group_algebra", "x", "h"], 0),
]


@pytest.mark.parametrize("name, argv, code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code, capsys):
    assert main(argv) == code
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_every_verb_has_a_golden_case():
    verbs = {"normalize", "mul", "comm", "central", "unit", "classify", "validate-der",
             "apply-der", "decompose-der", "iso", "det-m", "preset-list"}
    covered = {next(a for a in argv if not a.startswith("-")) for _, argv, _ in CASES}
    assert verbs <= covered


@pytest.mark.parametrize("argv", [
    ["normalize", "-A", "weyl_q", "x^-1"],
    ["normalize", "-A", "weyl_q", "x + "],
    ["normalize", "-A", "nope", "x"],
    ["normalize", "x"],
    ["det-m", "0"],
    ["validate-der", "/nonexistent/file.json"],
    ["iso", "--a1", "weyl_q", "--a2", "hayashi1"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and "error" in captured.err


def test_argparse_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_json_flag_after_verb(capsys):
    assert main(["decompose-der", str(DERS / "delta2_weyl.json"), "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"alpha": "2", "t": "0"}


def test_torus_like_decomposition(tmp_path, capsys):
    # ad_x plus the torus derivation u -> 2u, v -> 3v; y = h u^-1 picks up (3 - 2) y
    f = tmp_path / "d.json"
    f.write_text(json.dumps({"algebra": "torus_like", "Dh": "(q - 1)*h*x + 3*h",
                             "Dx": "2*x", "Dy": "(q - 1)*h + y"}))
    assert main(["decompose-der", str(f)]) == 0
    assert capsys.readouterr().out == "t = x\nalpha = 2\nbeta = 3\n"


def test_json_iso_negative(capsys):
    assert main(["--json", "iso", "--a1", "sigma=q*h^-1;a=1", "--a2", INV_Q_MINUS]) == 1
    assert json.loads(capsys.readouterr().out) == {"isomorphic": False}


def test_subprocess_byte_identical():
    argv = [sys.executable, "-m", "gwa.cli", "mul", "-A", "hayashi2", "x^2 + h*y", "y^3 - 2*h^-1*x"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.strip()
