import json
import os
import subprocess
import sys

import pytest

from toric_diamond.cli import run

GOLDEN_W = "[[1,0,1,1],[0,1,1,2]]"
OCTAGON_P = json.dumps(
    [[1, 1], [5, 2], [7, 2], [5, 1], [-1, -1], [-5, -2], [-7, -2], [-5, -1]])
HEXAGON_P = json.dumps(
    [[0, 1], [1, 1], [1, 0], [0, -1], [-1, -1], [-1, 0]])


def _run(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


class TestAnalyzeFan:
    def test_hexagon(self, capsys):
        code, out, err = _run(capsys, ["analyze-fan", "--polygon", HEXAGON_P])
        assert code == 0 and err == ""
        rep = json.loads(out)
        assert rep["fano"] and rep["index"] == 1
        assert rep["special_symmetric"] and rep["w0_order"] == 12
        assert rep["admits_kahler_einstein"]
        assert rep["homology_M"]["diffeotype"] == "#3(S^2xS^3)"

    def test_octagon(self, capsys):
        code, out, _ = _run(capsys, ["analyze-fan", "--polygon", OCTAGON_P])
        assert code == 0
        rep = json.loads(out)
        assert rep["index"] == 2 and rep["w0_order"] == 8
        assert rep["orbifold"]["ord_x"] == 12
        assert rep["homology_M"]["diffeotype"] == "#5(S^2xS^3)"

    def test_volume_check_with_samples(self, capsys):
        code, out, _ = _run(capsys, ["analyze-fan", "--polygon", HEXAGON_P,
                                     "--samples", "10000", "--seed", "1"])
        assert code == 0
        vc = json.loads(out)["volume_check"]
        assert vc["rel_err"] < 0.05

    def test_origin_not_interior_is_domain_error(self, capsys):
        shifted = json.dumps([[1, 1], [3, 1], [3, 3], [1, 3]])
        code, out, err = _run(capsys, ["analyze-fan", "--polygon", shifted])
        assert code == 1 and out == ""
        e = json.loads(err)
        assert e["code"] == "ORIGIN_NOT_INTERIOR"
        assert set(e) == {"code", "message", "context"}
        assert all(isinstance(v, str) for v in e["context"].values())


class TestAnalyzeWeights:
    def test_golden(self, capsys):
        code, out, _ = _run(capsys, ["analyze-weights", "--weights", GOLDEN_W])
        assert code == 0
        rep = json.loads(out)
        assert rep["admissible"] and rep["g_omega_order"] == 24
        assert rep["isotropy"] == [[-7, -2], [-5, -2], [-1, -1], [5, 1], [7, 2]]

    def test_inadmissible_reported_not_error(self, capsys):
        code, out, _ = _run(capsys,
                            ["analyze-weights", "--weights", "[[2,2,1]]"])
        assert code == 0
        rep = json.loads(out)
        assert rep["admissible"] is False
        assert "isotropy" not in rep


class TestDiamond:
    def test_golden(self, capsys):
        code, out, _ = _run(capsys, ["diamond", "--weights", GOLDEN_W])
        assert code == 0
        rep = json.loads(out)
        assert rep["diffeotype"] == "#5(S^2xS^3)"
        assert rep["fano_index"] == 2
        assert rep["s_cohomology"]["torsion_order"] == 24

    def test_svg_attached(self, capsys):
        code, out, _ = _run(capsys,
                            ["diamond", "--weights", GOLDEN_W, "--svg"])
        assert code == 0
        svg = json.loads(out)["svg"]
        assert svg.startswith("<?xml")
        assert 'version="1.1"' in svg
        assert "(7,2)" in svg

    def test_not_admissible_domain_error(self, capsys):
        code, out, err = _run(capsys, ["diamond", "--weights", "[[2,2,1]]"])
        assert code == 1
        assert json.loads(err)["code"] == "NOT_ADMISSIBLE"

    def test_malformed_json(self, capsys):
        code, out, err = _run(capsys, ["diamond", "--weights", "[[1,0"])
        assert code == 2
        assert json.loads(err)["code"] == "MALFORMED_INPUT"

    def test_missing_argument(self, capsys):
        code, _, err = _run(capsys, ["diamond"])
        assert code == 2
        assert json.loads(err)["code"] == "MALFORMED_INPUT"


class TestFamily:
    def test_q_single_record(self, capsys):
        code, out, _ = _run(capsys, ["family", "--q", "1"])
        assert code == 0
        assert out.count("\n") == 1
        assert json.loads(out)["diffeotype"] == "#3(S^2xS^3)"

    def test_ndjson_sweep(self, capsys):
        code, out, _ = _run(capsys, ["family", "--k", "1", "--count", "3",
                                     "--seed", "5"])
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 3
        orders = [int(json.loads(l)["ord_x"]) for l in lines]
        for l in lines:
            assert json.loads(l)["smooth_M"] is True

    def test_deterministic_bytes(self, capsys):
        argv = ["family", "--k", "2", "--count", "2", "--seed", "9"]
        _, a, _ = _run(capsys, argv)
        _, b, _ = _run(capsys, argv)
        assert a == b

    def test_needs_q_or_k(self, capsys):
        code, _, err = _run(capsys, ["family", "--count", "2"])
        assert code == 2
        assert json.loads(err)["code"] == "MALFORMED_INPUT"


class TestRoundtrip:
    def test_octagon(self, capsys):
        code, out, _ = _run(capsys, ["roundtrip", "--polygon", OCTAGON_P])
        assert code == 0
        rep = json.loads(out)
        assert rep["roundtrip_ok"] is True
        assert rep["isotropy"] == [[-7, -2], [-5, -2], [-1, -1], [5, 1], [7, 2]]

    def test_from_isotropy(self, capsys):
        iso = json.dumps([[-7, -2], [-5, -2], [-1, -1], [5, 1], [7, 2]])
        code, out, _ = _run(capsys, ["roundtrip", "--isotropy", iso])
        assert code == 0
        assert json.loads(out)["roundtrip_ok"] is True

    def test_not_special_symmetric(self, capsys):
        tri = json.dumps([[0, 1], [1, 0], [-1, -1]])
        code, _, err = _run(capsys, ["roundtrip", "--polygon", tri])
        assert code == 1
        assert json.loads(err)["code"] == "NOT_SPECIAL_SYMMETRIC"


class TestRender:
    def test_svg_document(self, capsys):
        code, out, _ = _run(capsys, ["render", "--polygon", OCTAGON_P])
        assert code == 0
        svg = json.loads(out)["svg"]
        assert svg.startswith("<?xml") and "</svg>" in svg
        for label in ("(7,2)", "(-7,-2)", "(5,1)"):
            assert label in svg


class TestOutFile:
    def test_out_writes_file(self, tmp_path, capsys):
        dest = tmp_path / "report.json"
        code, out, _ = _run(capsys, ["diamond", "--weights", GOLDEN_W,
                                     "--out", str(dest)])
        assert code == 0 and out == ""
        rep = json.loads(dest.read_text())
        assert rep["diffeotype"] == "#5(S^2xS^3)"
        assert dest.read_text().endswith("\n")


class TestEntryPoint:
    def test_subprocess_roundtrips_json(self):
        env = dict(os.environ, TORIC_DIAMOND_BACKEND="numpy")
        proc = subprocess.run(
            [sys.executable, "-m", "toric_diamond.cli",
             "diamond", "--weights", GOLDEN_W],
            capture_output=True, text=True, env=env)
        assert proc.returncode == 0
        rep = json.loads(proc.stdout)
        # serialize -> parse -> serialize is stable (sorted keys)
        assert json.dumps(json.loads(proc.stdout), sort_keys=True) == \
            json.dumps(rep, sort_keys=True)

    def test_subprocess_exit_codes(self):
        env = dict(os.environ, TORIC_DIAMOND_BACKEND="numpy")
        bad = subprocess.run(
            [sys.executable, "-m", "toric_diamond.cli",
             "diamond", "--weights", "not json"],
            capture_output=True, text=True, env=env)
        assert bad.returncode == 2
        dom = subprocess.run(
            [sys.executable, "-m", "toric_diamond.cli",
             "diamond", "--weights", "[[2,2,1]]"],
            capture_output=True, text=True, env=env)
        assert dom.returncode == 1
