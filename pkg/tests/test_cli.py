import io
import json
import subprocess
import sys

import pytest

from bourcrochet.cli import main, parse_selector

H045 = [6, 12, 20, 29, 39, 49, 61, 73, 85, 97, 110, 123, 136, 150, 164, 178, 192]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestSelector:
    @pytest.mark.parametrize("text, m", [
        ("enneper:1", 2.0), ("enneper:2", 1.5), ("richmond:1", 0.5),
        ("richmond:2", 2 / 3), ("bour3", 3.0), ("bm:2.5", 2.5), ("bm:5/2", 2.5),
    ])
    def test_resolves(self, text, m):
        assert parse_selector(text).m == pytest.approx(m)

    def test_bour3_domain(self):
        spec = parse_selector("bour3")
        assert (spec.r_min, spec.r_max) == (0.0, 1.0)

    def test_richmond_starts_off_the_pole(self):
        assert parse_selector("richmond:1").r_min > 0


class TestPattern:
    def test_small_model_h045_column(self):
        code, out, _ = run("pattern", "enneper:1", "--gauge-h", "0.45", "--gauge-w", "0.5",
                           "--rounds", "17", "--scale", "fit-intersection", "--format", "csv")
        assert code == 0
        got = [int(line.split(",")[1]) for line in out.splitlines()[1:]]
        assert len(got) == 17
        # every round but 13 matches the published column
        assert [i + 1 for i, (g, w) in enumerate(zip(got, H045)) if g != w] == [13]

    def test_smoke_bour3(self):
        code, out, err = run("pattern", "bm:3", "--gauge-h", "0.5", "--gauge-w", "0.5",
                             "--rounds", "5", "--scale", "1")
        assert code == 0 and err == ""
        assert sum(line.startswith("Round ") for line in out.splitlines()) == 5

    def test_json(self):
        code, out, _ = run("pattern", "enneper:1", "--gauge-h", "0.5", "--gauge-w", "0.5",
                           "--rounds", "4", "--scale", "2", "--format", "json")
        assert code == 0
        assert len(json.loads(out)["rows"]) == 4

    def test_fit_count_and_intersect(self):
        code, out, _ = run("pattern", "enneper:1", "--gauge-h", "0.45", "--gauge-w", "0.5",
                           "--rounds", "26", "--scale", "fit-count:9,100", "--intersect", "--format", "csv")
        assert code == 0
        assert "10,2,2,0,26,3" in out.splitlines()
        assert out.splitlines()[-1] == "26,44,0,2,44,1"

    def test_env_gauge(self, monkeypatch):
        monkeypatch.setenv("BOURCROCHET_GAUGE", "0.5,0.5")
        code, out, _ = run("pattern", "enneper:1", "--rounds", "3", "--scale", "1")
        assert code == 0 and "Round 3" in out

    def test_deterministic(self):
        argv = ("pattern", "enneper:1", "--gauge-h", "0.4", "--gauge-w", "0.5",
                "--rounds", "18", "--scale", "fit-intersection")
        assert run(*argv) == run(*argv)


class TestInfo:
    def test_first_intersection(self):
        code, out, _ = run("info", "enneper:1", "--r", "1.7320508")
        assert code == 0
        assert "crossing angle theta_cr = 0 (first intersection)" in out
        assert "first intersection radius = 1.732050808" in out

    def test_curvature(self):
        code, out, _ = run("info", "bm:2", "--r", "1")
        assert code == 0
        assert "Gaussian curvature K(r) = -0.25\n" in out
        assert "E = 4, F = 0, G = 4" in out

    def test_bour3_sectors(self):
        code, out, _ = run("info", "bour3", "--r", "0.5")
        assert code == 0 and "sectors: 6" in out

    def test_richmond_crossing(self):
        code, out, _ = run("info", "richmond:1", "--r", "3")
        assert code == 0 and "crossing angle theta_cr = 2.30" in out


class TestErrors:
    @pytest.mark.parametrize("argv", [
        ("pattern", "bm:1", "--gauge-h", "0.5", "--gauge-w", "0.5", "--rounds", "3"),
        ("pattern", "bm:1"),
        ("info", "richmond:1", "--r", "0"),
        ("pattern", "enneper:1", "--gauge-h", "-1", "--gauge-w", "0.5", "--rounds", "3"),
        ("pattern", "enneper:1", "--gauge-h", "0.5", "--gauge-w", "0.5", "--rounds", "3", "--scale", "abc"),
        ("pattern", "bm:3", "--gauge-h", "0.5", "--gauge-w", "0.5", "--rounds", "3",
         "--scale", "fit-intersection"),
        ("pattern", "enneper:2", "--gauge-h", "0.5", "--gauge-w", "0.5", "--rounds", "3", "--intersect"),
        ("pattern", "nosuch:3"),
        ("info", "enneper:x", "--r", "1"),
        ("mesh", "enneper:1", "--r-range", "2,1", "--out", "-"),
        ("frobnicate",),
    ])
    def test_single_line_usage_error(self, argv):
        code, out, err = run(*argv)
        assert code == 2
        assert out == ""
        assert err.count("\n") == 1 and err.startswith("bourcrochet: error:")

    def test_missing_gauge(self, monkeypatch):
        monkeypatch.delenv("BOURCROCHET_GAUGE", raising=False)
        code, _, err = run("pattern", "enneper:1", "--rounds", "3")
        assert code == 2 and "gauge" in err


class TestMesh:
    def test_mesh_file(self, tmp_path):
        path = tmp_path / "e.obj"
        code, out, _ = run("mesh", "enneper:1", "--r-range", "0,1", "--r-steps", "2",
                           "--theta-steps", "4", "--theta-range", "0,3.141592653589793", "--out", str(path))
        assert code == 0
        assert out == "mesh: 15 vertices, 16 faces\n"
        lines = path.read_text().splitlines()
        assert sum(ln.startswith("v ") for ln in lines) == 15
        assert sum(ln.startswith("f ") for ln in lines) == 16

    def test_round_polyline_stdout(self):
        code, out, _ = run("mesh", "enneper:1", "--round", "1", "--theta-steps", "10", "--out", "-")
        assert code == 0
        lines = out.splitlines()
        assert sum(ln.startswith("v ") for ln in lines) == 10
        assert lines[-1] == "l " + " ".join(map(str, range(1, 11))) + " 1"

    def test_radial_polyline(self, tmp_path):
        code, out, _ = run("mesh", "richmond:1", "--radial", "0", "--r-steps", "50",
                           "--out", str(tmp_path / "r.obj"))
        assert code == 0 and out.startswith("radial polyline: 51 points")

    def test_byte_stable(self):
        argv = ("mesh", "bour3", "--r-steps", "6", "--theta-steps", "18", "--out", "-")
        assert run(*argv)[1] == run(*argv)[1]


class TestValidate:
    def test_reports_and_exit_code(self):
        code, out, _ = run("validate")
        lines = out.splitlines()
        # the H=0.45 column is off by one at round 13, so the run is a failure
        assert code == 1
        assert "[FAIL] Small model H=0.45 column: 1 entries differ (tolerance exact)" in lines
        assert "    round 13: got 137, ref 136 (+1)" in lines
        assert "[PASS] Large model schedule conservation identities" in lines
        assert "[PASS] Large model final round inner = outer = 44" in lines
        assert "[PASS] Large model schedule inner/outer sizes within +-1" in lines
        assert lines[-1] == "9/10 checks passed"

    def test_perturbed_gauge_reports_diffs(self):
        code, out, _ = run("validate", "--gauge-h", "0.46")
        assert code == 1
        assert "[FAIL] Small model H=0.45 column (run at H=0.46): 16 entries differ" in out
        assert "round 17: got 197, ref 192 (+5)" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bourcrochet.cli", "info", "bm:2", "--r", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "K(r) = -0.25" in proc.stdout
    bad = subprocess.run([sys.executable, "-m", "bourcrochet.cli", "pattern", "bm:1"],
                         capture_output=True, text=True, check=False)
    assert bad.returncode == 2 and bad.stderr.count("\n") == 1
