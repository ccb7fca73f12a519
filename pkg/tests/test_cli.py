import csv
import json
import math

import pytest

from spiralcurv import spiral_curvature
from spiralcurv.cli import main

PI = math.pi


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCurvature:
    def test_flat_example(self, capsys):
        code, out, _ = run(
            capsys, "curvature", "--K", "0", "--r", "2", "--theta", "1.0471975511965976"
        )
        assert code == 0
        assert abs(float(out) - 0.25) <= 5.6e-17

    def test_defaults(self, capsys):
        code, out, _ = run(capsys, "curvature")
        assert code == 0
        assert float(out) == spiral_curvature(0.0, 1.0, PI / 4.0)

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "curvature", "--K", "1", "--r", "3.2")
        assert code == 1
        assert err.startswith("domain error:")

    def test_right_angle_is_float_zero(self, capsys):
        code, out, _ = run(capsys, "curvature", "--theta", "1.5707963267948966")
        assert code == 0
        assert abs(float(out)) < 1e-16

    def test_theta_deg_flag(self, capsys):
        code1, out1, _ = run(capsys, "curvature", "--theta-deg", "60", "--r", "2")
        code2, out2, _ = run(capsys, "curvature", "--theta", str(PI / 3.0), "--r", "2")
        assert code1 == code2 == 0
        assert float(out1) == pytest.approx(float(out2), rel=1e-15)

    def test_theta_flags_exclusive(self, capsys):
        code, _, _ = run(capsys, "curvature", "--theta", "0.5", "--theta-deg", "30")
        assert code == 3

    def test_series_switch(self, capsys):
        code, out, _ = run(
            capsys, "curvature", "--series", "--K", "1e-3", "--r", "1", "--theta", "0.7"
        )
        assert code == 0
        assert float(out) == pytest.approx(
            spiral_curvature(1e-3, 1.0, 0.7), rel=1e-12
        )

    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "curvature", "--radius", "1")
        assert code == 3


class TestProfile:
    def test_round_trip_exact(self, capsys, tmp_path):
        out_file = tmp_path / "profile.csv"
        code, _, _ = run(
            capsys,
            "profile", "--axis", "r", "--fixed", "-1", "--min", "0.5", "--max", "3",
            "--steps", "9", "--theta", str(PI / 3.0), "--out", str(out_file),
        )
        assert code == 0
        rows = list(csv.DictReader(out_file.open()))
        assert len(rows) == 9
        for row in rows:
            x = float(row["x"])
            assert float(row["k"]) == spiral_curvature(-1.0, x, PI / 3.0)
            assert row["method"] in ("closed_form", "series")

    def test_stdout_and_header(self, capsys):
        code, out, _ = run(
            capsys,
            "profile", "--axis", "K", "--fixed", "1", "--min", "-0.1", "--max", "0.1",
            "--steps", "5", "--theta", "0.8",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "x,k,method"
        assert len(lines) == 6

    def test_series_window_in_method_column(self, capsys):
        code, out, _ = run(
            capsys,
            "profile", "--axis", "K", "--fixed", "1", "--min", "-0.1", "--max", "0.1",
            "--steps", "21", "--theta", "0.8",
        )
        methods = [line.split(",")[2] for line in out.strip().split("\n")[1:]]
        assert methods[0] == "closed_form" and methods[-1] == "closed_form"
        assert "series" in methods

    def test_no_partial_file_on_domain_error(self, capsys, tmp_path):
        out_file = tmp_path / "bad.csv"
        code, _, err = run(
            capsys,
            "profile", "--axis", "r", "--fixed", "1", "--min", "0.5", "--max", "4",
            "--steps", "9", "--out", str(out_file),
        )
        assert code == 1
        assert err.startswith("domain error:")
        assert not out_file.exists()

    def test_steps_validated(self, capsys):
        code, _, _ = run(
            capsys,
            "profile", "--axis", "r", "--fixed", "0", "--min", "0.5", "--max", "1",
            "--steps", "1",
        )
        assert code == 3


class TestTrace:
    def test_sphere_csv_matches_closed_form(self, capsys):
        code, out, _ = run(
            capsys,
            "trace", "--surface", "sphere", "--R", "1", "--theta", str(PI / 4.0),
            "--r0", "1.8", "--r1", "0.8", "--samples", "12",
        )
        assert code == 0
        rows = list(csv.DictReader(out.splitlines()))
        assert list(rows[0].keys()) == ["t", "x", "y", "z", "u", "v", "k", "theta_meas"]
        for row in rows:
            v = float(row["v"])
            want = (math.cos(v) / math.sin(v)) * math.cos(PI / 4.0)
            assert float(row["k"]) == pytest.approx(want, rel=1e-5)
            assert float(row["theta_meas"]) == pytest.approx(PI / 4.0, abs=1e-7)

    def test_pseudosphere_constant_k(self, capsys):
        code, out, _ = run(
            capsys,
            "trace", "--surface", "pseudosphere", "--theta", str(PI / 3.0),
            "--r0", "1.3", "--r1", "0.4", "--samples", "10",
        )
        assert code == 0
        ks = [float(r["k"]) for r in csv.DictReader(out.splitlines())]
        for k in ks:
            assert k == pytest.approx(-0.5, abs=1e-5)

    def test_polar_flat_matches_spiral_curvature(self, capsys):
        code, out, _ = run(
            capsys,
            "trace", "--surface", "polar", "--theta", str(PI / 4.0),
            "--r0", "0.5", "--r1", "1.5", "--samples", "7",
        )
        assert code == 0
        for row in csv.DictReader(out.splitlines()):
            r = float(row["t"])
            assert float(row["k"]) == pytest.approx(
                spiral_curvature(0.0, r, PI / 4.0), rel=1e-4
            )

    def test_polar_negative_curvature_rejected(self, capsys):
        code, _, err = run(
            capsys,
            "trace", "--surface", "polar", "--K", "-1", "--theta", "0.8",
            "--r0", "0.5", "--r1", "1.5", "--samples", "5",
        )
        assert code == 1
        assert "domain error" in err

    def test_samples_arity(self, capsys):
        code, _, _ = run(
            capsys,
            "trace", "--surface", "plane", "--theta", "0.7", "--r0", "1",
            "--r1", "0.5", "--samples", "1",
        )
        assert code == 3

    def test_theta_required(self, capsys):
        code, _, _ = run(
            capsys,
            "trace", "--surface", "plane", "--r0", "1", "--r1", "0.5", "--samples", "5",
        )
        assert code == 3

    def test_svg_output(self, capsys, tmp_path):
        f = tmp_path / "trace.svg"
        code, _, _ = run(
            capsys,
            "trace", "--surface", "plane", "--theta", str(PI / 4.0), "--r0", "1",
            "--r1", "0.2", "--samples", "50", "--format", "svg", "--out", str(f),
        )
        assert code == 0
        text = f.read_text()
        assert text.startswith("<?xml")
        assert "<polyline" in text and "viewBox=" in text


class TestVerify:
    def test_analysis_suite_exits_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "analysis")
        assert code == 0
        assert out.count("PASS") == len(out.strip().splitlines())

    def test_failure_exits_two(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "analysis", "--tol-scale", "1e-30"
        )
        assert code == 2
        assert "FAIL" in out

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "analysis", "--format", "report-json"
        )
        assert code == 0
        doc = json.loads(out)
        assert all(r["passed"] for r in doc["reports"])

    def test_bogus_suite(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "bogus")
        assert code == 3


class TestFigure:
    @pytest.mark.parametrize(
        "name",
        ["spiral", "pseudosphere", "sphere-loxodrome", "pseudosphere-loxodrome", "k-surface"],
    )
    def test_deterministic_output(self, capsys, tmp_path, name):
        f1, f2 = tmp_path / "a.svg", tmp_path / "b.svg"
        assert run(capsys, "figure", "--name", name, "--out", str(f1))[0] == 0
        assert run(capsys, "figure", "--name", name, "--out", str(f2))[0] == 0
        b1, b2 = f1.read_bytes(), f2.read_bytes()
        assert b1 == b2
        assert b1.startswith(b"<?xml")

    def test_unknown_name(self, capsys, tmp_path):
        code, _, _ = run(capsys, "figure", "--name", "torus", "--out", str(tmp_path / "x.svg"))
        assert code == 3


def test_no_command_is_flag_error(capsys):
    assert run(capsys)[0] == 3


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
