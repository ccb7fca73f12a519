import json
import math

import pytest

from spiralcurv import (
    BadParameter,
    PreconditionFailed,
    reports_to_json,
    reports_to_text,
    run_suites,
    verify_derivative_at_zero,
    verify_monotone_in_K,
    verify_numeric_vs_closed_form,
    verify_ratio_limit,
    verify_sign_pattern,
)
from spiralcurv.verify import Observation, make_report, suite_analysis

PI = math.pi


class TestReportMechanics:
    def test_passed_iff_all_errors_within_tolerance(self):
        good = Observation(input=(1.0,), expected=1.0, actual=1.0 + 1e-9, error=1e-9)
        bad = Observation(input=(2.0,), expected=1.0, actual=1.5, error=0.5)
        assert make_report("x", [good], 1e-8).passed
        assert not make_report("x", [good, bad], 1e-8).passed

    def test_nan_error_fails(self):
        nan = Observation(input=(0.0,), expected=0.0, actual=math.nan, error=math.nan)
        assert not make_report("x", [nan], 1.0).passed

    def test_text_line_format(self):
        rep = make_report("demo.check", [Observation((1.0,), 0.0, 0.0, 0.0)], 1e-6)
        line = rep.to_text_line()
        assert line.startswith("PASS demo.check:")
        assert "tolerance 1.000e-06" in line

    def test_json_field_names(self):
        rep = make_report("demo.check", [Observation((1.0, "tag"), 2.0, 2.5, 0.25)], 1.0)
        doc = json.loads(reports_to_json([rep]))
        assert set(doc.keys()) == {"reports"}
        entry = doc["reports"][0]
        assert set(entry.keys()) == {"check_name", "passed", "tolerance", "observations"}
        obs = entry["observations"][0]
        assert set(obs.keys()) == {"input", "expected", "actual", "error"}
        assert obs["input"] == [1.0, "tag"]
        assert obs["actual"] == 2.5

    def test_deterministic_serialization(self):
        a = reports_to_json(suite_analysis())
        b = reports_to_json(suite_analysis())
        assert a == b
        assert reports_to_text(suite_analysis()) == reports_to_text(suite_analysis())


class TestRatioLimit:
    def test_passes_with_quadratic_envelope(self):
        rep = verify_ratio_limit(4.0, -4.0, PI / 4.0, [1e-1, 1e-2, 1e-3])
        assert rep.passed
        assert rep.tolerance == 1.0

    def test_deviation_shrinks_quadratically(self):
        rs = [1e-1, 1e-2, 1e-3]
        rep = verify_ratio_limit(4.0, -4.0, PI / 4.0, rs)
        devs = [abs(o.actual - 1.0) for o in rep.observations]
        assert devs[1] == pytest.approx(devs[0] / 100.0, rel=0.1)
        assert devs[2] == pytest.approx(devs[1] / 100.0, rel=0.1)

    @pytest.mark.parametrize(
        "rs", [[], [1e-2, 1e-1], [1e-1, -1e-2], [1e-1, 1e-1]]
    )
    def test_bad_sequences(self, rs):
        with pytest.raises(BadParameter):
            verify_ratio_limit(4.0, -4.0, PI / 4.0, rs)

    def test_identical_curvatures_rejected(self):
        with pytest.raises(BadParameter):
            verify_ratio_limit(2.0, 2.0, PI / 4.0, [1e-1, 1e-2])


class TestDerivativeAtZero:
    def test_matches_closed_form(self):
        rep = verify_derivative_at_zero(1.0, PI / 3.0)
        assert rep.passed
        assert rep.observations[0].error < 1e-10
        assert rep.observations[0].expected == -(1.0 / 3.0) * math.cos(PI / 3.0)

    def test_right_angle_uses_absolute_tolerance(self):
        rep = verify_derivative_at_zero(1.0, PI / 2.0)
        assert rep.tolerance == 1e-12
        assert rep.passed

    def test_bad_steps(self):
        with pytest.raises(BadParameter):
            verify_derivative_at_zero(1.0, PI / 3.0, h_sequence=[1e-3])
        with pytest.raises(BadParameter):
            verify_derivative_at_zero(1.0, PI / 3.0, h_sequence=[1e-3, 2e-3])


class TestMonotone:
    def test_passes_on_principal_branch(self):
        grid = [-5.0 + 0.25 * i for i in range(40)]
        rep = verify_monotone_in_K(1.0, [t for t in grid if t < (PI - 1e-3) ** 2])
        assert rep.passed
        assert rep.tolerance == 0.0

    def test_grid_must_increase(self):
        with pytest.raises(BadParameter):
            verify_monotone_in_K(1.0, [1.0, 0.5])


class TestSignPattern:
    def test_passes_inside_first_zero(self):
        rep = verify_sign_pattern(4.0, (PI / 6.0, PI / 2.0, 2.0 * PI / 3.0), 1e-2)
        assert rep.passed

    def test_precondition_outside_first_zero(self):
        # at K=4 the circle curvature vanishes at r=pi/4 and turns negative
        with pytest.raises(PreconditionFailed):
            verify_sign_pattern(4.0, (PI / 6.0,), 1.0)


class TestNumericVsClosedForm:
    def test_all_surfaces_pass(self):
        for surface, R, theta in (
            ("plane", 1.0, PI / 4.0),
            ("sphere", 1.0, PI / 4.0),
            ("pseudosphere", 1.0, PI / 3.0),
        ):
            rep = verify_numeric_vs_closed_form(surface, R, theta, sample_count=10)
            assert rep.passed, rep.to_text_line()

    def test_unknown_surface(self):
        with pytest.raises(BadParameter):
            verify_numeric_vs_closed_form("torus", 1.0, PI / 4.0)

    def test_sample_count_validated(self):
        with pytest.raises(BadParameter):
            verify_numeric_vs_closed_form("plane", 1.0, PI / 4.0, sample_count=1)


class TestSuites:
    def test_unknown_suite(self):
        with pytest.raises(BadParameter):
            run_suites("everything")

    def test_analysis_suite_green(self):
        reports = run_suites("analysis")
        assert reports and all(r.passed for r in reports)

    def test_scaled_tolerances_propagate(self):
        loose = run_suites("analysis", tol_scale=100.0)
        strict = {r.check_name: r for r in run_suites("analysis")}
        for rep in loose:
            base = strict[rep.check_name]
            if base.tolerance > 0.0 and base.check_name != "analysis.ratio_limit.slope":
                assert rep.tolerance >= base.tolerance
