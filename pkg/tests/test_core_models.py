"""
Unit tests for locc_superposition.core.models module

Tests intervals, states, spectra, verdict helpers and the sweep IO models.
"""

from fractions import Fraction as F

import pytest
from pydantic import ValidationError

from locc_superposition.core.models import (
    AlphaRegion,
    ConversionVerdict,
    Interval,
    MismatchRecord,
    ProbabilityVector,
    PROPERTY_NAMES,
    RegimeTag,
    Scenario,
    SweepConfig,
    SweepReport,
    TwoTermState,
)


class TestInterval:
    """Test Interval membership and rendering"""

    def test_open_and_closed_endpoints(self):
        interval = Interval(F(7, 10), F(8, 9), lo_closed=True)
        assert interval.contains(F(7, 10))
        assert not interval.contains(F(8, 9))
        assert interval.contains(F(4, 5))

    def test_real_tolerance_on_closed_endpoints(self):
        interval = Interval(0.7, 0.8, lo_closed=True, hi_closed=True)
        assert interval.contains(0.8 + 1e-13)
        assert not interval.contains(0.8 + 1e-9)
        assert not Interval(0.7, 0.8).contains(0.8)

    @pytest.mark.parametrize("interval,empty", [
        (Interval(F(1), F(1), lo_closed=True, hi_closed=True), False),
        (Interval(F(1), F(1), lo_closed=True), True),
        (Interval(F(2), F(1), lo_closed=True, hi_closed=True), True),
        (Interval(0.1, 0.2), False),
    ])
    def test_is_empty(self, interval, empty):
        assert interval.is_empty is empty

    def test_width_and_midpoint(self):
        interval = Interval(F(1, 2), F(3, 4))
        assert interval.width == F(1, 4)
        assert interval.midpoint == F(5, 8)
        assert Interval(F(2), F(1)).width == 0

    def test_distance_to_boundary(self):
        assert Interval(0.2, 0.6).distance_to_boundary(0.5) == pytest.approx(0.1)

    def test_notation(self):
        assert Interval(F(7, 10), F(8, 9), lo_closed=True).notation() == "[7/10, 8/9)"
        assert Interval(0.5, 2 / 3, hi_closed=True).notation() == "(0.5, 0.666667]"


class TestStates:
    """Test two-term states and scenarios"""

    def test_coefficients(self):
        state = TwoTermState(F(9, 10))
        assert state.coefficients.entries == (F(9, 10), F(1, 10))
        assert state.is_exact

    def test_entanglement(self):
        assert TwoTermState(0.9).entanglement == pytest.approx(0.4690, abs=5e-5)

    def test_scenario_states(self, worked_scenario):
        assert [state.p for state in worked_scenario.states] == [F(9, 10), F(4, 5), F(7, 10), F(3, 5)]
        assert worked_scenario.is_exact
        assert not worked_scenario.as_real().is_exact
        assert worked_scenario.as_real().as_tuple() == (0.9, 0.8, 0.7, 0.6)

    def test_pairwise_inconvertible(self, worked_scenario, r1_scenario):
        assert worked_scenario.pairwise_inconvertible()
        assert r1_scenario.pairwise_inconvertible()


class TestProbabilityVector:
    """Test the Schmidt vector container"""

    def test_sequence_protocol(self):
        v = ProbabilityVector((F(1, 2), F(1, 4), F(1, 4)))
        assert len(v) == 3
        assert v[1] == F(1, 4)
        assert list(v) == [F(1, 2), F(1, 4), F(1, 4)]
        assert v.dimension == 3

    def test_schmidt_number_ignores_zeros(self):
        assert ProbabilityVector((F(1), F(0), F(0))).schmidt_number == 1

    def test_padding_keeps_mode(self):
        exact = ProbabilityVector((F(1, 2), F(1, 2))).padded(4)
        assert exact.entries[-1] == F(0) and exact.is_exact
        real = ProbabilityVector((0.5, 0.5)).padded(3)
        assert real.entries == (0.5, 0.5, 0.0)
        assert ProbabilityVector((0.5, 0.5)).padded(1).dimension == 2

    def test_as_real(self):
        assert ProbabilityVector((F(3, 4), F(1, 4))).as_real().entries == (0.75, 0.25)


class TestVerdicts:
    """Test verdict and region helpers"""

    def test_conversion_verdict_helpers(self):
        verdict = ConversionVerdict(
            convertible=False,
            margins=(F(11, 200), F(-1, 100), F(0), F(0)),
            first_failure=2,
        )
        assert verdict.dimension == 4
        assert verdict.min_margin == F(-1, 100)
        assert verdict.failures == (2,)

    def test_alpha_region(self):
        region = AlphaRegion(
            intervals=(Interval(0.0, 0.1394), Interval(0.8354, 1.0)),
            root_tolerance=1e-6,
        )
        assert region.contains(0.1)
        assert not region.contains(0.5)
        assert region.measure == pytest.approx(0.1394 + 0.1646)
        assert not region.is_empty
        assert AlphaRegion(intervals=(), root_tolerance=1e-6).is_empty


class TestSweepModels:
    """Test sweep configuration and report models"""

    def test_config_is_frozen(self):
        cfg = SweepConfig(samples=10)
        with pytest.raises(ValidationError):
            cfg.samples = 20

    def test_config_validation(self):
        with pytest.raises(ValidationError):
            SweepConfig(samples=10, boundary_margin=-1.0)

    def test_report_defaults(self):
        report = SweepReport(config=SweepConfig(samples=1))
        assert report.mismatches_by_regime == {"R1": 0, "R2": 0, "R3": 0}
        assert set(report.property_failures) == set(PROPERTY_NAMES)
        assert report.passed
        assert report.consistent

    def test_explained_mismatches_are_consistent_but_not_passed(self):
        report = SweepReport(
            config=SweepConfig(samples=2),
            total=2,
            agreements=1,
            mismatches=1,
            explained_mismatches=1,
        )
        assert not report.passed
        assert report.consistent

    def test_property_failures_fail_both(self):
        failures = {name: 0 for name in PROPERTY_NAMES}
        failures["appendix_a1"] = 1
        report = SweepReport(config=SweepConfig(samples=1), property_failures=failures)
        assert report.property_failure_total == 1
        assert not report.passed
        assert not report.consistent

    def test_mismatch_record(self):
        record = MismatchRecord(
            index=3, regime="R1", xi1=0.81, eta1=0.8, xi2=0.79, eta2=0.51,
            alpha1=0.81, alpha2=0.9, proposition_convertible=True,
            oracle_convertible=False, first_failure=3, appendix_b_holds=False,
        )
        assert record.regime is RegimeTag.R1
        assert record.model_dump(mode="json")["regime"] == "R1"
