"""
Unit tests for locc_superposition.propositions module

Tests thresholds, regime classification, the alpha1*xi1 <= alpha2*xi2
criterion and the inequalities used in its proofs.
"""

import logging
from fractions import Fraction as F

import pytest

from conftest import random_scenario
from locc_superposition.core.errors import HypothesisViolated, OutOfRange
from locc_superposition.core.models import RegimeTag, Scenario
from locc_superposition.oracle import brute_force_convertible
from locc_superposition.propositions import (
    SCHMIDT_ORDERS,
    appendix_a1,
    appendix_a2,
    appendix_b1,
    b1_provable,
    classify_regimes,
    convertible_iff,
    min_alpha2,
    regime_catalog,
    schmidt_order_lemma,
    thresholds,
)
from locc_superposition.states import superposition_schmidt_order


def tags(regimes):
    return [r.tag for r in regimes]


class TestThresholds:
    """Test T_low, T_high and A"""

    def test_exact_scenario(self, worked_scenario):
        t = thresholds(worked_scenario)
        assert t.t_high == F(4, 5)
        assert t.t_low == F(2, 3)
        assert t.a == F(8, 9)
        assert t.as_tuple() == (F(2, 3), F(4, 5), F(8, 9))

    def test_real_scenario(self, r1_scenario):
        t = thresholds(r1_scenario)
        assert t.t_high == pytest.approx(0.68 / 0.95)
        assert t.t_low == pytest.approx(0.2 / 0.35)
        assert t.a == pytest.approx(0.8 / 0.95)


class TestClassifyRegimes:
    """Test regime applicability"""

    def test_r2_example(self, worked_scenario):
        regimes = classify_regimes(worked_scenario)
        assert tags(regimes) == [RegimeTag.R2]
        interval = regimes[0].alpha1_interval
        assert (interval.lo, interval.hi) == (F(7, 10), F(8, 9))
        assert interval.lo_closed and not interval.hi_closed

    def test_r1_example(self, r1_scenario):
        regimes = classify_regimes(r1_scenario)
        assert tags(regimes) == [RegimeTag.R1]
        interval = regimes[0].alpha1_interval
        assert interval.lo == pytest.approx(0.8421, abs=1e-4)
        assert interval.hi == pytest.approx(0.8824, abs=1e-4)
        assert interval.lo_closed and interval.hi_closed

    def test_r3_example(self, r3_scenario):
        regimes = classify_regimes(r3_scenario)
        assert tags(regimes) == [RegimeTag.R3]
        interval = regimes[0].alpha1_interval
        assert (interval.lo, interval.hi) == (F(3, 5), F(2, 3))

    def test_overlapping_claims_are_all_returned(self):
        """T_low > T_high: R1 and R3 both claim xi2"""
        s = Scenario(0.6, 0.55, 0.52, 0.51)
        t = thresholds(s)
        assert t.t_low > t.t_high
        assert tags(classify_regimes(s)) == [RegimeTag.R1, RegimeTag.R3]

    def test_empty_r1_range_is_reported(self):
        s = Scenario(0.95, 0.85, 0.8, 0.7)
        catalog = {r.tag: r for r in regime_catalog(s)}
        assert catalog[RegimeTag.R1].xi2_range_empty
        assert not catalog[RegimeTag.R1].applicable
        assert not catalog[RegimeTag.R2].xi2_range_empty
        assert tags(classify_regimes(s)) == [RegimeTag.R2]

    def test_catalog_lists_every_regime(self, worked_scenario):
        assert tags(regime_catalog(worked_scenario)) == list(RegimeTag)

    @pytest.mark.property
    def test_r1_interval_nonempty_iff_xi2_above_t_high(self, rng):
        for _ in range(5000):
            s = random_scenario(rng)
            t = thresholds(s)
            if abs(s.xi2 - t.t_high) < 1e-9:
                continue
            r1 = regime_catalog(s)[0]
            assert (not r1.alpha1_interval.is_empty) == (s.xi2 >= t.t_high)

    @pytest.mark.property
    def test_every_xi2_has_a_regime(self, rng):
        for _ in range(5000):
            assert classify_regimes(random_scenario(rng))


class TestMinAlpha2:
    """Test the infimum of admissible alpha2"""

    def test_worked_example(self, worked_scenario):
        bound = min_alpha2(worked_scenario, F(3, 4))
        assert bound.value == F(27, 28)
        assert bound.feasible

    def test_boundary_is_one(self, worked_scenario):
        bound = min_alpha2(worked_scenario, F(7, 9))
        assert bound.value == 1
        assert bound.feasible

    def test_alpha1_equal_xi2_gives_xi1(self, worked_scenario):
        assert min_alpha2(worked_scenario, F(7, 10)).value == F(9, 10)

    def test_half_floor(self, worked_scenario):
        assert min_alpha2(worked_scenario, F(3, 10)).value == F(1, 2)

    def test_infeasible_is_flagged(self, worked_scenario, caplog):
        package_logger = logging.getLogger("locc_superposition")
        package_logger.addHandler(caplog.handler)
        try:
            bound = min_alpha2(worked_scenario, F(4, 5))
        finally:
            package_logger.removeHandler(caplog.handler)
        assert bound.value == F(36, 35)
        assert not bound.feasible
        assert "No admissible alpha2" in caplog.text

    def test_alpha1_out_of_range(self, worked_scenario):
        with pytest.raises(OutOfRange):
            min_alpha2(worked_scenario, 0)


class TestConvertibleIff:
    """Test the conversion criterion"""

    def test_convertible_example(self, worked_scenario):
        verdict = convertible_iff(worked_scenario, F(3, 4), F(49, 50))
        assert verdict.hypotheses_met
        assert verdict.convertible is True
        assert verdict.regime is RegimeTag.R2
        assert verdict.criterion_margin == F(49, 50) * F(7, 10) - F(3, 4) * F(9, 10)
        assert verdict.appendix_b_holds is True
        assert verdict.reason == "R2: alpha1*xi1 <= alpha2*xi2"

    def test_not_convertible_example(self, worked_scenario):
        verdict = convertible_iff(worked_scenario, F(3, 4), F(19, 20))
        assert verdict.hypotheses_met
        assert verdict.convertible is False
        assert verdict.appendix_b_holds is None
        assert verdict.reason == "R2: alpha1*xi1 > alpha2*xi2"

    def test_equality_is_convertible(self, worked_scenario):
        verdict = convertible_iff(worked_scenario, F(3, 4), F(27, 28))
        assert verdict.convertible is True
        assert verdict.criterion_margin == 0

    def test_real_inputs(self, worked_scenario):
        assert convertible_iff(worked_scenario, 0.75, 0.98).convertible is True
        assert convertible_iff(worked_scenario, 0.75, 0.95).convertible is False

    def test_alpha1_outside_interval(self, worked_scenario):
        verdict = convertible_iff(worked_scenario, F(1, 2), F(9, 10))
        assert not verdict.hypotheses_met
        assert verdict.convertible is None
        assert "lies outside" in verdict.reason
        assert verdict.min_alpha2.value == F(9, 14)

    def test_alpha2_not_above_half(self, worked_scenario):
        verdict = convertible_iff(worked_scenario, F(3, 4), F(1, 2))
        assert not verdict.hypotheses_met
        assert verdict.regime is RegimeTag.R2
        assert verdict.reason == "alpha2=1/2 is not above 1/2"

    @pytest.mark.parametrize("alpha1,alpha2", [(0, F(1, 2)), (F(3, 4), 1), (F(-1, 2), F(1, 2))])
    def test_alphas_out_of_range(self, worked_scenario, alpha1, alpha2):
        with pytest.raises(OutOfRange):
            convertible_iff(worked_scenario, alpha1, alpha2)

    def test_agrees_with_oracle_in_r3(self, r3_scenario):
        for alpha2 in (F(9, 10), F(89, 100), F(19, 20)):
            verdict = convertible_iff(r3_scenario, F(3, 5), alpha2)
            assert verdict.hypotheses_met
            assert verdict.convertible == brute_force_convertible(r3_scenario, F(3, 5), alpha2).convertible

    def test_r1_counterexample(self, r1_counterexample):
        """The criterion holds, appendix_b1 fails and majorization fails at k=3"""
        s, alpha1, alpha2 = r1_counterexample
        verdict = convertible_iff(s, alpha1, alpha2)
        assert verdict.regime is RegimeTag.R1
        assert verdict.convertible is True
        assert verdict.appendix_b_holds is False

        oracle = brute_force_convertible(s, alpha1, alpha2)
        assert not oracle.convertible
        assert oracle.first_failure == 3
        assert oracle.margins[2] == F(-11, 1000)

    def test_r2_counterexample(self, r2_counterexample):
        s, alpha1, alpha2 = r2_counterexample
        verdict = convertible_iff(s, alpha1, alpha2)
        assert verdict.regime is RegimeTag.R2
        assert verdict.convertible is True
        assert verdict.appendix_b_holds is False
        assert brute_force_convertible(s, alpha1, alpha2).first_failure == 3

    @pytest.mark.property
    def test_r3_agrees_with_oracle_on_random_samples(self, rng):
        checked = 0
        for _ in range(3000):
            s = random_scenario(rng)
            r3 = regime_catalog(s)[2]
            if not r3.applicable or r3.alpha1_interval.width < 1e-6:
                continue
            interval = r3.alpha1_interval
            alpha1 = float(rng.uniform(interval.lo, interval.hi))
            alpha2 = float(rng.uniform(0.5 + 1e-9, 1.0 - 1e-9))
            verdict = convertible_iff(s, alpha1, alpha2)
            if abs(verdict.criterion_margin) < 1e-9:
                continue
            checked += 1
            assert verdict.convertible == brute_force_convertible(s, alpha1, alpha2).convertible
        assert checked > 0


class TestAppendixInequalities:
    """Test the proof inequalities as predicates"""

    def test_a1_examples(self, worked_scenario, r1_scenario):
        assert appendix_a1(worked_scenario)
        assert appendix_a1(r1_scenario)

    @pytest.mark.parametrize("xi,eta", [(F(7, 10), F(3, 5)), (0.75, 0.7), (F(9, 10), F(4, 5))])
    def test_a2_examples(self, xi, eta):
        assert appendix_a2(xi, eta)

    @pytest.mark.parametrize("xi,eta", [(0.6, 0.7), (0.7, 0.5), (1, 0.7)])
    def test_a2_out_of_range(self, xi, eta):
        with pytest.raises(OutOfRange):
            appendix_a2(xi, eta)

    def test_b1_example(self, worked_scenario):
        assert appendix_b1(worked_scenario, F(3, 4), F(49, 50))

    def test_b1_alpha2_one(self, worked_scenario):
        assert appendix_b1(worked_scenario, F(3, 4), 1)

    def test_b1_hypothesis_violated(self, worked_scenario):
        with pytest.raises(HypothesisViolated) as exc_info:
            appendix_b1(worked_scenario, F(3, 4), F(9, 10))
        assert exc_info.value.hypothesis == "alpha1*xi1 <= alpha2*xi2"

    def test_b1_fails_on_counterexamples(self, r1_counterexample, r2_counterexample):
        for s, alpha1, alpha2 in (r1_counterexample, r2_counterexample):
            assert not appendix_b1(s, alpha1, alpha2)
            assert not b1_provable(s, alpha1)

    def test_b1_provable_domain(self, worked_scenario, r3_scenario):
        assert not b1_provable(worked_scenario, F(3, 4))
        assert b1_provable(r3_scenario, F(3, 5))
        assert b1_provable(r3_scenario, F(2, 3))
        assert not b1_provable(r3_scenario, F(7, 10))

    @pytest.mark.property
    def test_a1_a2_hold_on_random_scenarios(self, rng):
        for _ in range(10_000):
            s = random_scenario(rng)
            assert appendix_a1(s)
            assert appendix_a2(s.xi1, s.eta1)
            assert appendix_a2(s.xi2, s.eta2)

    @pytest.mark.property
    def test_b1_holds_where_provable(self, rng):
        checked = 0
        for _ in range(5000):
            s = random_scenario(rng)
            t_low = thresholds(s).t_low
            if t_low - s.xi2 < 1e-6:
                continue
            alpha1 = float(rng.uniform(s.xi2, t_low))
            lo = alpha1 * s.xi1 / s.xi2
            if lo >= 1.0 - 1e-9:
                continue
            alpha2 = float(rng.uniform(lo, 1.0))
            if alpha1 * s.xi1 > alpha2 * s.xi2:
                continue
            checked += 1
            assert b1_provable(s, alpha1)
            assert appendix_b1(s, alpha1, alpha2)
        assert checked > 0


class TestSchmidtOrderLemma:
    """Test the Gamma1 spectrum order asserted in each regime"""

    def test_examples(self, worked_scenario, r3_scenario):
        assert schmidt_order_lemma(worked_scenario, RegimeTag.R1, F(9, 10)) == (0, 1, 2, 3)
        assert schmidt_order_lemma(worked_scenario, RegimeTag.R2, F(3, 4)) == (0, 2, 1, 3)
        assert schmidt_order_lemma(r3_scenario, "R3", F(3, 5)) == (0, 2, 3, 1)

    def test_matches_constructed_order(self, worked_scenario, r3_scenario):
        assert superposition_schmidt_order(F(9, 10), F(4, 5), F(3, 4)) == SCHMIDT_ORDERS[RegimeTag.R2]
        assert superposition_schmidt_order(F(9, 10), F(4, 5), F(3, 5)) == SCHMIDT_ORDERS[RegimeTag.R3]

    @pytest.mark.parametrize("tag,alpha1", [
        (RegimeTag.R1, F(3, 4)),
        (RegimeTag.R2, F(9, 10)),
        (RegimeTag.R2, F(3, 5)),
        (RegimeTag.R3, F(3, 4)),
        (RegimeTag.R3, F(1, 2)),
    ])
    def test_outside_range(self, worked_scenario, tag, alpha1):
        with pytest.raises(HypothesisViolated):
            schmidt_order_lemma(worked_scenario, tag, alpha1)

    @pytest.mark.property
    def test_lemmas_on_random_samples(self, rng):
        """Sampled orders match the lemma away from ties"""
        for _ in range(5000):
            s = random_scenario(rng)
            t = thresholds(s)
            ranges = {
                RegimeTag.R1: (t.a, 1.0),
                RegimeTag.R2: (max(t.t_low, 0.5), t.a),
                RegimeTag.R3: (0.5, t.t_low),
            }
            for tag, (lo, hi) in ranges.items():
                if hi - lo < 1e-6:
                    continue
                alpha1 = float(rng.uniform(lo + 1e-9, hi - 1e-9))
                order = schmidt_order_lemma(s, tag, alpha1)
                assert superposition_schmidt_order(s.xi1, s.eta1, alpha1) == order
