"""
Unit tests for locc_superposition.states module

Tests state and scenario validation and the superposition Schmidt spectrum.
"""

from fractions import Fraction as F

import pytest

from conftest import random_scenario
from locc_superposition.core.errors import ChainViolation, OutOfRange
from locc_superposition.core.models import ProbabilityVector
from locc_superposition.states import (
    gamma_spectra,
    make_probability_vector,
    make_scenario,
    make_two_term_state,
    make_weights,
    pairwise_inconvertible,
    superposition_schmidt,
    superposition_schmidt_order,
)


class TestTwoTermState:
    """Test two-term state construction"""

    def test_valid_state(self):
        """9/10 gives coefficients (9/10, 1/10)"""
        state = make_two_term_state(F(9, 10))
        assert state.coefficients.entries == (F(9, 10), F(1, 10))
        assert state.is_exact

    @pytest.mark.parametrize("p", [F(1, 2), F(1), F(2, 5), 1.2])
    def test_boundaries_rejected(self, p):
        with pytest.raises(OutOfRange):
            make_two_term_state(p)

    def test_entanglement_is_binary_entropy(self):
        assert make_two_term_state(0.9).entanglement == pytest.approx(0.4690, abs=5e-5)


class TestScenario:
    """Test the 1/2 < eta2 < xi2 < eta1 < xi1 < 1 chain"""

    def test_worked_scenario_is_valid(self):
        s = make_scenario(F(9, 10), F(4, 5), F(7, 10), F(3, 5))
        assert s.is_exact
        assert [state.p for state in s.states] == [F(9, 10), F(4, 5), F(7, 10), F(3, 5)]

    def test_equality_breaks_chain(self):
        """xi2 = eta1 violates strictness"""
        with pytest.raises(ChainViolation) as excinfo:
            make_scenario(F(9, 10), F(4, 5), F(4, 5), F(3, 5))
        assert excinfo.value.inequality == "xi2 < eta1"

    def test_ordering_violation_named(self):
        with pytest.raises(ChainViolation) as excinfo:
            make_scenario(F(7, 10), F(4, 5), F(3, 5), F(11, 20))
        assert excinfo.value.inequality == "eta1 < xi1"

    @pytest.mark.parametrize("values,inequality", [
        ((0.9, 0.8, 0.7, 0.5), "1/2 < eta2"),
        ((0.9, 0.8, 0.6, 0.65), "eta2 < xi2"),
        ((1.0, 0.8, 0.7, 0.6), "xi1 < 1"),
    ])
    def test_first_failing_inequality_is_reported(self, values, inequality):
        with pytest.raises(ChainViolation) as excinfo:
            make_scenario(*values)
        assert excinfo.value.inequality == inequality

    def test_mixed_inputs_become_real(self):
        s = make_scenario("9/10", 0.8, "7/10", "3/5")
        assert not s.is_exact
        assert s.xi1 == 0.9

    def test_pairwise_inconvertible(self, worked_scenario, rng):
        """No individual state converts into a target state"""
        assert pairwise_inconvertible(worked_scenario)
        assert worked_scenario.pairwise_inconvertible()
        for _ in range(200):
            assert pairwise_inconvertible(random_scenario(rng))


class TestSuperpositionSchmidt:
    """Test the Schmidt spectrum of a bi-orthogonal superposition"""

    def test_gamma1_of_worked_example(self):
        spectrum = superposition_schmidt(F(9, 10), F(4, 5), F(3, 5))
        assert spectrum.entries == tuple(F(n, 200) for n in (108, 64, 16, 12))

    def test_gamma2_of_worked_example(self):
        spectrum = superposition_schmidt(F(7, 10), F(3, 5), F(17, 20))
        assert spectrum.entries == tuple(F(n, 200) for n in (119, 51, 18, 12))

    def test_alpha_one_collapses_to_phi(self):
        spectrum = superposition_schmidt(F(9, 10), F(4, 5), F(1))
        assert spectrum.entries == (F(9, 10), F(1, 10), F(0), F(0))
        assert spectrum.schmidt_number == 2

    def test_exact_sum_is_one(self):
        spectrum = superposition_schmidt(F(13, 17), F(5, 9), F(2, 7))
        assert sum(spectrum.entries) == 1
        assert spectrum.is_exact

    @pytest.mark.parametrize("xi,eta,alpha", [
        (F(1, 2), F(3, 5), F(1, 2)),
        (F(9, 10), F(1), F(1, 2)),
        (F(9, 10), F(4, 5), F(-1, 10)),
        (0.9, 0.8, 1.5),
    ])
    def test_out_of_range(self, xi, eta, alpha):
        with pytest.raises(OutOfRange):
            superposition_schmidt(xi, eta, alpha)

    def test_sorted_unit_sum_property(self, rng):
        """Four entries, non-increasing, summing to one"""
        for _ in range(1000):
            xi, eta = rng.uniform(0.5 + 1e-9, 1.0, size=2).tolist()
            alpha = float(rng.uniform(0.0, 1.0))
            spectrum = superposition_schmidt(xi, eta, alpha)
            assert len(spectrum) == 4
            assert sum(spectrum) == pytest.approx(1.0, abs=1e-12)
            assert all(a >= b for a, b in zip(spectrum, spectrum.entries[1:]))

    def test_permutation_insensitivity(self, rng):
        """(xi, eta, alpha) and (eta, xi, 1-alpha) give the same spectrum"""
        for _ in range(200):
            xi = F(int(rng.integers(501, 1000)), 1000)
            eta = F(int(rng.integers(501, 1000)), 1000)
            alpha = F(int(rng.integers(0, 1001)), 1000)
            assert superposition_schmidt(xi, eta, alpha) == superposition_schmidt(eta, xi, 1 - alpha)

    def test_order_uses_construction_indices(self):
        """108/200 = alpha*xi, 64/200 = (1-alpha)*eta, 16/200 = (1-alpha)*(1-eta), 12/200 = alpha*(1-xi)"""
        assert superposition_schmidt_order(F(9, 10), F(4, 5), F(3, 5)) == (0, 2, 3, 1)
        assert superposition_schmidt_order(F(9, 10), F(4, 5), F(3, 4)) == (0, 2, 1, 3)

    def test_ties_keep_construction_order(self):
        """alpha = 1/2 and xi = eta make pairs of equal entries"""
        assert superposition_schmidt_order(F(3, 4), F(3, 4), F(1, 2)) == (0, 2, 1, 3)

    def test_gamma_spectra(self, worked_scenario):
        gamma1, gamma2 = gamma_spectra(worked_scenario, F(3, 4), F(49, 50))
        assert gamma1.entries == tuple(F(n, 1000) for n in (675, 200, 75, 50))
        assert gamma2.entries == tuple(F(n, 1000) for n in (686, 294, 12, 8))


class TestProbabilityVector:
    """Test probability vector validation"""

    def test_sorts_by_default(self):
        v = make_probability_vector([F(1, 4), F(1, 2), F(1, 4)])
        assert v.entries == (F(1, 2), F(1, 4), F(1, 4))

    def test_unsorted_rejected_without_sort(self):
        with pytest.raises(OutOfRange):
            make_probability_vector([0.25, 0.75], sort=False)

    def test_sum_must_be_one(self):
        with pytest.raises(OutOfRange):
            make_probability_vector([F(1, 2), F(1, 3)])
        with pytest.raises(OutOfRange):
            make_probability_vector([0.5, 0.4999])

    def test_real_sum_tolerance(self):
        v = make_probability_vector([0.1, 0.2, 0.7000000000000001])
        assert v.dimension == 3

    def test_negative_entries_rejected(self):
        with pytest.raises(OutOfRange):
            make_probability_vector([1.5, -0.5])

    def test_padding(self):
        v = ProbabilityVector((F(1, 2), F(1, 2))).padded(4)
        assert v.entries == (F(1, 2), F(1, 2), F(0), F(0))
        assert v.schmidt_number == 2


class TestWeights:
    """Test superposition weights"""

    def test_closed_interval(self):
        w = make_weights(0, 1)
        assert (w.alpha1, w.alpha2) == (F(0), F(1))

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            make_weights(F(1, 2), F(3, 2))
