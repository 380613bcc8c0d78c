"""
Two-term states, scenarios and bi-orthogonal superposition spectra

Components:
- construction: validated constructors and the Schmidt spectrum of a superposition
"""

from .construction import (
    gamma_spectra,
    make_probability_vector,
    make_scenario,
    make_two_term_state,
    make_weights,
    pairwise_inconvertible,
    superposition_schmidt,
    superposition_schmidt_order,
)

__all__ = [
    "gamma_spectra",
    "make_probability_vector",
    "make_scenario",
    "make_two_term_state",
    "make_weights",
    "pairwise_inconvertible",
    "superposition_schmidt",
    "superposition_schmidt_order",
]
