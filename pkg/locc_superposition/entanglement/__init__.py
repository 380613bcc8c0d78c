"""
Entanglement measures and the entropy necessary condition

Components:
- entropy: binary/von Neumann entropy, superposition entropy, condition helpers
- region: alpha2 region solver and plotting curve
"""

from .entropy import (
    binary_entropy,
    binary_entropy_array,
    condition_gap,
    entanglement_of,
    g,
    gamma_entropies,
    necessary_condition,
    slope,
    state_entropies,
    superposition_entropy,
    threshold,
    von_neumann_entropy,
)
from .region import CurvePoint, alpha2_region, maximizer, region_curve, solve_region

__all__ = [
    "binary_entropy",
    "binary_entropy_array",
    "condition_gap",
    "entanglement_of",
    "g",
    "gamma_entropies",
    "necessary_condition",
    "slope",
    "state_entropies",
    "superposition_entropy",
    "threshold",
    "von_neumann_entropy",
    "CurvePoint",
    "alpha2_region",
    "maximizer",
    "region_curve",
    "solve_region",
]
