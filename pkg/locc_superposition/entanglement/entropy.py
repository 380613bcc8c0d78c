"""
Entropy of entanglement and the superposition entropy equality.

All entropies are base-2 and computed in double precision, also for rational
inputs. ``xlogy`` supplies the 0*log(0) := 0 convention.

For bi-orthogonal superpositions the entropy splits as
E(Gamma) = alpha*E(phi) + (1-alpha)*E(psi) + h2(alpha).
Since LOCC cannot increase entanglement, Gamma1 -> Gamma2 requires
E(Gamma2) < E(Gamma1); after cancelling the common terms that reads
g(alpha2) < threshold(alpha1) with

    g(alpha2)         = h2(alpha2) + alpha2*[E(phi2) - E(psi2)]
    threshold(alpha1) = h2(alpha1) + alpha1*[E(phi1) - E(psi1)] + E(psi1) - E(psi2)
"""

import math
from typing import Tuple

import numpy as np
from scipy.special import xlogy

from ..core.errors import OutOfRange
from ..core.models import NecessaryCondition, ProbabilityVector, Scenario, TwoTermState
from ..core.numbers import DEFAULT_TOLERANCE


LN2 = math.log(2.0)


def binary_entropy(x) -> float:
    """h2(x) = -x log2 x - (1-x) log2(1-x); exactly 0 at both endpoints"""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise OutOfRange("x", x, "0 <= x <= 1")
    return float(-(xlogy(x, x) + xlogy(1.0 - x, 1.0 - x)) / LN2) + 0.0


def binary_entropy_array(x: np.ndarray) -> np.ndarray:
    """Vectorized h2 for grids; no range validation"""
    x = np.asarray(x, dtype=float)
    return -(xlogy(x, x) + xlogy(1.0 - x, 1.0 - x)) / LN2


def von_neumann_entropy(v: ProbabilityVector) -> float:
    """-sum p_j log2 p_j of a Schmidt spectrum"""
    p = np.asarray(v.entries, dtype=float)
    return float(-np.sum(xlogy(p, p)) / LN2) + 0.0


def superposition_entropy(e_phi, e_psi, alpha) -> float:
    """alpha*E(phi) + (1-alpha)*E(psi) + h2(alpha) for bi-orthogonal phi, psi"""
    e_phi, e_psi, alpha = float(e_phi), float(e_psi), float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRange("alpha", alpha, "0 <= alpha <= 1")
    if e_phi < 0.0:
        raise OutOfRange("E_phi", e_phi, ">= 0")
    if e_psi < 0.0:
        raise OutOfRange("E_psi", e_psi, ">= 0")
    return alpha * e_phi + (1.0 - alpha) * e_psi + binary_entropy(alpha)


def entanglement_of(state: TwoTermState) -> float:
    return binary_entropy(state.p)


def state_entropies(s: Scenario) -> Tuple[float, float, float, float]:
    """(E(phi1), E(psi1), E(phi2), E(psi2))"""
    return tuple(entanglement_of(state) for state in s.states)


def gamma_entropies(s: Scenario, alpha1, alpha2) -> Tuple[float, float]:
    """(E(Gamma1), E(Gamma2)) from the superposition equality"""
    e_phi1, e_psi1, e_phi2, e_psi2 = state_entropies(s)
    return (
        superposition_entropy(e_phi1, e_psi1, alpha1),
        superposition_entropy(e_phi2, e_psi2, alpha2),
    )


def slope(s: Scenario) -> float:
    """E(phi2) - E(psi2); negative for every valid scenario"""
    return binary_entropy(s.xi2) - binary_entropy(s.eta2)


def g(s: Scenario, alpha2) -> float:
    return binary_entropy(alpha2) + float(alpha2) * slope(s)


def threshold(s: Scenario, alpha1) -> float:
    e_phi1, e_psi1, _, e_psi2 = state_entropies(s)
    alpha1 = float(alpha1)
    return binary_entropy(alpha1) + alpha1 * (e_phi1 - e_psi1) + e_psi1 - e_psi2


def _check_open_unit(name: str, value) -> None:
    if not 0 < value < 1:
        raise OutOfRange(name, value, "0 < value < 1")


def condition_gap(s: Scenario, alpha1, alpha2) -> float:
    """g(alpha2) - threshold(alpha1); negative where the condition holds"""
    _check_open_unit("alpha1", alpha1)
    _check_open_unit("alpha2", alpha2)
    return g(s, alpha2) - threshold(s, alpha1)


def necessary_condition(
    s: Scenario,
    alpha1,
    alpha2,
    tol: float = DEFAULT_TOLERANCE,
) -> NecessaryCondition:
    """
    Strict entropy condition E(Gamma2) < E(Gamma1).

    Differences smaller than ``tol`` are reported as BOUNDARY instead of
    being decided either way.
    """
    gap = condition_gap(s, alpha1, alpha2)
    if abs(gap) < tol:
        return NecessaryCondition.BOUNDARY
    if gap < 0:
        return NecessaryCondition.SATISFIED
    return NecessaryCondition.VIOLATED


__all__ = [
    "LN2",
    "binary_entropy",
    "binary_entropy_array",
    "von_neumann_entropy",
    "superposition_entropy",
    "entanglement_of",
    "state_entropies",
    "gamma_entropies",
    "slope",
    "g",
    "threshold",
    "condition_gap",
    "necessary_condition",
]
