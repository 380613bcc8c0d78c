"""
LOCC conversion of superpositions of bi-orthogonal entangled states
===================================================================

Decides whether sqrt(a1)|phi1> + sqrt(1-a1)|psi1> can be turned into
sqrt(a2)|phi2> + sqrt(1-a2)|psi2> by local operations and classical
communication, where phi_i, psi_i are two-term states on mutually orthogonal
local supports.

Subpackages:
- states: scenarios and superposition Schmidt spectra
- majorization: Nielsen's criterion
- entanglement: entropies, the entropy necessary condition and its alpha2 region
- propositions: regime thresholds, the conversion criterion and proof inequalities
- oracle: brute-force decision and the seeded sweep harness
- cli: the ``locc-superpose`` command
"""

__version__ = "1.0.0"

from .core import (
    ChainViolation,
    ConfigInvalid,
    HypothesisViolated,
    LoccError,
    NumberParseError,
    OutOfRange,
    parse_number,
)
from .entanglement import alpha2_region, binary_entropy, necessary_condition, von_neumann_entropy
from .majorization import majorizes
from .oracle import brute_force_convertible, run_sweep
from .propositions import classify_regimes, convertible_iff, min_alpha2, thresholds
from .states import make_scenario, make_two_term_state, superposition_schmidt

__all__ = [
    "__version__",
    "ChainViolation",
    "ConfigInvalid",
    "HypothesisViolated",
    "LoccError",
    "NumberParseError",
    "OutOfRange",
    "parse_number",
    "alpha2_region",
    "binary_entropy",
    "necessary_condition",
    "von_neumann_entropy",
    "majorizes",
    "brute_force_convertible",
    "run_sweep",
    "classify_regimes",
    "convertible_iff",
    "min_alpha2",
    "thresholds",
    "make_scenario",
    "make_two_term_state",
    "superposition_schmidt",
]
