"""
Brute-force conversion oracle: build both superposition spectra and run the
majorization test. Independent of the regime propositions.
"""

from ..config import get_config
from ..core.models import ConversionVerdict, Scenario
from ..majorization import majorizes
from ..states import gamma_spectra


def brute_force_convertible(s: Scenario, alpha1, alpha2) -> ConversionVerdict:
    """Gamma1 -> Gamma2 by Nielsen's criterion; alphas in [0, 1]"""
    source, target = gamma_spectra(s, alpha1, alpha2)
    return majorizes(source, target, get_config().numerics.real_tolerance)


__all__ = ["brute_force_convertible"]
