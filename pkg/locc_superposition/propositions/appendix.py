"""
Inequalities used inside the regime proofs, exposed as predicates.

appendix_a1 and appendix_a2 hold on every valid scenario. appendix_b1 is only guaranteed on the
subdomain xi2 <= alpha1 <= T_low (see ``b1_provable``); elsewhere in R1 and
R2 it can fail, and exactly there the conversion criterion disagrees with
majorization.
"""

from ..config import get_config
from ..core.errors import HypothesisViolated, OutOfRange
from ..core.models import Scenario
from ..core.numbers import HALF, format_text, leq, unify
from .regimes import thresholds


def _t_high(xi, eta):
    return xi * eta / (1 - xi + eta)


def appendix_a1(s: Scenario) -> bool:
    """xi1*eta1/(1-xi1+eta1) > xi2*eta2/(1-xi2+eta2)"""
    return _t_high(s.xi1, s.eta1) > _t_high(s.xi2, s.eta2)


def appendix_a2(xi, eta) -> bool:
    """xi > eta/(1-xi+eta) for 1/2 < eta < xi < 1"""
    xi, eta = unify(xi, eta)
    if not HALF < eta < xi < 1:
        raise OutOfRange("(xi, eta)", (format_text(xi), format_text(eta)), "1/2 < eta < xi < 1")
    return xi > eta / (1 - xi + eta)


def appendix_b1(s: Scenario, alpha1, alpha2) -> bool:
    """
    (1-alpha1)(1-eta1) > (1-alpha2)(1-eta2), stated under alpha1*xi1 <= alpha2*xi2.

    Raises HypothesisViolated when alpha1*xi1 > alpha2*xi2.
    """
    xi1, eta1, xi2, eta2, alpha1, alpha2 = unify(*s.as_tuple(), alpha1, alpha2)
    for name, value in (("alpha1", alpha1), ("alpha2", alpha2)):
        if not 0 <= value <= 1:
            raise OutOfRange(name, value, "0 <= value <= 1")

    if not leq(alpha1 * xi1, alpha2 * xi2, get_config().numerics.real_tolerance):
        raise HypothesisViolated(
            "alpha1*xi1 <= alpha2*xi2",
            f"{format_text(alpha1 * xi1)} > {format_text(alpha2 * xi2)}",
        )
    return (1 - alpha1) * (1 - eta1) > (1 - alpha2) * (1 - eta2)


def b1_provable(s: Scenario, alpha1) -> bool:
    """Whether alpha1 lies in xi2 <= alpha1 <= T_low, where appendix_b1 always holds"""
    xi2, t_low, alpha1 = unify(s.xi2, thresholds(s).t_low, alpha1)
    return xi2 <= alpha1 <= t_low


__all__ = [
    "appendix_a1",
    "appendix_a2",
    "appendix_b1",
    "b1_provable",
]
