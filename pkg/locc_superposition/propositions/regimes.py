"""
Regime classification and the alpha1*xi1 <= alpha2*xi2 conversion criterion.

For a scenario the position of xi2 relative to two thresholds of (xi1, eta1)
selects a regime:

    R1  xi2 in [T_high, 1)      alpha1 in [A, xi2/xi1]
    R2  xi2 in [T_low, T_high)  alpha1 in [xi2, A)
    R3  xi2 in (1/2, T_low)     alpha1 in [xi2, T_low]

with T_low = (1-eta1)/(2-xi1-eta1), T_high = xi1*eta1/(1-xi1+eta1) and
A = eta1/(1-xi1+eta1). Inside a regime, with alpha2 > 1/2, the proposition
states that Gamma1 -> Gamma2 iff alpha1*xi1 <= alpha2*xi2.

When T_low > T_high several regimes can claim the same xi2; all of them are
returned. The brute-force oracle remains the authoritative decision.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..config import get_config
from ..core.errors import HypothesisViolated, OutOfRange
from ..core.models import (
    Alpha2Bound,
    Interval,
    PropositionVerdict,
    Regime,
    RegimeTag,
    Scenario,
    Thresholds,
)
from ..core.numbers import HALF, Number, format_text, geq, is_exact, leq, unify
from ..logging import get_logger

logger = get_logger(__name__)

# Construction indices (alpha*xi, alpha*(1-xi), (1-alpha)*eta, (1-alpha)*(1-eta))
# of the Gamma1 spectrum in the decreasing order each proof relies on
SCHMIDT_ORDERS: Dict[RegimeTag, Tuple[int, int, int, int]] = {
    RegimeTag.R1: (0, 1, 2, 3),
    RegimeTag.R2: (0, 2, 1, 3),
    RegimeTag.R3: (0, 2, 3, 1),
}


def _half(exact: bool) -> Number:
    return HALF if exact else 0.5


def _tolerance() -> float:
    return get_config().numerics.real_tolerance


def thresholds(s: Scenario) -> Thresholds:
    """T_low, T_high and A; exact for rational scenarios"""
    xi1, eta1 = s.xi1, s.eta1
    denominator = 1 - xi1 + eta1
    return Thresholds(
        t_low=(1 - eta1) / (2 - xi1 - eta1),
        t_high=xi1 * eta1 / denominator,
        a=eta1 / denominator,
    )


def _range_misses_chain(xi2_range: Interval, s: Scenario) -> bool:
    """True when the regime's xi2 range does not meet (1/2, eta1)"""
    lo = max(xi2_range.lo, _half(s.is_exact))
    hi = min(xi2_range.hi, s.eta1)
    return lo >= hi


def regime_catalog(s: Scenario) -> List[Regime]:
    """All three regimes with their applicability at this scenario"""
    t = thresholds(s)
    tol = _tolerance()
    half = _half(s.is_exact)

    layout = (
        (
            RegimeTag.R1,
            Interval(t.t_high, 1, lo_closed=True),
            Interval(t.a, s.xi2 / s.xi1, lo_closed=True, hi_closed=True),
        ),
        (
            RegimeTag.R2,
            Interval(t.t_low, t.t_high, lo_closed=True),
            Interval(s.xi2, t.a, lo_closed=True),
        ),
        (
            RegimeTag.R3,
            Interval(half, t.t_low),
            Interval(s.xi2, t.t_low, lo_closed=True, hi_closed=True),
        ),
    )

    return [
        Regime(
            tag=tag,
            applicable=xi2_range.contains(s.xi2, tol),
            alpha1_interval=alpha1_interval,
            thresholds=t,
            xi2_range=xi2_range,
            xi2_range_empty=_range_misses_chain(xi2_range, s),
        )
        for tag, xi2_range, alpha1_interval in layout
    ]


def classify_regimes(s: Scenario) -> List[Regime]:
    """Every regime whose xi2 condition holds; possibly none, possibly several"""
    return [regime for regime in regime_catalog(s) if regime.applicable]


def min_alpha2(s: Scenario, alpha1, warn: bool = True) -> Alpha2Bound:
    """
    Infimum of admissible alpha2: max(alpha1*xi1/xi2, 1/2).

    Values above 1 are reported as infeasible rather than clamped.
    """
    values = unify(s.xi1, s.xi2, alpha1)
    xi1, xi2, alpha1 = values
    if not 0 < alpha1 < 1:
        raise OutOfRange("alpha1", alpha1, "0 < alpha1 < 1")

    value = max(alpha1 * xi1 / xi2, _half(is_exact(*values)))
    feasible = leq(value, 1, _tolerance())
    if not feasible and warn:
        logger.warning(
            f"No admissible alpha2: alpha1*xi1/xi2 = {format_text(value)} exceeds 1 "
            f"(alpha1={format_text(alpha1)})"
        )
    return Alpha2Bound(value=value, feasible=feasible)


def _describe(regimes: List[Regime]) -> str:
    return ", ".join(f"{r.tag.value} {r.alpha1_interval.notation()}" for r in regimes)


def convertible_iff(s: Scenario, alpha1, alpha2) -> PropositionVerdict:
    """
    Apply the conversion criterion when its hypotheses hold.

    Hypotheses: some regime applies, alpha1 lies in its interval and
    alpha2 > 1/2. Otherwise ``convertible`` is None and ``reason`` names the
    failing hypothesis.
    """
    xi1, eta1, xi2, eta2, alpha1, alpha2 = unify(*s.as_tuple(), alpha1, alpha2)
    if not 0 < alpha1 < 1:
        raise OutOfRange("alpha1", alpha1, "0 < alpha1 < 1")
    if not 0 < alpha2 < 1:
        raise OutOfRange("alpha2", alpha2, "0 < alpha2 < 1")

    tol = _tolerance()
    bound = min_alpha2(s, alpha1, warn=False)
    margin = alpha2 * xi2 - alpha1 * xi1

    regimes = classify_regimes(s)
    if not regimes:
        return PropositionVerdict(
            hypotheses_met=False,
            convertible=None,
            min_alpha2=bound,
            reason="xi2 lies in no regime",
            criterion_margin=margin,
        )

    containing = [r for r in regimes if r.alpha1_interval.contains(alpha1, tol)]
    if not containing:
        return PropositionVerdict(
            hypotheses_met=False,
            convertible=None,
            min_alpha2=bound,
            reason=f"alpha1={format_text(alpha1)} lies outside {_describe(regimes)}",
            criterion_margin=margin,
        )

    regime = containing[0]
    if not alpha2 > _half(is_exact(alpha2)):
        return PropositionVerdict(
            hypotheses_met=False,
            convertible=None,
            min_alpha2=bound,
            reason=f"alpha2={format_text(alpha2)} is not above 1/2",
            regime=regime.tag,
            criterion_margin=margin,
        )

    zero = Fraction(0) if is_exact(margin) else 0.0
    convertible = geq(margin, zero, tol)
    appendix_b_holds: Optional[bool] = None
    if convertible:
        appendix_b_holds = (1 - alpha1) * (1 - eta1) > (1 - alpha2) * (1 - eta2)
        reason = f"{regime.tag.value}: alpha1*xi1 <= alpha2*xi2"
    else:
        reason = f"{regime.tag.value}: alpha1*xi1 > alpha2*xi2"

    return PropositionVerdict(
        hypotheses_met=True,
        convertible=convertible,
        min_alpha2=bound,
        reason=reason,
        regime=regime.tag,
        criterion_margin=margin,
        appendix_b_holds=appendix_b_holds,
    )


def schmidt_order_lemma(s: Scenario, tag: RegimeTag, alpha1) -> Tuple[int, int, int, int]:
    """
    Order of the Gamma1 spectrum asserted inside a regime's proof.

    R1 needs alpha1 >= A, R2 needs max(T_low, 1/2) <= alpha1 < A and R3 needs
    1/2 < alpha1 <= T_low; outside those ranges HypothesisViolated is raised.
    """
    tag = RegimeTag(tag)
    t = thresholds(s)
    xi1, eta1, alpha1, t_low, a = unify(s.xi1, s.eta1, alpha1, t.t_low, t.a)
    half = _half(is_exact(alpha1))

    if tag is RegimeTag.R1:
        holds = a <= alpha1 <= 1
        hypothesis = "A <= alpha1"
    elif tag is RegimeTag.R2:
        holds = max(t_low, half) <= alpha1 < a
        hypothesis = "max(T_low, 1/2) <= alpha1 < A"
    else:
        holds = half < alpha1 <= t_low
        hypothesis = "1/2 < alpha1 <= T_low"

    if not holds:
        raise HypothesisViolated(hypothesis, f"alpha1={format_text(alpha1)}")
    return SCHMIDT_ORDERS[tag]


__all__ = [
    "SCHMIDT_ORDERS",
    "thresholds",
    "regime_catalog",
    "classify_regimes",
    "min_alpha2",
    "convertible_iff",
    "schmidt_order_lemma",
]
