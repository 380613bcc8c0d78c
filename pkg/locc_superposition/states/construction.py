"""
Construction and validation of two-term states, scenarios and the Schmidt
spectra of their bi-orthogonal superpositions.

A two-term state sqrt(p)|aa> + sqrt(1-p)|bb> is carried by its larger
Schmidt coefficient p. Because the two terms of a superposition live on
orthogonal local supports, the spectrum of
sqrt(alpha)|phi> + sqrt(1-alpha)|psi> is simply the weighted union
{alpha*xi, alpha*(1-xi), (1-alpha)*eta, (1-alpha)*(1-eta)}.
"""

from fractions import Fraction
from typing import Iterable, Tuple

from ..core.errors import ChainViolation, OutOfRange
from ..core.models import ProbabilityVector, Scenario, SuperpositionWeights, TwoTermState
from ..core.numbers import DEFAULT_TOLERANCE, HALF, Number, as_number, is_exact, unify
from ..logging import get_logger
from ..majorization import majorizes

logger = get_logger(__name__)


def _check_open_half_unit(name: str, value: Number) -> None:
    if not (HALF < value < 1):
        raise OutOfRange(name, value, "1/2 < value < 1")


def _check_unit(name: str, value: Number) -> None:
    if not (0 <= value <= 1):
        raise OutOfRange(name, value, "0 <= value <= 1")


def make_two_term_state(p) -> TwoTermState:
    """Validated two-term state; the boundaries 1/2 and 1 are rejected"""
    p = as_number(p)
    _check_open_half_unit("p", p)
    return TwoTermState(p)


def make_scenario(xi1, eta1, xi2, eta2) -> Scenario:
    """
    Validated scenario satisfying 1/2 < eta2 < xi2 < eta1 < xi1 < 1.

    The chain is checked left to right and the first failing link is named
    in the ChainViolation. eta1 > xi2 is what makes phi1, psi1 unable to reach
    either of phi2, psi2.
    """
    xi1, eta1, xi2, eta2 = unify(xi1, eta1, xi2, eta2)
    chain = (
        ("1/2 < eta2", HALF, eta2),
        ("eta2 < xi2", eta2, xi2),
        ("xi2 < eta1", xi2, eta1),
        ("eta1 < xi1", eta1, xi1),
        ("xi1 < 1", xi1, 1),
    )
    for inequality, left, right in chain:
        if not left < right:
            logger.debug(f"Rejected scenario: {inequality} fails ({left} vs {right})")
            raise ChainViolation(inequality, left, right)
    return Scenario(xi1=xi1, eta1=eta1, xi2=xi2, eta2=eta2)


def make_weights(alpha1, alpha2) -> SuperpositionWeights:
    """Superposition weights, each in the closed unit interval"""
    alpha1, alpha2 = as_number(alpha1), as_number(alpha2)
    _check_unit("alpha1", alpha1)
    _check_unit("alpha2", alpha2)
    return SuperpositionWeights(alpha1=alpha1, alpha2=alpha2)


def make_probability_vector(
    entries: Iterable,
    *,
    sort: bool = True,
    tol: float = DEFAULT_TOLERANCE,
) -> ProbabilityVector:
    """
    Validated probability vector.

    Entries must be non-negative and sum to one (exactly for rationals,
    within ``tol`` otherwise). With ``sort`` the entries are ordered
    non-increasingly by a stable sort; without it they must already be.
    """
    values = unify(*entries)
    if not values:
        raise OutOfRange("entries", "[]", "at least one entry")

    for index, value in enumerate(values):
        if value < 0:
            raise OutOfRange(f"entries[{index}]", value, ">= 0")

    total = sum(values, Fraction(0) if is_exact(*values) else 0.0)
    if is_exact(*values):
        if total != 1:
            raise OutOfRange("sum(entries)", total, "exactly 1")
    elif abs(total - 1.0) > tol:
        raise OutOfRange("sum(entries)", total, f"1 within {tol}")

    if sort:
        values = tuple(sorted(values, reverse=True))
    else:
        for index in range(1, len(values)):
            if values[index] > values[index - 1]:
                raise OutOfRange(f"entries[{index}]", values[index], "non-increasing order")

    return ProbabilityVector(values)


def superposition_schmidt_order(xi, eta, alpha) -> Tuple[int, int, int, int]:
    """
    Construction indices of the spectrum entries in sorted order.

    Index 0..3 refer to alpha*xi, alpha*(1-xi), (1-alpha)*eta,
    (1-alpha)*(1-eta); ties keep construction order.
    """
    terms = _spectrum_terms(*_validated_superposition_args(xi, eta, alpha))
    return tuple(sorted(range(4), key=lambda i: terms[i], reverse=True))


def _validated_superposition_args(xi, eta, alpha) -> Tuple[Number, Number, Number]:
    xi, eta, alpha = unify(xi, eta, alpha)
    _check_open_half_unit("xi", xi)
    _check_open_half_unit("eta", eta)
    _check_unit("alpha", alpha)
    return xi, eta, alpha


def _spectrum_terms(xi: Number, eta: Number, alpha: Number) -> Tuple[Number, ...]:
    return (
        alpha * xi,
        alpha * (1 - xi),
        (1 - alpha) * eta,
        (1 - alpha) * (1 - eta),
    )


def superposition_schmidt(xi, eta, alpha) -> ProbabilityVector:
    """
    Sorted Schmidt coefficients of sqrt(alpha)|phi> + sqrt(1-alpha)|psi>.

    Exact inputs give an exact spectrum summing to exactly 1.

    >>> superposition_schmidt(Fraction(9, 10), Fraction(4, 5), Fraction(3, 5)).entries
    (Fraction(27, 50), Fraction(8, 25), Fraction(2, 25), Fraction(3, 50))
    """
    terms = _spectrum_terms(*_validated_superposition_args(xi, eta, alpha))
    # sorted() is stable, so equal entries keep construction order
    return ProbabilityVector(tuple(sorted(terms, reverse=True)))


def gamma_spectra(s: Scenario, alpha1, alpha2) -> Tuple[ProbabilityVector, ProbabilityVector]:
    """Spectra of Gamma1 = (phi1, psi1; alpha1) and Gamma2 = (phi2, psi2; alpha2)"""
    return (
        superposition_schmidt(s.xi1, s.eta1, alpha1),
        superposition_schmidt(s.xi2, s.eta2, alpha2),
    )


def pairwise_inconvertible(s: Scenario) -> bool:
    """
    Re-derive with Nielsen's theorem that neither phi1 nor psi1 can reach
    phi2 or psi2 (the setting of the whole analysis).
    """
    phi1, psi1, phi2, psi2 = (state.coefficients for state in s.states)
    return not any(
        majorizes(source, target).convertible
        for source in (phi1, psi1)
        for target in (phi2, psi2)
    )


__all__ = [
    "make_two_term_state",
    "make_scenario",
    "make_weights",
    "make_probability_vector",
    "superposition_schmidt",
    "superposition_schmidt_order",
    "gamma_spectra",
    "pairwise_inconvertible",
]
