"""
Shared data models for the LOCC superposition toolkit.

Domain values (states, spectra, verdicts, regions) are frozen dataclasses that
carry exact Fractions or floats untouched. Sweep configuration and reports
cross the IO boundary and are pydantic models, validated on construction.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .numbers import DEFAULT_TOLERANCE, Number, format_text, geq, is_exact, leq


class RegimeTag(str, Enum):
    """The three xi2 regimes of the conversion propositions"""
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


class NecessaryCondition(str, Enum):
    """Outcome of the strict entropy necessary condition"""
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    BOUNDARY = "boundary"


class OutputFormat(str, Enum):
    """CLI output formats"""
    HUMAN = "human"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class Interval:
    """Real interval with explicit open/closed endpoint flags"""
    lo: Number
    hi: Number
    lo_closed: bool = False
    hi_closed: bool = False

    @property
    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        if self.lo == self.hi:
            return not (self.lo_closed and self.hi_closed)
        return False

    @property
    def width(self) -> Number:
        return max(self.hi - self.lo, 0)

    @property
    def midpoint(self) -> Number:
        return (self.lo + self.hi) / 2

    def contains(self, x: Number, tol: float = DEFAULT_TOLERANCE) -> bool:
        """Membership; closed endpoints are relaxed by ``tol`` in real mode"""
        if self.lo_closed:
            above = geq(x, self.lo, tol)
        else:
            above = x > self.lo
        if self.hi_closed:
            below = leq(x, self.hi, tol)
        else:
            below = x < self.hi
        return above and below

    def distance_to_boundary(self, x: Number) -> float:
        return min(abs(float(x) - float(self.lo)), abs(float(self.hi) - float(x)))

    def notation(self, digits: int = 6) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_text(self.lo, digits)}, {format_text(self.hi, digits)}{right}"


@dataclass(frozen=True)
class TwoTermState:
    """sqrt(p)|aa> + sqrt(1-p)|bb> with 1/2 < p < 1"""
    p: Number

    @property
    def coefficients(self) -> "ProbabilityVector":
        return ProbabilityVector((self.p, 1 - self.p))

    @property
    def entanglement(self) -> float:
        """h2(p), the entropy of entanglement in ebits"""
        from ..entanglement import binary_entropy
        return binary_entropy(self.p)

    @property
    def is_exact(self) -> bool:
        return is_exact(self.p)


@dataclass(frozen=True)
class Scenario:
    """Parameters of phi1, psi1, phi2, psi2 with 1/2 < eta2 < xi2 < eta1 < xi1 < 1"""
    xi1: Number
    eta1: Number
    xi2: Number
    eta2: Number

    @property
    def states(self) -> Tuple[TwoTermState, TwoTermState, TwoTermState, TwoTermState]:
        """(phi1, psi1, phi2, psi2)"""
        return (
            TwoTermState(self.xi1),
            TwoTermState(self.eta1),
            TwoTermState(self.xi2),
            TwoTermState(self.eta2),
        )

    @property
    def is_exact(self) -> bool:
        return is_exact(self.xi1, self.eta1, self.xi2, self.eta2)

    def as_real(self) -> "Scenario":
        return Scenario(float(self.xi1), float(self.eta1), float(self.xi2), float(self.eta2))

    def as_tuple(self) -> Tuple[Number, Number, Number, Number]:
        return (self.xi1, self.eta1, self.xi2, self.eta2)

    def pairwise_inconvertible(self) -> bool:
        """Neither phi1 nor psi1 converts into phi2 or psi2"""
        from ..states import pairwise_inconvertible
        return pairwise_inconvertible(self)


@dataclass(frozen=True)
class ProbabilityVector:
    """Schmidt coefficients, non-negative, summing to one, non-increasing"""
    entries: Tuple[Number, ...]

    def __iter__(self) -> Iterator[Number]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> Number:
        return self.entries[index]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @property
    def schmidt_number(self) -> int:
        return sum(1 for e in self.entries if e != 0)

    @property
    def is_exact(self) -> bool:
        return is_exact(*self.entries)

    def padded(self, dimension: int) -> "ProbabilityVector":
        """Zero-pad to ``dimension`` entries (keeps the mode of the entries)"""
        missing = dimension - len(self.entries)
        if missing <= 0:
            return self
        zero = Fraction(0) if self.is_exact else 0.0
        return ProbabilityVector(self.entries + (zero,) * missing)

    def as_real(self) -> "ProbabilityVector":
        return ProbabilityVector(tuple(float(e) for e in self.entries))


@dataclass(frozen=True)
class SuperpositionWeights:
    """Squared superposition amplitudes of Gamma1 and Gamma2"""
    alpha1: Number
    alpha2: Number


@dataclass(frozen=True)
class ConversionVerdict:
    """Result of the Nielsen majorization test source -> target"""
    convertible: bool
    margins: Tuple[Number, ...]
    first_failure: Optional[int] = None
    source: Optional[ProbabilityVector] = None
    target: Optional[ProbabilityVector] = None

    @property
    def dimension(self) -> int:
        return len(self.margins)

    @property
    def min_margin(self) -> Number:
        return min(self.margins)

    @property
    def failures(self) -> Tuple[int, ...]:
        """All 1-based k whose prefix inequality fails"""
        tol = DEFAULT_TOLERANCE
        return tuple(
            k for k, margin in enumerate(self.margins, start=1)
            if not geq(margin, Fraction(0), tol)
        )


@dataclass(frozen=True)
class AlphaRegion:
    """Open subset of (0, 1) where the entropy necessary condition holds"""
    intervals: Tuple[Interval, ...]
    root_tolerance: float
    threshold: float = 0.0
    slope: float = 0.0
    maximizer: float = 0.5
    peak_value: float = 1.0

    def contains(self, x: float) -> bool:
        return any(iv.contains(x, 0.0) for iv in self.intervals)

    @property
    def measure(self) -> float:
        return float(sum(float(iv.width) for iv in self.intervals))

    @property
    def is_empty(self) -> bool:
        return not self.intervals


@dataclass(frozen=True)
class Thresholds:
    """T_low = (1-eta1)/(2-xi1-eta1), T_high = xi1*eta1/(1-xi1+eta1), A = eta1/(1-xi1+eta1)"""
    t_low: Number
    t_high: Number
    a: Number

    def as_tuple(self) -> Tuple[Number, Number, Number]:
        return (self.t_low, self.t_high, self.a)


@dataclass(frozen=True)
class Regime:
    """One proposition's xi2 regime evaluated for a scenario"""
    tag: RegimeTag
    applicable: bool
    alpha1_interval: Interval
    thresholds: Thresholds
    xi2_range: Interval
    xi2_range_empty: bool = False


@dataclass(frozen=True)
class Alpha2Bound:
    """Infimum of admissible alpha2; infeasible when it exceeds 1"""
    value: Number
    feasible: bool


@dataclass(frozen=True)
class PropositionVerdict:
    """Decision of the alpha1/alpha2 <= xi2/xi1 criterion under the regime hypotheses"""
    hypotheses_met: bool
    convertible: Optional[bool]
    min_alpha2: Alpha2Bound
    reason: str
    regime: Optional[RegimeTag] = None
    criterion_margin: Optional[Number] = None
    appendix_b_holds: Optional[bool] = None


# ---------------------------------------------------------------------------
# Sweep IO models
# ---------------------------------------------------------------------------

class SweepConfig(BaseModel):
    """Parameters of a randomized proposition/oracle cross-validation run"""
    model_config = ConfigDict(frozen=True)

    samples: int = Field(ge=1)
    seed: int = Field(default=42, ge=0, lt=2 ** 64)
    boundary_margin: float = Field(default=1e-9, gt=0)
    regime_filter: Optional[RegimeTag] = None
    output_path: Optional[str] = None
    max_attempts: int = Field(default=1000, ge=1)
    workers: int = Field(default=1, ge=1)
    max_mismatch_records: int = Field(default=100, ge=0)


class MismatchRecord(BaseModel):
    """A sample where the proposition and the oracle disagree"""
    index: int
    regime: RegimeTag
    xi1: float
    eta1: float
    xi2: float
    eta2: float
    alpha1: float
    alpha2: float
    proposition_convertible: bool
    oracle_convertible: bool
    first_failure: Optional[int] = None
    appendix_b_holds: Optional[bool] = None


PROPERTY_NAMES: Tuple[str, ...] = (
    "entropy_equality",
    "entropy_condition",
    "entropy_monotone",
    "appendix_a1",
    "appendix_a2",
    "appendix_b1_provable",
    "schmidt_order_r1",
    "schmidt_order_r2",
    "schmidt_order_r3",
    "spot_check_modes",
)


def _zero_counts(names=PROPERTY_NAMES) -> Dict[str, int]:
    return {name: 0 for name in names}


class SweepReport(BaseModel):
    """Aggregated outcome of a sweep; identical inputs give identical reports"""
    config: SweepConfig
    total: int = 0
    agreements: int = 0
    mismatches: int = 0
    explained_mismatches: int = 0
    unexplained_mismatches: int = 0
    mismatches_by_regime: Dict[str, int] = Field(
        default_factory=lambda: {tag.value: 0 for tag in RegimeTag}
    )
    regime_counts: Dict[str, int] = Field(
        default_factory=lambda: {tag.value: 0 for tag in RegimeTag}
    )
    mismatch_records: List[MismatchRecord] = Field(default_factory=list)
    property_failures: Dict[str, int] = Field(default_factory=_zero_counts)
    observations: Dict[str, int] = Field(default_factory=lambda: {"appendix_b1_gap": 0})
    skipped: int = 0
    spot_checks: int = 0

    @property
    def property_failure_total(self) -> int:
        return sum(self.property_failures.values())

    @property
    def passed(self) -> bool:
        """No mismatches and no property failures"""
        return self.mismatches == 0 and self.property_failure_total == 0

    @property
    def consistent(self) -> bool:
        """Every mismatch is explained by appendix_b1 failing at its sample"""
        return self.unexplained_mismatches == 0 and self.property_failure_total == 0


__all__ = [
    "RegimeTag",
    "NecessaryCondition",
    "OutputFormat",
    "Interval",
    "TwoTermState",
    "Scenario",
    "ProbabilityVector",
    "SuperpositionWeights",
    "ConversionVerdict",
    "AlphaRegion",
    "Thresholds",
    "Regime",
    "Alpha2Bound",
    "PropositionVerdict",
    "SweepConfig",
    "MismatchRecord",
    "SweepReport",
    "PROPERTY_NAMES",
]
