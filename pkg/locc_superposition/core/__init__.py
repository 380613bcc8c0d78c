"""
Shared core for the LOCC superposition toolkit.

Components:
- numbers: dual-mode (exact rational / real) number handling and comparison policy
- models: domain value types and sweep IO models
- errors: domain exception hierarchy
"""

from .errors import (
    ChainViolation,
    ConfigInvalid,
    HypothesisViolated,
    LoccError,
    NumberParseError,
    OutOfRange,
)
from .models import (
    Alpha2Bound,
    AlphaRegion,
    ConversionVerdict,
    Interval,
    MismatchRecord,
    NecessaryCondition,
    OutputFormat,
    ProbabilityVector,
    PropositionVerdict,
    Regime,
    RegimeTag,
    Scenario,
    SuperpositionWeights,
    SweepConfig,
    SweepReport,
    Thresholds,
    TwoTermState,
)
from .numbers import (
    DEFAULT_TOLERANCE,
    Number,
    as_number,
    format_number,
    format_text,
    is_exact,
    parse_number,
    unify,
)

__all__ = [
    # Errors
    "LoccError",
    "NumberParseError",
    "OutOfRange",
    "ChainViolation",
    "HypothesisViolated",
    "ConfigInvalid",

    # Models
    "Alpha2Bound",
    "AlphaRegion",
    "ConversionVerdict",
    "Interval",
    "MismatchRecord",
    "NecessaryCondition",
    "OutputFormat",
    "ProbabilityVector",
    "PropositionVerdict",
    "Regime",
    "RegimeTag",
    "Scenario",
    "SuperpositionWeights",
    "SweepConfig",
    "SweepReport",
    "Thresholds",
    "TwoTermState",

    # Numbers
    "DEFAULT_TOLERANCE",
    "Number",
    "as_number",
    "format_number",
    "format_text",
    "is_exact",
    "parse_number",
    "unify",
]
