"""
Regime propositions and the inequalities of their proofs

Components:
- regimes: thresholds, regime classification, minimal alpha2, conversion criterion
- appendix: the proof inequalities as predicates
"""

from .appendix import appendix_a1, appendix_a2, appendix_b1, b1_provable
from .regimes import (
    SCHMIDT_ORDERS,
    classify_regimes,
    convertible_iff,
    min_alpha2,
    regime_catalog,
    schmidt_order_lemma,
    thresholds,
)

__all__ = [
    "SCHMIDT_ORDERS",
    "appendix_a1",
    "appendix_a2",
    "appendix_b1",
    "b1_provable",
    "classify_regimes",
    "convertible_iff",
    "min_alpha2",
    "regime_catalog",
    "schmidt_order_lemma",
    "thresholds",
]
