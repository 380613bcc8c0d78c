"""
Majorization and Nielsen's LOCC convertibility criterion
"""

from .nielsen import (
    MajorizationRow,
    incomparable,
    is_majorized,
    majorization_table,
    majorizes,
    prefix_sums,
)

__all__ = [
    "MajorizationRow",
    "incomparable",
    "is_majorized",
    "majorization_table",
    "majorizes",
    "prefix_sums",
]
