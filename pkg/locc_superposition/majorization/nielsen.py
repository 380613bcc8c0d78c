"""
Nielsen's majorization criterion.

|Psi> converts into |Phi> by LOCC iff the Schmidt vector of Psi is majorized
by that of Phi: every prefix sum of the source is at most the matching prefix
sum of the target. Vectors of different length are zero-padded.
"""

from fractions import Fraction
from typing import List, NamedTuple, Tuple

import numpy as np

from ..core.models import ConversionVerdict, ProbabilityVector
from ..core.numbers import DEFAULT_TOLERANCE, Number, cumulative, geq


class MajorizationRow(NamedTuple):
    """One prefix inequality of a majorization test"""
    k: int
    source_prefix: Number
    target_prefix: Number
    margin: Number
    satisfied: bool


def prefix_sums(v: ProbabilityVector) -> Tuple[Number, ...]:
    """
    Cumulative sums of ``v``; the last one is 1.

    Rational vectors are summed exactly, real vectors with numpy.
    """
    if v.is_exact:
        return cumulative(v.entries)
    return tuple(np.cumsum(np.asarray(v.entries, dtype=float)).tolist())


def _aligned(source: ProbabilityVector, target: ProbabilityVector):
    dimension = max(len(source), len(target))
    source, target = source.padded(dimension), target.padded(dimension)
    if source.is_exact != target.is_exact:
        source, target = source.as_real(), target.as_real()
    return source, target


def majorizes(
    source: ProbabilityVector,
    target: ProbabilityVector,
    tol: float = DEFAULT_TOLERANCE,
) -> ConversionVerdict:
    """
    Decide source -> target by LOCC.

    Margins are (target prefix - source prefix) for every k; all of them are
    reported even after a failure. ``first_failure`` is 1-based. Rational
    inputs compare exactly, real inputs accept margins down to ``-tol``.
    """
    source, target = _aligned(source, target)
    source_sums, target_sums = prefix_sums(source), prefix_sums(target)
    margins = tuple(t - s for s, t in zip(source_sums, target_sums))

    zero = Fraction(0) if source.is_exact else 0.0
    first_failure = next(
        (k for k, margin in enumerate(margins, start=1) if not geq(margin, zero, tol)),
        None,
    )
    return ConversionVerdict(
        convertible=first_failure is None,
        margins=margins,
        first_failure=first_failure,
        source=source,
        target=target,
    )


def is_majorized(a: ProbabilityVector, b: ProbabilityVector, tol: float = DEFAULT_TOLERANCE) -> bool:
    """a is majorized by b, i.e. a converts into b"""
    return majorizes(a, b, tol).convertible


def incomparable(a: ProbabilityVector, b: ProbabilityVector, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Neither a -> b nor b -> a is possible by LOCC"""
    return not is_majorized(a, b, tol) and not is_majorized(b, a, tol)


def majorization_table(
    source: ProbabilityVector,
    target: ProbabilityVector,
    tol: float = DEFAULT_TOLERANCE,
) -> List[MajorizationRow]:
    source, target = _aligned(source, target)
    zero = Fraction(0) if source.is_exact else 0.0
    return [
        MajorizationRow(k, s, t, t - s, geq(t - s, zero, tol))
        for k, (s, t) in enumerate(zip(prefix_sums(source), prefix_sums(target)), start=1)
    ]


__all__ = [
    "MajorizationRow",
    "prefix_sums",
    "majorizes",
    "is_majorized",
    "incomparable",
    "majorization_table",
]
