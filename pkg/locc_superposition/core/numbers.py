"""
Dual-mode numbers: exact rationals (``fractions.Fraction``) or doubles.

A computation is exact when every input is a Fraction; a single float turns
the whole computation real. Non-strict comparisons in real mode absorb float
noise with an absolute tolerance; rational comparisons are exact.
"""

import re
from fractions import Fraction
from numbers import Integral, Real
from typing import Iterable, Tuple, Union

import numpy as np

from .errors import NumberParseError

Number = Union[Fraction, float]

# Absolute tolerance for real-mode comparisons (majorization, interval membership)
DEFAULT_TOLERANCE = 1e-12

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")
_INTEGER_RE = re.compile(r"^\s*[+-]?\d+\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def parse_number(text: str) -> Number:
    """
    Parse a command-line number.

    ``"p/q"`` and integer literals give an exact Fraction, decimal or exponent
    literals give a float.
    """
    if not isinstance(text, str):
        raise NumberParseError(repr(text), "expected a string")

    match = _FRACTION_RE.match(text)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise NumberParseError(text, "zero denominator")
        return Fraction(numerator, denominator)

    if _INTEGER_RE.match(text):
        return Fraction(int(text))

    try:
        value = float(text)
    except ValueError:
        raise NumberParseError(text, "expected 'p/q' or a decimal literal") from None
    if not np.isfinite(value):
        raise NumberParseError(text, "value must be finite")
    return value


def as_number(value) -> Number:
    """Normalize ints, numpy scalars, Fractions and floats into a Number"""
    if isinstance(value, bool):
        raise NumberParseError(repr(value), "booleans are not numbers")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_number(value)
    if isinstance(value, Real):
        return float(value)
    raise NumberParseError(repr(value), f"unsupported type {type(value).__name__}")


def is_exact(*values) -> bool:
    """True when every value is an exact rational"""
    return all(isinstance(v, Fraction) for v in values)


def to_real(value) -> float:
    return float(value)


def unify(*values) -> Tuple[Number, ...]:
    """Bring values to a common mode: all Fractions if exact, else all floats"""
    numbers = tuple(as_number(v) for v in values)
    if is_exact(*numbers):
        return numbers
    return tuple(float(v) for v in numbers)


def leq(a: Number, b: Number, tol: float = DEFAULT_TOLERANCE) -> bool:
    """a <= b, exact for rationals, within ``tol`` otherwise"""
    if is_exact(a, b):
        return a <= b
    return float(a) - float(b) <= tol


def geq(a: Number, b: Number, tol: float = DEFAULT_TOLERANCE) -> bool:
    return leq(b, a, tol)


def near(a: Number, b: Number, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Equality, exact for rationals, within ``tol`` otherwise"""
    if is_exact(a, b):
        return a == b
    return abs(float(a) - float(b)) <= tol


def cumulative(values: Iterable[Number]) -> Tuple[Number, ...]:
    """Running sums, keeping the mode of the inputs"""
    total: Number = ZERO
    sums = []
    for v in values:
        total = total + v
        sums.append(total)
    return tuple(sums)


def format_number(value) -> Union[str, float]:
    """
    Render a Number for output.

    Fractions become ``"p/q"`` strings (``"p"`` for integers) so exact results
    never degrade to decimals; floats are returned unchanged.
    """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return float(value)


def format_text(value, digits: int = 6) -> str:
    """Human-oriented rendering: exact fractions verbatim, floats rounded"""
    if isinstance(value, Fraction):
        return str(format_number(value))
    return f"{float(value):.{digits}g}"


__all__ = [
    "Number",
    "DEFAULT_TOLERANCE",
    "ZERO",
    "ONE",
    "HALF",
    "parse_number",
    "as_number",
    "is_exact",
    "to_real",
    "unify",
    "leq",
    "geq",
    "near",
    "cumulative",
    "format_number",
    "format_text",
]
