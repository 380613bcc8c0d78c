"""
Domain exceptions for the LOCC superposition toolkit.

All errors derive from ``LoccError``, itself a ``ValueError``: bad input is a
value problem, and callers that only care about "invalid" can catch
``ValueError``.
"""

from typing import Any, Iterable, List


class LoccError(ValueError):
    """Base class for every domain error raised by the package"""


class NumberParseError(LoccError):
    """Raised when a string is neither a ``p/q`` fraction nor a decimal literal"""

    def __init__(self, text: str, detail: str = ""):
        self.text = text
        message = f"Cannot parse number {text!r}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class OutOfRange(LoccError):
    """A parameter lies outside its admissible range"""

    def __init__(self, parameter: str, value: Any, bound: str):
        self.parameter = parameter
        self.value = value
        self.bound = bound
        super().__init__(f"{parameter}={value} is out of range: expected {bound}")


class ChainViolation(LoccError):
    """The ordering 1/2 < eta2 < xi2 < eta1 < xi1 < 1 does not hold"""

    def __init__(self, inequality: str, left: Any, right: Any):
        self.inequality = inequality
        self.left = left
        self.right = right
        super().__init__(
            f"Scenario chain violated: {inequality} fails ({left} vs {right})"
        )


class HypothesisViolated(LoccError):
    """A predicate was evaluated outside the hypothesis it is stated under"""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        message = f"Hypothesis violated: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class ConfigInvalid(LoccError):
    """Sweep or runtime configuration failed validation"""

    def __init__(self, problems: Iterable[str]):
        self.problems: List[str] = list(problems)
        super().__init__(
            "Configuration invalid:\n" + "\n".join(f"  - {p}" for p in self.problems)
        )


__all__ = [
    "LoccError",
    "NumberParseError",
    "OutOfRange",
    "ChainViolation",
    "HypothesisViolated",
    "ConfigInvalid",
]
