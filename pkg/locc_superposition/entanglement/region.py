"""
Region solver for the entropy necessary condition.

g(x) = h2(x) + D*x is strictly concave on [0, 1] with g(0) = 0, g(1) = D and
its maximum at x* = 1/(1 + 2^-D). The set {g < C} is therefore (0, 1) minus
a closed interval around x*, i.e. at most two open intervals whose interior
endpoints are found by bisection on [0, x*] and [x*, 1].
"""

from typing import List, NamedTuple, Optional

import numpy as np
from scipy.optimize import bisect

from ..config import get_config
from ..core.errors import OutOfRange
from ..core.models import AlphaRegion, Interval, Scenario
from ..logging import get_logger
from .entropy import binary_entropy, binary_entropy_array, slope, threshold

logger = get_logger(__name__)


class CurvePoint(NamedTuple):
    """One sample of g on the plotting grid"""
    alpha2: float
    g: float
    threshold: float
    inside: bool


def maximizer(d: float) -> float:
    """argmax of h2(x) + d*x, from h2'(x) = log2((1-x)/x) = -d"""
    return 1.0 / (1.0 + 2.0 ** (-d))


def solve_region(
    c: float,
    d: float,
    tol: float,
    max_iterations: int = 100,
) -> AlphaRegion:
    """
    Open subset of (0, 1) where h2(x) + d*x < c.

    Works directly on the slope ``d`` and threshold ``c``; ``alpha2_region``
    derives both from a scenario.
    """
    if tol <= 0:
        raise OutOfRange("tol", tol, "> 0")

    def excess(x: float) -> float:
        return binary_entropy(x) + d * x - c

    x_star = maximizer(d)
    peak = binary_entropy(x_star) + d * x_star

    if peak < c:
        intervals = (Interval(0.0, 1.0),)
    else:
        found: List[Interval] = []
        # g(0) = 0: the left piece exists only when c > 0
        if c > 0:
            root = bisect(excess, 0.0, x_star, xtol=tol, maxiter=max_iterations)
            found.append(Interval(0.0, float(root)))
        # g(1) = d: the right piece exists only when d < c
        if d < c:
            root = bisect(excess, x_star, 1.0, xtol=tol, maxiter=max_iterations)
            found.append(Interval(float(root), 1.0))
        intervals = tuple(iv for iv in found if not iv.is_empty)

    if not intervals:
        logger.debug(f"Empty region: threshold {c:.6g} <= min(0, {d:.6g})")

    return AlphaRegion(
        intervals=intervals,
        root_tolerance=tol,
        threshold=c,
        slope=d,
        maximizer=x_star,
        peak_value=peak,
    )


def alpha2_region(s: Scenario, alpha1, tol: Optional[float] = None) -> AlphaRegion:
    """
    The alpha2 values in (0, 1) that pass the strict entropy condition for a
    given alpha1.

    ``tol`` defaults to the configured root tolerance.
    """
    if not 0 < alpha1 < 1:
        raise OutOfRange("alpha1", alpha1, "0 < alpha1 < 1")
    region_config = get_config().region
    if tol is None:
        tol = region_config.root_tolerance
    return solve_region(
        threshold(s, alpha1),
        slope(s),
        float(tol),
        max_iterations=region_config.max_iterations,
    )


def region_curve(s: Scenario, alpha1, points: Optional[int] = None) -> List[CurvePoint]:
    """
    g and the threshold on ``points`` evenly spaced alpha2 values from m to 1 - m,
    m = 1/(2*(points - 1)).

    With 1001 points the grid spans [0.0005, 0.9995] in steps of 0.000999.
    """
    if not 0 < alpha1 < 1:
        raise OutOfRange("alpha1", alpha1, "0 < alpha1 < 1")
    if points is None:
        points = get_config().region.grid_points
    if points < 2:
        raise OutOfRange("points", points, ">= 2")

    margin = 1.0 / (2 * (points - 1))
    grid = np.linspace(margin, 1.0 - margin, points)
    values = binary_entropy_array(grid) + slope(s) * grid
    c = threshold(s, alpha1)
    return [
        CurvePoint(float(x), float(y), c, bool(y < c))
        for x, y in zip(grid, values)
    ]


__all__ = [
    "CurvePoint",
    "maximizer",
    "solve_region",
    "alpha2_region",
    "region_curve",
]
