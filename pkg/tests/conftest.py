"""
Test configuration and utilities
"""

import logging
import os
from fractions import Fraction as F

import numpy as np
import pytest

from locc_superposition.config import init_config
from locc_superposition.logging import configure_logging
from locc_superposition.core.models import ProbabilityVector, Scenario


@pytest.fixture(autouse=True)
def setup_test_logging():
    """Setup logging for tests"""
    logging.basicConfig(
        level=logging.DEBUG,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    # Suppress noisy loggers during tests
    logging.getLogger("numexpr").setLevel(logging.WARNING)


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Rebuild the global configuration from a clean LOCC_* environment"""
    for key in list(os.environ):
        if key.startswith("LOCC_") or key in ("LOG_LEVEL", "LOG_FILE", "DEBUG_MODE", "STRUCTURED_LOGGING"):
            monkeypatch.delenv(key, raising=False)
    config = init_config()
    configure_logging()
    yield config
    monkeypatch.undo()
    init_config()


@pytest.fixture
def worked_scenario() -> Scenario:
    """(xi1, eta1, xi2, eta2) = (9/10, 4/5, 7/10, 3/5), exact"""
    return Scenario(F(9, 10), F(4, 5), F(7, 10), F(3, 5))


@pytest.fixture
def r1_scenario() -> Scenario:
    return Scenario(0.85, 0.8, 0.75, 0.7)


@pytest.fixture
def r3_scenario() -> Scenario:
    return Scenario(F(9, 10), F(4, 5), F(3, 5), F(11, 20))


@pytest.fixture
def r1_counterexample():
    """Criterion holds in R1 but majorization fails at k=3"""
    return Scenario(F(81, 100), F(4, 5), F(79, 100), F(51, 100)), F(81, 100), F(9, 10)


@pytest.fixture
def r2_counterexample():
    """Criterion holds in R2 but majorization fails at k=3"""
    return Scenario(F(181, 200), F(9, 10), F(4, 5), F(51, 100)), F(81, 100), F(23, 25)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomized property tests"""
    return np.random.default_rng(20240601)


def random_scenario(rng: np.random.Generator, gap: float = 1e-6) -> Scenario:
    """Uniform scenario on the chain 1/2 < eta2 < xi2 < eta1 < xi1 < 1"""
    while True:
        xi1, eta1, xi2, eta2 = sorted(rng.uniform(0.5, 1.0, size=4).tolist(), reverse=True)
        if min(1.0 - xi1, xi1 - eta1, eta1 - xi2, xi2 - eta2, eta2 - 0.5) > gap:
            return Scenario(xi1, eta1, xi2, eta2)


def random_probability_vector(rng: np.random.Generator, d: int = 4):
    """Sorted float probability vector of length d"""
    p = rng.dirichlet(np.ones(d))
    p = np.sort(p)[::-1]
    return ProbabilityVector(tuple(p.tolist()))
