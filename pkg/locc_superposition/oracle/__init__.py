"""
Brute-force oracle and randomized sweep harness

Components:
- brute_force: direct majorization test of two superpositions
- sweep: reproducible seeded cross-validation of the propositions
"""

from .brute_force import brute_force_convertible
from .sweep import (
    REPORT_SCHEMA,
    SPOT_CHECK_POINTS,
    SweepSample,
    SweepTally,
    draw_sample,
    evaluate_sample,
    make_sweep_config,
    report_document,
    run_chunk,
    run_spot_checks,
    run_sweep,
    sample_generator,
    write_report,
)

__all__ = [
    "brute_force_convertible",
    "REPORT_SCHEMA",
    "SPOT_CHECK_POINTS",
    "SweepSample",
    "SweepTally",
    "draw_sample",
    "evaluate_sample",
    "make_sweep_config",
    "report_document",
    "run_chunk",
    "run_spot_checks",
    "run_sweep",
    "sample_generator",
    "write_report",
]
