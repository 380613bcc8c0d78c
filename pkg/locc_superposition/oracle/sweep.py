"""
Randomized cross-validation of the regime propositions against the oracle.

Sample ``i`` of a sweep is drawn from its own Philox stream keyed by the seed,
with ``i`` in the second counter word, so it depends only on (seed, i) and a
report is identical for any partition of the index range over workers.

Per sample the harness draws a scenario, an applicable regime, alpha1 inside
that regime's interval and alpha2 in (max(1/2, min_alpha2*u), 1), then
compares the conversion criterion with brute-force majorization and checks
the entropy equality, the entropy necessary condition, the appendix
inequalities and the Schmidt-order lemmas.
"""

import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

import numpy as np
from pydantic import ValidationError

from ..config import get_config
from ..core.errors import ConfigInvalid, HypothesisViolated
from ..core.models import (
    PROPERTY_NAMES,
    MismatchRecord,
    NecessaryCondition,
    Regime,
    RegimeTag,
    Scenario,
    SweepConfig,
    SweepReport,
)
from ..core.numbers import near
from ..entanglement import (
    binary_entropy,
    necessary_condition,
    superposition_entropy,
    von_neumann_entropy,
)
from ..logging import get_logger, with_run_id
from ..propositions import (
    appendix_a1,
    appendix_a2,
    appendix_b1,
    b1_provable,
    classify_regimes,
    convertible_iff,
    min_alpha2,
    schmidt_order_lemma,
    thresholds,
)
from ..states import gamma_spectra, superposition_schmidt_order
from ..utils.fast_json import dumps
from .brute_force import brute_force_convertible

logger = get_logger(__name__)

REPORT_SCHEMA = 1

# Exact points replayed in rational and real mode on every sweep:
# (label, (xi1, eta1, xi2, eta2), alpha1, alpha2)
SPOT_CHECK_POINTS: Tuple[Tuple[str, Tuple[Fraction, ...], Fraction, Fraction], ...] = (
    (
        "worked example, not convertible",
        (Fraction(9, 10), Fraction(4, 5), Fraction(7, 10), Fraction(3, 5)),
        Fraction(3, 5),
        Fraction(17, 20),
    ),
    (
        "R2 example, convertible",
        (Fraction(9, 10), Fraction(4, 5), Fraction(7, 10), Fraction(3, 5)),
        Fraction(3, 4),
        Fraction(49, 50),
    ),
    (
        "R1 criterion holds, majorization fails at k=3",
        (Fraction(81, 100), Fraction(4, 5), Fraction(79, 100), Fraction(51, 100)),
        Fraction(81, 100),
        Fraction(9, 10),
    ),
    (
        "R2 criterion holds, majorization fails at k=3",
        (Fraction(181, 200), Fraction(9, 10), Fraction(4, 5), Fraction(51, 100)),
        Fraction(81, 100),
        Fraction(23, 25),
    ),
)

_SCHMIDT_ORDER_PROPERTY = {
    RegimeTag.R1: "schmidt_order_r1",
    RegimeTag.R2: "schmidt_order_r2",
    RegimeTag.R3: "schmidt_order_r3",
}


def make_sweep_config(**values: Any) -> SweepConfig:
    """Build a SweepConfig, turning validation errors into ConfigInvalid"""
    try:
        return SweepConfig(**values)
    except ValidationError as e:
        problems = [
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in e.errors()
        ]
        raise ConfigInvalid(problems) from None


def sample_generator(seed: int, index: int) -> np.random.Generator:
    """Independent stream for sample ``index``"""
    return np.random.Generator(np.random.Philox(key=seed, counter=index << 64))


@dataclass(frozen=True)
class SweepSample:
    """One accepted draw"""
    index: int
    scenario: Scenario
    regime: RegimeTag
    alpha1: float
    alpha2: float


@dataclass
class SweepTally:
    """Mergeable counters of a (partial) sweep"""
    total: int = 0
    agreements: int = 0
    mismatches: int = 0
    explained_mismatches: int = 0
    skipped: int = 0
    mismatches_by_regime: Dict[str, int] = field(
        default_factory=lambda: {tag.value: 0 for tag in RegimeTag}
    )
    regime_counts: Dict[str, int] = field(
        default_factory=lambda: {tag.value: 0 for tag in RegimeTag}
    )
    property_failures: Dict[str, int] = field(
        default_factory=lambda: {name: 0 for name in PROPERTY_NAMES}
    )
    appendix_b1_gap: int = 0
    records: List[MismatchRecord] = field(default_factory=list)

    def fail(self, name: str) -> None:
        self.property_failures[name] += 1

    def merge(self, other: "SweepTally") -> None:
        self.total += other.total
        self.agreements += other.agreements
        self.mismatches += other.mismatches
        self.explained_mismatches += other.explained_mismatches
        self.skipped += other.skipped
        self.appendix_b1_gap += other.appendix_b1_gap
        for target, source in (
            (self.mismatches_by_regime, other.mismatches_by_regime),
            (self.regime_counts, other.regime_counts),
            (self.property_failures, other.property_failures),
        ):
            for key, count in source.items():
                target[key] = target.get(key, 0) + count
        self.records.extend(other.records)


def _usable(regime: Regime, margin: float) -> bool:
    interval = regime.alpha1_interval
    return not interval.is_empty and float(interval.width) > 2 * margin


def draw_sample(cfg: SweepConfig, index: int) -> Optional[SweepSample]:
    """
    Draw sample ``index`` or None when every attempt landed within
    ``boundary_margin`` of a boundary.
    """
    rng = sample_generator(cfg.seed, index)
    margin = cfg.boundary_margin

    for _ in range(cfg.max_attempts):
        xi1, eta1, xi2, eta2 = np.sort(rng.uniform(0.5, 1.0, size=4))[::-1].tolist()
        gaps = (1.0 - xi1, xi1 - eta1, eta1 - xi2, xi2 - eta2, eta2 - 0.5)
        if min(gaps) < margin:
            continue

        s = Scenario(xi1, eta1, xi2, eta2)
        t = thresholds(s)
        if abs(xi2 - t.t_low) < margin or abs(xi2 - t.t_high) < margin:
            continue

        candidates = [r for r in classify_regimes(s) if _usable(r, margin)]
        if cfg.regime_filter is not None:
            candidates = [r for r in candidates if r.tag == cfg.regime_filter]
        if not candidates:
            continue
        regime = candidates[int(rng.integers(len(candidates)))]

        interval = regime.alpha1_interval
        alpha1 = float(rng.uniform(float(interval.lo), float(interval.hi)))
        if interval.distance_to_boundary(alpha1) < margin:
            continue

        bound = float(min_alpha2(s, alpha1, warn=False).value)
        lo = max(0.5, min(bound, 1.0) * float(rng.random()))
        alpha2 = float(rng.uniform(lo, 1.0))
        if (
            abs(alpha1 * xi1 - alpha2 * xi2) < margin
            or alpha2 - 0.5 < margin
            or 1.0 - alpha2 < margin
        ):
            continue

        return SweepSample(index, s, regime.tag, alpha1, alpha2)

    return None


def _spectra_equal(source, target) -> bool:
    return all(near(a, b) for a, b in zip(source, target))


def evaluate_sample(sample: SweepSample, tally: SweepTally, entropy_tolerance: float) -> None:
    """Run every check on one sample and record the outcome in ``tally``"""
    s, alpha1, alpha2 = sample.scenario, sample.alpha1, sample.alpha2

    proposition = convertible_iff(s, alpha1, alpha2)
    if not proposition.hypotheses_met:
        logger.debug(f"Sample {sample.index} outside hypotheses: {proposition.reason}")
        tally.skipped += 1
        return

    oracle = brute_force_convertible(s, alpha1, alpha2)
    tally.total += 1
    tally.regime_counts[sample.regime.value] += 1

    if proposition.convertible == oracle.convertible:
        tally.agreements += 1
    else:
        tally.mismatches += 1
        tally.mismatches_by_regime[sample.regime.value] += 1
        if proposition.appendix_b_holds is False:
            tally.explained_mismatches += 1
        tally.records.append(
            MismatchRecord(
                index=sample.index,
                regime=sample.regime,
                xi1=s.xi1,
                eta1=s.eta1,
                xi2=s.xi2,
                eta2=s.eta2,
                alpha1=alpha1,
                alpha2=alpha2,
                proposition_convertible=bool(proposition.convertible),
                oracle_convertible=oracle.convertible,
                first_failure=oracle.first_failure,
                appendix_b_holds=proposition.appendix_b_holds,
            )
        )

    # Entropy equality against the directly computed spectrum entropies
    source, target = gamma_spectra(s, alpha1, alpha2)
    e_source, e_target = von_neumann_entropy(source), von_neumann_entropy(target)
    e_phi1, e_psi1 = binary_entropy(s.xi1), binary_entropy(s.eta1)
    e_phi2, e_psi2 = binary_entropy(s.xi2), binary_entropy(s.eta2)
    if (
        abs(superposition_entropy(e_phi1, e_psi1, alpha1) - e_source) >= entropy_tolerance
        or abs(superposition_entropy(e_phi2, e_psi2, alpha2) - e_target) >= entropy_tolerance
    ):
        tally.fail("entropy_equality")

    if oracle.convertible and not _spectra_equal(source, target):
        if e_source < e_target - 1e-12:
            tally.fail("entropy_monotone")
        if necessary_condition(s, alpha1, alpha2) is NecessaryCondition.VIOLATED:
            tally.fail("entropy_condition")

    if not appendix_a1(s):
        tally.fail("appendix_a1")
    if not (appendix_a2(s.xi1, s.eta1) and appendix_a2(s.xi2, s.eta2)):
        tally.fail("appendix_a2")

    if alpha1 * s.xi1 <= alpha2 * s.xi2:
        b1 = appendix_b1(s, alpha1, alpha2)
        if not b1:
            tally.appendix_b1_gap += 1
            if b1_provable(s, alpha1):
                tally.fail("appendix_b1_provable")

    order_property = _SCHMIDT_ORDER_PROPERTY[sample.regime]
    try:
        expected = schmidt_order_lemma(s, sample.regime, alpha1)
    except HypothesisViolated:
        tally.fail(order_property)
    else:
        if superposition_schmidt_order(s.xi1, s.eta1, alpha1) != expected:
            tally.fail(order_property)


def run_chunk(cfg: SweepConfig, start: int, stop: int) -> SweepTally:
    """Draw and evaluate samples ``start..stop-1``"""
    entropy_tolerance = get_config().numerics.entropy_tolerance
    tally = SweepTally()
    for index in range(start, stop):
        sample = draw_sample(cfg, index)
        if sample is None:
            tally.skipped += 1
            continue
        evaluate_sample(sample, tally, entropy_tolerance)
    tally.records.sort(key=lambda record: record.index)
    del tally.records[cfg.max_mismatch_records:]
    return tally


def run_spot_checks() -> Tuple[int, int]:
    """
    Replay the exact points in rational and real mode.

    Returns (checks run, disagreements between the two modes).
    """
    disagreements = 0
    for label, parameters, alpha1, alpha2 in SPOT_CHECK_POINTS:
        exact = brute_force_convertible(Scenario(*parameters), alpha1, alpha2)
        real = brute_force_convertible(
            Scenario(*(float(p) for p in parameters)), float(alpha1), float(alpha2)
        )
        if (exact.convertible, exact.first_failure) != (real.convertible, real.first_failure):
            disagreements += 1
            logger.warning(
                f"Spot check '{label}' differs between modes: "
                f"exact={exact.convertible}/{exact.first_failure}, "
                f"real={real.convertible}/{real.first_failure}"
            )
    return len(SPOT_CHECK_POINTS), disagreements


def _partition(samples: int, parts: int) -> List[Tuple[int, int]]:
    edges = np.linspace(0, samples, parts + 1).astype(int).tolist()
    return [(lo, hi) for lo, hi in zip(edges, edges[1:]) if hi > lo]


def run_sweep(cfg: Union[SweepConfig, Mapping[str, Any]]) -> SweepReport:
    """
    Run a sweep and aggregate its report.

    ``cfg`` may be a SweepConfig or a mapping of its fields; invalid values
    raise ConfigInvalid. The report is also written to ``cfg.output_path``
    when set.
    """
    if not isinstance(cfg, SweepConfig):
        cfg = make_sweep_config(**dict(cfg))

    with with_run_id():
        logger.info(
            f"Sweep started: samples={cfg.samples} seed={cfg.seed} "
            f"workers={cfg.workers} regime={cfg.regime_filter.value if cfg.regime_filter else 'any'}"
        )
        started = time.perf_counter()

        tally = SweepTally()
        if cfg.workers == 1:
            tally.merge(run_chunk(cfg, 0, cfg.samples))
        else:
            ranges = _partition(cfg.samples, cfg.workers)
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                futures = [pool.submit(run_chunk, cfg, lo, hi) for lo, hi in ranges]
                for future in futures:
                    tally.merge(future.result())

        spot_checks, spot_failures = run_spot_checks()
        tally.property_failures["spot_check_modes"] += spot_failures

        records = sorted(tally.records, key=lambda record: record.index)
        report = SweepReport(
            config=cfg,
            total=tally.total,
            agreements=tally.agreements,
            mismatches=tally.mismatches,
            explained_mismatches=tally.explained_mismatches,
            unexplained_mismatches=tally.mismatches - tally.explained_mismatches,
            mismatches_by_regime=tally.mismatches_by_regime,
            regime_counts=tally.regime_counts,
            mismatch_records=records[:cfg.max_mismatch_records],
            property_failures=tally.property_failures,
            observations={"appendix_b1_gap": tally.appendix_b1_gap},
            skipped=tally.skipped,
            spot_checks=spot_checks,
        )

        elapsed = time.perf_counter() - started
        logger.info(
            f"Sweep finished in {elapsed:.2f}s: total={report.total} "
            f"mismatches={report.mismatches} (unexplained {report.unexplained_mismatches}) "
            f"property failures={report.property_failure_total} skipped={report.skipped}"
        )
        if report.unexplained_mismatches:
            logger.warning(f"{report.unexplained_mismatches} mismatches not explained by appendix_b1 failing")

    if cfg.output_path:
        write_report(report, cfg.output_path)
    return report


def report_document(report: SweepReport) -> Dict[str, Any]:
    """JSON document for a report: schema version, verdicts and all fields"""
    document: Dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "passed": report.passed,
        "consistent": report.consistent,
    }
    document.update(report.model_dump(mode="json"))
    return document


def write_report(report: SweepReport, path: Union[str, Path]) -> Path:
    """Write the report JSON atomically: temp file in the same directory, then rename"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(dumps(report_document(report), indent=True))
            handle.write("\n")
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info(f"Sweep report written to {path}")
    return path


__all__ = [
    "REPORT_SCHEMA",
    "SPOT_CHECK_POINTS",
    "SweepSample",
    "SweepTally",
    "make_sweep_config",
    "sample_generator",
    "draw_sample",
    "evaluate_sample",
    "run_chunk",
    "run_spot_checks",
    "run_sweep",
    "report_document",
    "write_report",
]
