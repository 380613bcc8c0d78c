"""
Command result documents and their human / json / csv renderings.

Every command first builds a plain dict document (the json output, carrying
``"schema": 1``); the human text and the csv table are derived from it or
from the same domain results.
"""

import io
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd

from ..core.models import (
    AlphaRegion,
    ConversionVerdict,
    Interval,
    PropositionVerdict,
    Regime,
    Scenario,
    SweepReport,
    Thresholds,
)
from ..core.numbers import Number, format_number, format_text
from ..entanglement.region import CurvePoint
from ..majorization import MajorizationRow
from ..oracle import REPORT_SCHEMA, report_document
from ..propositions import min_alpha2
from ..utils.fast_json import dumps, to_jsonable

SCHEMA = REPORT_SCHEMA

CHECK_CSV_COLUMNS = ["k", "gamma1", "gamma2", "gamma1_prefix", "gamma2_prefix", "margin", "satisfied"]
REGION_CSV_COLUMNS = ["alpha2", "g", "threshold", "inside", "in_region"]
ANALYZE_CSV_COLUMNS = ["regime", "alpha1", "min_alpha2", "feasible"]
SWEEP_CSV_COLUMNS = [
    "index", "regime", "xi1", "eta1", "xi2", "eta2", "alpha1", "alpha2",
    "proposition_convertible", "oracle_convertible", "first_failure", "appendix_b_holds",
]


# ---------------------------------------------------------------------------
# Shared pieces
# ---------------------------------------------------------------------------

def scenario_inputs(s: Scenario, **alphas: Number) -> Dict[str, Any]:
    inputs = {
        "xi1": format_number(s.xi1),
        "eta1": format_number(s.eta1),
        "xi2": format_number(s.xi2),
        "eta2": format_number(s.eta2),
    }
    inputs.update({name: format_number(value) for name, value in alphas.items()})
    return inputs


def interval_document(interval: Interval) -> Dict[str, Any]:
    return {
        "lo": format_number(interval.lo),
        "hi": format_number(interval.hi),
        "lo_closed": interval.lo_closed,
        "hi_closed": interval.hi_closed,
        "notation": interval.notation(),
    }


def thresholds_document(t: Thresholds) -> Dict[str, Any]:
    return {
        "t_low": format_number(t.t_low),
        "t_high": format_number(t.t_high),
        "a": format_number(t.a),
    }


def regime_document(regime: Regime) -> Dict[str, Any]:
    return {
        "tag": regime.tag.value,
        "applicable": regime.applicable,
        "alpha1_interval": interval_document(regime.alpha1_interval),
        "alpha1_interval_empty": regime.alpha1_interval.is_empty,
        "xi2_range": interval_document(regime.xi2_range),
        "xi2_range_empty": regime.xi2_range_empty,
    }


def _optional_number(value: Optional[Number]) -> Any:
    return None if value is None else format_number(value)


def to_json(document: Dict[str, Any]) -> str:
    return dumps(to_jsonable(document), indent=True)


def to_csv(rows: Iterable[Dict[str, Any]], columns: Sequence[str]) -> str:
    """Header row plus one line per row; Fractions stay "p/q" strings"""
    frame = pd.DataFrame(
        [{column: to_jsonable(row.get(column)) for column in columns} for row in rows],
        columns=list(columns),
    )
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def check_document(
    s: Scenario,
    alpha1: Number,
    alpha2: Number,
    verdict: ConversionVerdict,
    rows: List[MajorizationRow],
    regimes: List[Regime],
    thresholds: Thresholds,
    proposition: Optional[PropositionVerdict],
    entropies: Dict[str, float],
    condition: Optional[str],
) -> Dict[str, Any]:
    """json document of ``check``; ``convertible`` is the oracle verdict"""
    proposition_doc = None
    if proposition is not None:
        proposition_doc = {
            "hypotheses_met": proposition.hypotheses_met,
            "convertible": proposition.convertible,
            "reason": proposition.reason,
            "regime": proposition.regime.value if proposition.regime else None,
            "min_alpha2": format_number(proposition.min_alpha2.value),
            "min_alpha2_feasible": proposition.min_alpha2.feasible,
            "criterion_margin": _optional_number(proposition.criterion_margin),
            "appendix_b_holds": proposition.appendix_b_holds,
        }

    return {
        "schema": SCHEMA,
        "command": "check",
        "inputs": scenario_inputs(s, alpha1=alpha1, alpha2=alpha2),
        "exact": verdict.source.is_exact,
        "spectra": {
            "gamma1": [format_number(v) for v in verdict.source],
            "gamma2": [format_number(v) for v in verdict.target],
        },
        "majorization": {
            "convertible": verdict.convertible,
            "first_failure": verdict.first_failure,
            "rows": [
                {
                    "k": row.k,
                    "gamma1_prefix": format_number(row.source_prefix),
                    "gamma2_prefix": format_number(row.target_prefix),
                    "margin": format_number(row.margin),
                    "satisfied": row.satisfied,
                }
                for row in rows
            ],
        },
        "thresholds": thresholds_document(thresholds),
        "regimes": [regime_document(r) for r in regimes],
        "proposition": proposition_doc,
        "entropies": entropies,
        "necessary_condition": condition,
        "convertible": verdict.convertible,
    }


def check_csv(verdict: ConversionVerdict, rows: List[MajorizationRow]) -> str:
    return to_csv(
        (
            {
                "k": row.k,
                "gamma1": verdict.source[row.k - 1],
                "gamma2": verdict.target[row.k - 1],
                "gamma1_prefix": row.source_prefix,
                "gamma2_prefix": row.target_prefix,
                "margin": row.margin,
                "satisfied": row.satisfied,
            }
            for row in rows
        ),
        CHECK_CSV_COLUMNS,
    )


def check_human(document: Dict[str, Any]) -> str:
    inputs = document["inputs"]
    lines = [
        "Scenario: xi1={xi1} eta1={eta1} xi2={xi2} eta2={eta2}".format(**inputs),
        "Weights:  alpha1={alpha1} alpha2={alpha2}".format(**inputs),
        "",
        "Gamma1 spectrum: " + ", ".join(_text(v) for v in document["spectra"]["gamma1"]),
        "Gamma2 spectrum: " + ", ".join(_text(v) for v in document["spectra"]["gamma2"]),
        "",
        f"  {'k':>2}  {'Gamma1 prefix':>16}  {'Gamma2 prefix':>16}  {'margin':>16}",
    ]
    for row in document["majorization"]["rows"]:
        mark = "ok" if row["satisfied"] else "FAIL"
        lines.append(
            f"  {row['k']:>2}  {_text(row['gamma1_prefix']):>16}  "
            f"{_text(row['gamma2_prefix']):>16}  {_text(row['margin']):>16}  {mark}"
        )

    majorization = document["majorization"]
    if majorization["convertible"]:
        lines.append("Oracle: convertible (every majorization inequality holds)")
    else:
        lines.append(f"Oracle: NOT convertible (first failure at k={majorization['first_failure']})")

    t = document["thresholds"]
    lines += [
        "",
        f"Thresholds: T_low={_text(t['t_low'])} T_high={_text(t['t_high'])} A={_text(t['a'])}",
    ]
    applicable = [r for r in document["regimes"] if r["applicable"]]
    if applicable:
        for regime in applicable:
            lines.append(f"Regime {regime['tag']}: alpha1 in {regime['alpha1_interval']['notation']}")
    else:
        lines.append("Regime: none applies")

    proposition = document["proposition"]
    if proposition is None:
        lines.append("Proposition: not evaluated (alphas must lie strictly inside (0, 1))")
    elif proposition["hypotheses_met"]:
        verdict = "convertible" if proposition["convertible"] else "NOT convertible"
        lines.append(f"Proposition: hypotheses met, {verdict} ({proposition['reason']})")
    else:
        lines.append(f"Proposition: hypotheses not met ({proposition['reason']})")
    if proposition is not None:
        feasible = "" if proposition["min_alpha2_feasible"] else " (infeasible)"
        lines.append(f"Minimal alpha2: {_text(proposition['min_alpha2'])}{feasible}")

    e = document["entropies"]
    lines += [
        "",
        "Entropies: E(phi1)={} E(psi1)={} E(phi2)={} E(psi2)={}".format(
            *(format_text(e[key], 5) for key in ("phi1", "psi1", "phi2", "psi2"))
        ),
        "           E(Gamma1)={} E(Gamma2)={}".format(
            format_text(e["gamma1"], 5), format_text(e["gamma2"], 5)
        ),
    ]
    if document["necessary_condition"] is not None:
        lines.append(f"Entropy necessary condition: {document['necessary_condition']}")
    return "\n".join(lines)


def _text(value: Any) -> str:
    """Human rendering of an already formatted number ("p/q" strings stay verbatim)"""
    if isinstance(value, str):
        return value
    return format_text(value)


# ---------------------------------------------------------------------------
# region
# ---------------------------------------------------------------------------

def region_document(s: Scenario, alpha1: Number, region: AlphaRegion) -> Dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": "region",
        "inputs": scenario_inputs(s, alpha1=alpha1),
        "tolerance": region.root_tolerance,
        "threshold": region.threshold,
        "slope": region.slope,
        "maximizer": region.maximizer,
        "peak_value": region.peak_value,
        "intervals": [{"lo": float(iv.lo), "hi": float(iv.hi)} for iv in region.intervals],
        "measure": region.measure,
    }


def region_csv(curve: List[CurvePoint], region: AlphaRegion) -> str:
    return to_csv(
        (
            {
                "alpha2": point.alpha2,
                "g": point.g,
                "threshold": point.threshold,
                "inside": point.inside,
                "in_region": region.contains(point.alpha2),
            }
            for point in curve
        ),
        REGION_CSV_COLUMNS,
    )


def region_human(document: Dict[str, Any]) -> str:
    inputs = document["inputs"]
    lines = [
        "Scenario: xi1={xi1} eta1={eta1} xi2={xi2} eta2={eta2}, alpha1={alpha1}".format(**inputs),
        f"Condition: h2(alpha2) {document['slope']:+.5f}*alpha2 < {document['threshold']:.5f}",
        f"Maximum of the left side: {document['peak_value']:.5f} at alpha2={document['maximizer']:.5f}",
    ]
    if document["intervals"]:
        spans = " U ".join(f"({iv['lo']:.4f}, {iv['hi']:.4f})" for iv in document["intervals"])
        lines.append(f"Region: alpha2 in {spans}")
    else:
        lines.append("Region: empty (no alpha2 passes the necessary condition)")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def alpha1_grid(interval: Interval, points: int) -> List[Number]:
    """Evenly spaced alpha1 values over an interval; open endpoints are left out"""
    lo, hi = interval.lo, interval.hi
    if isinstance(lo, Fraction) and isinstance(hi, Fraction):
        grid = [lo + (hi - lo) * Fraction(i, points - 1) for i in range(points)]
    else:
        grid = np.linspace(float(lo), float(hi), points).tolist()
    if not interval.lo_closed:
        grid = grid[1:]
    if not interval.hi_closed:
        grid = grid[:-1]
    return grid


def regime_notice(regime: Regime) -> Optional[str]:
    if regime.xi2_range_empty:
        return (
            f"empty regime: {regime.tag.value} needs xi2 in {regime.xi2_range.notation()}, "
            f"which does not meet (1/2, eta1)"
        )
    if regime.applicable and regime.alpha1_interval.is_empty:
        return f"empty regime: {regime.tag.value} alpha1 interval {regime.alpha1_interval.notation()} is empty"
    return None


def analyze_document(
    s: Scenario,
    thresholds: Thresholds,
    catalog: List[Regime],
    points: int,
) -> Dict[str, Any]:
    regimes = []
    grid_rows = []
    for regime in catalog:
        entry = regime_document(regime)
        entry["notice"] = regime_notice(regime)
        regimes.append(entry)
        if not regime.applicable or regime.alpha1_interval.is_empty:
            continue
        for alpha1 in alpha1_grid(regime.alpha1_interval, points):
            bound = min_alpha2(s, alpha1, warn=False)
            grid_rows.append(
                {
                    "regime": regime.tag.value,
                    "alpha1": format_number(alpha1),
                    "min_alpha2": format_number(bound.value),
                    "feasible": bound.feasible,
                }
            )

    return {
        "schema": SCHEMA,
        "command": "analyze",
        "inputs": scenario_inputs(s),
        "thresholds": thresholds_document(thresholds),
        "applicable": [r.tag.value for r in catalog if r.applicable],
        "regimes": regimes,
        "grid": grid_rows,
    }


def analyze_csv(document: Dict[str, Any]) -> str:
    return to_csv(document["grid"], ANALYZE_CSV_COLUMNS)


def analyze_human(document: Dict[str, Any]) -> str:
    t = document["thresholds"]
    lines = [
        "Scenario: xi1={xi1} eta1={eta1} xi2={xi2} eta2={eta2}".format(**document["inputs"]),
        f"T_low  = (1-eta1)/(2-xi1-eta1) = {_text(t['t_low'])}",
        f"T_high = xi1*eta1/(1-xi1+eta1) = {_text(t['t_high'])}",
        f"A      = eta1/(1-xi1+eta1)     = {_text(t['a'])}",
        "",
    ]
    if not document["applicable"]:
        lines.append("No regime applies to this xi2")
    for regime in document["regimes"]:
        if regime["applicable"]:
            lines.append(f"Regime {regime['tag']}: alpha1 in {regime['alpha1_interval']['notation']}")
        if regime["notice"]:
            lines.append(f"Notice: {regime['notice']}")

    if document["grid"]:
        lines += ["", f"  {'regime':<6}  {'alpha1':>14}  {'min alpha2':>14}"]
        for row in document["grid"]:
            flag = "" if row["feasible"] else "  infeasible"
            lines.append(
                f"  {row['regime']:<6}  {_text(row['alpha1']):>14}  {_text(row['min_alpha2']):>14}{flag}"
            )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verify-props
# ---------------------------------------------------------------------------

def sweep_document(report: SweepReport) -> Dict[str, Any]:
    document = report_document(report)
    document["command"] = "verify-props"
    return document


def sweep_csv(report: SweepReport) -> str:
    return to_csv(
        (record.model_dump(mode="json") for record in report.mismatch_records),
        SWEEP_CSV_COLUMNS,
    )


def sweep_human(report: SweepReport) -> str:
    cfg = report.config
    lines = [
        f"Sweep: samples={cfg.samples} seed={cfg.seed} boundary_margin={cfg.boundary_margin:g}"
        + (f" regime={cfg.regime_filter.value}" if cfg.regime_filter else ""),
        f"Evaluated {report.total} samples ({report.skipped} skipped)",
        "Regimes: " + ", ".join(f"{tag}={count}" for tag, count in report.regime_counts.items()),
        f"Agreements: {report.agreements}",
        f"Mismatches: {report.mismatches} "
        f"(explained by appendix_b1 failing: {report.explained_mismatches}, "
        f"unexplained: {report.unexplained_mismatches})",
        "Mismatches by regime: "
        + ", ".join(f"{tag}={count}" for tag, count in report.mismatches_by_regime.items()),
        f"Observed appendix_b1 gaps: {report.observations.get('appendix_b1_gap', 0)}",
        f"Spot checks: {report.spot_checks}",
        "Property failures:",
    ]
    lines += [f"  {name}: {count}" for name, count in report.property_failures.items()]
    for record in report.mismatch_records[:5]:
        lines.append(
            f"  mismatch #{record.index} {record.regime.value}: xi=({record.xi1:.6f}, {record.eta1:.6f}, "
            f"{record.xi2:.6f}, {record.eta2:.6f}) alpha1={record.alpha1:.6f} alpha2={record.alpha2:.6f} "
            f"first failure k={record.first_failure}"
        )
    status = "PASSED" if report.passed else ("CONSISTENT" if report.consistent else "FAILED")
    lines.append(f"Result: {status}")
    return "\n".join(lines)


__all__ = [
    "SCHEMA",
    "CHECK_CSV_COLUMNS",
    "REGION_CSV_COLUMNS",
    "ANALYZE_CSV_COLUMNS",
    "SWEEP_CSV_COLUMNS",
    "to_json",
    "to_csv",
    "check_document",
    "check_csv",
    "check_human",
    "region_document",
    "region_csv",
    "region_human",
    "alpha1_grid",
    "regime_notice",
    "analyze_document",
    "analyze_csv",
    "analyze_human",
    "sweep_document",
    "sweep_csv",
    "sweep_human",
]
