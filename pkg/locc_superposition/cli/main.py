"""
locc-superpose command line interface.

Commands:
  check          majorization verdict, regimes, proposition and entropies of one conversion
  region         alpha2 region of the entropy necessary condition (csv: plotting curve)
  analyze        thresholds, regimes and minimal alpha2 over an alpha1 grid
  verify-props   randomized sweep cross-validating the propositions with the oracle

Numbers are given as "p/q" (exact) or decimals (real). Exit codes: 0 success
(check: convertible), 1 negative result (check: not convertible, verify-props:
failed), 2 invalid input.
"""

import functools
from dataclasses import dataclass
from typing import Callable, Optional

import click

from ..config import OUTPUT_FORMATS, get_config, init_config
from ..core.errors import LoccError
from ..core.models import OutputFormat, RegimeTag
from ..core.numbers import Number, parse_number
from ..entanglement import (
    alpha2_region,
    gamma_entropies,
    necessary_condition,
    region_curve,
    state_entropies,
)
from ..logging import configure_logging, get_logger
from ..majorization import majorization_table
from ..oracle import brute_force_convertible, make_sweep_config, run_sweep
from ..propositions import classify_regimes, convertible_iff, regime_catalog, thresholds
from ..states import make_scenario
from . import render

logger = get_logger(__name__)


@dataclass(frozen=True)
class CliState:
    """Options of the command group shared by every subcommand"""
    output_format: OutputFormat
    use_float: bool


class NumberType(click.ParamType):
    """"p/q" or integer literal -> Fraction, decimal literal -> float"""
    name = "number"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_number(value)
        except LoccError as e:
            self.fail(str(e), param, ctx)


NUMBER = NumberType()


def _numbers(ctx: click.Context, *values: Number):
    """Apply --float to parsed inputs"""
    state: CliState = ctx.obj
    if state.use_float:
        return tuple(float(v) for v in values)
    return values


def handle_errors(command: Callable) -> Callable:
    """Report domain errors on stderr and exit with status 2"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except LoccError as e:
            logger.error(f"{command.__name__} failed: {e}")
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(2)

    return wrapper


def emit(text: str) -> None:
    click.echo(text.rstrip("\n"))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--env-file", type=click.Path(dir_okay=False), default=None,
              help="Load settings from this .env file (existing variables win).")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Log level for stderr diagnostics (default: LOG_LEVEL or WARNING).")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None,
              help="Output format (default: LOCC_DEFAULT_FORMAT or human).")
@click.option("--float", "use_float", is_flag=True, default=False,
              help="Evaluate in floating point even for p/q inputs.")
@click.pass_context
def cli(ctx: click.Context, env_file: Optional[str], log_level: Optional[str],
        output_format: Optional[str], use_float: bool):
    """Decide LOCC conversions between superpositions of bi-orthogonal two-term states."""
    try:
        config = init_config(env_file)
    except LoccError as e:
        click.echo(f"Error: {e}", err=True)
        raise click.exceptions.Exit(2)
    configure_logging(log_level)
    ctx.obj = CliState(
        output_format=OutputFormat(output_format or config.output.default_format),
        use_float=use_float,
    )


@cli.command()
@click.argument("xi1", type=NUMBER)
@click.argument("eta1", type=NUMBER)
@click.argument("xi2", type=NUMBER)
@click.argument("eta2", type=NUMBER)
@click.argument("alpha1", type=NUMBER)
@click.argument("alpha2", type=NUMBER)
@click.pass_context
@handle_errors
def check(ctx: click.Context, xi1, eta1, xi2, eta2, alpha1, alpha2):
    """Check sqrt(a1)|phi1>+sqrt(1-a1)|psi1> -> sqrt(a2)|phi2>+sqrt(1-a2)|psi2>.

    phi_i, psi_i have larger Schmidt coefficients XI_i, ETA_i with
    1/2 < ETA2 < XI2 < ETA1 < XI1 < 1; ALPHA1, ALPHA2 lie in [0, 1].

    Exit 0 when convertible, 1 when not, 2 on invalid input.
    csv columns: k, gamma1, gamma2, gamma1_prefix, gamma2_prefix, margin, satisfied.
    """
    xi1, eta1, xi2, eta2, alpha1, alpha2 = _numbers(ctx, xi1, eta1, xi2, eta2, alpha1, alpha2)
    s = make_scenario(xi1, eta1, xi2, eta2)

    verdict = brute_force_convertible(s, alpha1, alpha2)
    rows = majorization_table(verdict.source, verdict.target, get_config().numerics.real_tolerance)

    proposition = None
    condition = None
    gamma1_entropy, gamma2_entropy = gamma_entropies(s, alpha1, alpha2)
    if 0 < alpha1 < 1 and 0 < alpha2 < 1:
        proposition = convertible_iff(s, alpha1, alpha2)
        condition = necessary_condition(
            s, alpha1, alpha2, get_config().numerics.real_tolerance
        ).value

    e_phi1, e_psi1, e_phi2, e_psi2 = state_entropies(s)
    document = render.check_document(
        s, alpha1, alpha2, verdict, rows,
        classify_regimes(s), thresholds(s), proposition,
        {
            "phi1": e_phi1, "psi1": e_psi1, "phi2": e_phi2, "psi2": e_psi2,
            "gamma1": gamma1_entropy, "gamma2": gamma2_entropy,
        },
        condition,
    )

    state: CliState = ctx.obj
    if state.output_format is OutputFormat.JSON:
        emit(render.to_json(document))
    elif state.output_format is OutputFormat.CSV:
        emit(render.check_csv(verdict, rows))
    else:
        emit(render.check_human(document))

    ctx.exit(0 if verdict.convertible else 1)


@cli.command()
@click.argument("xi1", type=NUMBER)
@click.argument("eta1", type=NUMBER)
@click.argument("xi2", type=NUMBER)
@click.argument("eta2", type=NUMBER)
@click.argument("alpha1", type=NUMBER)
@click.option("--tol", type=float, default=None,
              help="Bisection tolerance for the interval endpoints (default: LOCC_ROOT_TOLERANCE).")
@click.option("--points", type=click.IntRange(min=2), default=None,
              help="Curve grid size for csv output (default: LOCC_GRID_POINTS, 1001).")
@click.pass_context
@handle_errors
def region(ctx: click.Context, xi1, eta1, xi2, eta2, alpha1, tol, points):
    """alpha2 values passing the entropy necessary condition for ALPHA1 in (0, 1).

    csv output samples the curve at POINTS evenly spaced alpha2 values from
    m to 1 - m, m = 1/(2*(POINTS - 1)), with columns
    alpha2, g, threshold, inside (g < threshold) and in_region (inside the
    solved intervals).
    """
    xi1, eta1, xi2, eta2, alpha1 = _numbers(ctx, xi1, eta1, xi2, eta2, alpha1)
    s = make_scenario(xi1, eta1, xi2, eta2)
    solved = alpha2_region(s, alpha1, tol)

    state: CliState = ctx.obj
    if state.output_format is OutputFormat.CSV:
        emit(render.region_csv(region_curve(s, alpha1, points), solved))
    elif state.output_format is OutputFormat.JSON:
        emit(render.to_json(render.region_document(s, alpha1, solved)))
    else:
        emit(render.region_human(render.region_document(s, alpha1, solved)))


@cli.command()
@click.argument("xi1", type=NUMBER)
@click.argument("eta1", type=NUMBER)
@click.argument("xi2", type=NUMBER)
@click.argument("eta2", type=NUMBER)
@click.option("--grid", "points", type=click.IntRange(min=2), default=11, show_default=True,
              help="alpha1 grid points across each applicable interval.")
@click.pass_context
@handle_errors
def analyze(ctx: click.Context, xi1, eta1, xi2, eta2, points):
    """Thresholds, applicable regimes and minimal alpha2 across alpha1.

    csv columns: regime, alpha1, min_alpha2, feasible.
    """
    xi1, eta1, xi2, eta2 = _numbers(ctx, xi1, eta1, xi2, eta2)
    s = make_scenario(xi1, eta1, xi2, eta2)
    document = render.analyze_document(s, thresholds(s), regime_catalog(s), points)

    state: CliState = ctx.obj
    if state.output_format is OutputFormat.JSON:
        emit(render.to_json(document))
    elif state.output_format is OutputFormat.CSV:
        emit(render.analyze_csv(document))
    else:
        emit(render.analyze_human(document))


@cli.command("verify-props")
@click.option("--samples", type=int, default=None, help="Number of samples (default: LOCC_SWEEP_SAMPLES).")
@click.option("--seed", type=int, default=None, help="64-bit sweep seed (default: LOCC_SWEEP_SEED).")
@click.option("--boundary-margin", type=float, default=None,
              help="Minimum distance of accepted samples from every boundary.")
@click.option("--regime", "regime_filter", type=click.Choice([tag.value for tag in RegimeTag]), default=None,
              help="Only sample this regime.")
@click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None,
              help="Also write the JSON report to this file (atomically).")
@click.option("--workers", type=int, default=None, help="Worker processes (default: LOCC_SWEEP_WORKERS).")
@click.option("--strict/--lenient", default=True, show_default=True,
              help="--lenient also succeeds when every mismatch is explained by appendix_b1 failing.")
@click.pass_context
@handle_errors
def verify_props(ctx: click.Context, samples, seed, boundary_margin, regime_filter,
                 output_path, workers, strict):
    """Cross-validate the propositions against brute-force majorization.

    Exit 0 when the sweep passed (no mismatches, no property failures), 1
    otherwise, 2 on invalid options. csv output lists the mismatch records.
    """
    defaults = get_config().sweep
    cfg = make_sweep_config(
        samples=defaults.samples if samples is None else samples,
        seed=defaults.seed if seed is None else seed,
        boundary_margin=defaults.boundary_margin if boundary_margin is None else boundary_margin,
        regime_filter=regime_filter,
        output_path=output_path,
        max_attempts=defaults.max_attempts,
        workers=defaults.workers if workers is None else workers,
        max_mismatch_records=defaults.max_mismatch_records,
    )
    report = run_sweep(cfg)

    state: CliState = ctx.obj
    if state.output_format is OutputFormat.JSON:
        emit(render.to_json(render.sweep_document(report)))
    elif state.output_format is OutputFormat.CSV:
        emit(render.sweep_csv(report))
    else:
        emit(render.sweep_human(report))

    ok = report.passed if strict else report.consistent
    ctx.exit(0 if ok else 1)


def main() -> None:
    cli(prog_name="locc-superpose")


__all__ = ["cli", "main", "NumberType", "CliState"]
