"""Command-line surface: one click command per computation, JSON or aligned tables on stdout."""
import json
import logging
import sys
from dataclasses import replace
from functools import wraps

import click

from modulilab.algebra.rings import rat_to_str, to_rat
from modulilab.identities import suites
from modulilab.identities.lines import abcd_from_c
from modulilab.invariants.forms import g_form
from modulilab.invariants.invariants import invariants as form_invariants
from modulilab.invariants.quotient import hilbert_series, phi_chain, quotient_point, regular_parameters
from modulilab.shared.config import Config, RunConfig
from modulilab.shared.errors import InternalInconsistencyError, ModuliLabError
from modulilab.shared.models import CPoint, ECoeffs, GCoeffs, format_value
from modulilab.stability import profiles
from modulilab.strata.catalogue import expected_singular_points
from modulilab.strata.classify import classify_e, classify_p3, plane_point
from modulilab.strata.oracle import oracle_count_1111, oracle_count_22
from modulilab.toric import fan as toric
from modulilab.weyl import groups

logger = logging.getLogger(__name__)


class InputError(click.ClickException):
    """Bad mathematical input: reported like a usage error."""

    exit_code = 2


class ComputationError(click.ClickException):
    """An exact computation contradicted itself: reported as a failure, not a usage error."""

    exit_code = 1


def reports_errors(f):
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except InternalInconsistencyError as e:
            raise ComputationError(str(e))
        except ModuliLabError as e:
            raise InputError(str(e))
    return decorated_function


def _parser(cls):
    def parse(ctx, param, value):
        if value is None:
            return None
        try:
            return cls.parse(value)
        except (ValueError, TypeError) as e:
            raise click.BadParameter(str(e))
    return parse


gcoeffs_option = click.option("--gcoeffs", callback=_parser(GCoeffs), help="a,b,c,d")
ecoeffs_option = click.option("--ecoeffs", callback=_parser(ECoeffs), help="a,b,c")
cpoint_option = click.option("--cpoint", callback=_parser(CPoint), help="c0,c1,c2,c3; uses the normal form abcd(c).")


def _one_point(gcoeffs, ecoeffs=None, cpoint=None, allow_e=True):
    given = [x for x in (gcoeffs, ecoeffs, cpoint) if x is not None]
    if len(given) != 1:
        names = "--gcoeffs, --ecoeffs, --cpoint" if allow_e else "--gcoeffs, --cpoint"
        raise click.UsageError(f"Give exactly one of {names}")
    if isinstance(given[0], CPoint):
        return abcd_from_c(given[0])
    return given[0]


def _table(data):
    if isinstance(data, list) and data and isinstance(data[0], dict):
        keys = list(data[0])
        rows = [[str(row.get(k, "")) for k in keys] for row in data]
        widths = [max(len(k), *(len(r[i]) for r in rows)) for i, k in enumerate(keys)]
        lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
        lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
        return "\n".join(lines)
    if isinstance(data, dict):
        width = max((len(k) for k in data), default=0)
        return "\n".join(f"{k.ljust(width)}  {json.dumps(v, sort_keys=True) if not isinstance(v, str) else v}" for k, v in data.items())
    return str(data)


def emit(ctx, data):
    config = ctx.obj
    if config.output == "table":
        click.echo(_table(data))
    else:
        click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


@click.group()
@click.option("--json", "output", flag_value="json", default=True, help="JSON output (default).")
@click.option("--table", "output", flag_value="table", help="Aligned table output.")
@click.option("--workers", type=int, default=None, help="Processes for oracle enumeration.")
@click.pass_context
def cli(ctx, output, workers):
    """Exact computations on the moduli of (1,1,1,1) divisors in (P^1)^4."""
    logging.basicConfig(level=Config.LOG_LEVEL, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = RunConfig.from_env(output=output, workers=workers)


@cli.command()
@gcoeffs_option
@cpoint_option
@ecoeffs_option
@click.pass_context
@reports_errors
def classify(ctx, gcoeffs, ecoeffs, cpoint):
    """Singularity stratum of (a:b:c:d) or of (a:b:c) on E."""
    x = _one_point(gcoeffs, ecoeffs, cpoint)
    stratum = classify_p3(x) if isinstance(x, GCoeffs) else classify_e(x)
    emit(ctx, {"stratum": stratum.value})


@cli.command()
@gcoeffs_option
@cpoint_option
@click.pass_context
@reports_errors
def invariants(ctx, gcoeffs, cpoint):
    """H, L, M, D, R, S, T of the normal form."""
    g = _one_point(gcoeffs, cpoint=cpoint, allow_e=False)
    inv = form_invariants(g_form(g))
    emit(ctx, {name: format_value(value) for name, value in inv._asdict().items()})


@cli.command()
@gcoeffs_option
@cpoint_option
@click.option("--chain", is_flag=True, help="Use the squaring / symmetric-function route.")
@click.pass_context
@reports_errors
def quotient(ctx, gcoeffs, cpoint, chain):
    """Image (H:R:S:T) in P(1,3,4,6)."""
    g = _one_point(gcoeffs, cpoint=cpoint, allow_e=False)
    point = phi_chain(g) if chain else quotient_point(g)
    emit(ctx, {"wpoint": point.coords_text()})


@cli.command("regular-params")
@gcoeffs_option
@cpoint_option
@click.pass_context
@reports_errors
def regular_params(ctx, gcoeffs, cpoint):
    """Local parameters (r, s, t) near the reducible point (2:2:0:0)."""
    g = _one_point(gcoeffs, cpoint=cpoint, allow_e=False)
    r, s, t = regular_parameters(quotient_point(g))
    emit(ctx, {"r": rat_to_str(r), "s": rat_to_str(s), "t": rat_to_str(t)})


def _sorted_points(points):
    return sorted((p.as_tuple() for p in points))


@cli.command()
@gcoeffs_option
@cpoint_option
@click.pass_context
@reports_errors
def orbit(ctx, gcoeffs, cpoint):
    """Orbit of (a:b:c:d) under the 576-element projective group."""
    g = _one_point(gcoeffs, cpoint=cpoint, allow_e=False)
    points = _sorted_points(groups.orbit(groups.projective_weyl_f4(), g))
    emit(ctx, {"size": len(points), "points": [[rat_to_str(x) for x in p] for p in points]})


@cli.command()
@gcoeffs_option
@cpoint_option
@click.option("--elements", is_flag=True, help="Also list the stabilizing matrices.")
@click.pass_context
@reports_errors
def stabilizer(ctx, gcoeffs, cpoint, elements):
    """Stabilizer of (a:b:c:d) in the projective group."""
    g = _one_point(gcoeffs, cpoint=cpoint, allow_e=False)
    stab = groups.stabilizer(groups.projective_weyl_f4(), g)
    data = {"order": stab.order()}
    if elements:
        data["elements"] = [m.to_list() for m in stab]
    emit(ctx, data)


@cli.command("oracle-count")
@gcoeffs_option
@cpoint_option
@ecoeffs_option
@click.option("--prime", "primes", type=int, multiple=True, help="Odd prime; repeatable.")
@click.pass_context
@reports_errors
def oracle_count(ctx, gcoeffs, ecoeffs, cpoint, primes):
    """Brute-force count of singular F_p-points."""
    x = _one_point(gcoeffs, ecoeffs, cpoint)
    config = ctx.obj
    primes = primes or config.primes
    count = oracle_count_1111 if isinstance(x, GCoeffs) else oracle_count_22
    emit(ctx, [count(x, p, workers=config.workers).to_dict() for p in primes])


@cli.command("singular-points")
@gcoeffs_option
@cpoint_option
@ecoeffs_option
@click.pass_context
@reports_errors
def singular_points(ctx, gcoeffs, ecoeffs, cpoint):
    """Catalogued singular points of a normal form."""
    emit(ctx, expected_singular_points(_one_point(gcoeffs, ecoeffs, cpoint)).to_dict())


@cli.command()
@click.option("--preset", required=True, type=click.Choice(sorted(profiles.presets())))
@click.option("--a-value", default=None, help="Log discrepancy A_X; defaults per preset.")
@click.pass_context
@reports_errors
def beta(ctx, preset, a_value):
    """S-invariant and beta-invariant of a volume profile."""
    if preset == "delta-sextic-dP":
        nemuro = profiles.nemuro_bound()
        emit(ctx, {name: rat_to_str(v) for name, v in nemuro._asdict().items()})
        return
    emit(ctx, profiles.report_for_preset(preset, a_value).to_dict())


@cli.command()
@click.option("--check", type=click.Choice(["all", "complete", "multiplicities", "subdivision", "ideal"]), default="all")
@click.pass_context
@reports_errors
def fan(ctx, check):
    """The fan of the moduli component and its checks."""
    f = toric.moduli_fan()
    data = f.to_dict()
    if check in ("all", "multiplicities"):
        data["multiplicities"] = toric.multiplicities(f)
    if check in ("all", "complete"):
        data["complete"] = toric.fan_is_complete(f, seed=ctx.obj.random_seed)
    if check in ("all", "subdivision"):
        data["star_subdivision"] = toric.star_subdivision_check()
    if check in ("all", "ideal"):
        data["ideal_orders"] = toric.ideal_weighted_orders()
    emit(ctx, data)


@cli.command()
@click.option("--suite", type=click.Choice(suites.suite_names()), default="all")
@click.option("--symbolic", is_flag=True, help="Expand the full symbolic identities.")
@click.pass_context
@reports_errors
def verify(ctx, suite, symbolic):
    """Run named verification suites; exit 1 if any check fails."""
    config = replace(ctx.obj, symbolic=symbolic)
    results = suites.run_suite(suite, config)
    timings = config.output == "table"
    emit(ctx, [r.to_dict(timings=timings) for r in results])
    if not all(r.passed for r in results):
        ctx.exit(1)


def _grid(lo, hi, step):
    values = []
    x = lo
    while x <= hi:
        values.append(x)
        x += step
    return values


@cli.command("strata-scan")
@click.option("--plane", type=click.Choice(["a+b=0"]), default="a+b=0")
@click.option("--step", default="1/10", help="Grid step, a positive rational.")
@click.option("--range", "bounds", default="-1,1", help="lo,hi for every coordinate.")
@click.pass_context
@reports_errors
def strata_scan(ctx, plane, step, bounds):
    """Stratum labels on a rational grid of the plane, as CSV with header a,c,d,stratum."""
    try:
        step = to_rat(step)
        lo, hi = (to_rat(b) for b in bounds.split(","))
    except ValueError as e:
        raise click.BadParameter(str(e))
    if step <= 0 or lo > hi:
        raise click.BadParameter("Need a positive step and lo <= hi")
    grid = _grid(lo, hi, step)
    click.echo("a,c,d,stratum")
    for a in grid:
        for c in grid:
            for d in grid:
                if a == c == d == 0:
                    continue
                label = classify_p3(plane_point(a, c, d)).value
                click.echo(f"{rat_to_str(a)},{rat_to_str(c)},{rat_to_str(d)},{label}")


@cli.command()
@click.option("--order", type=int, default=None, help="Truncation order; defaults to MODULILAB_SERIES_ORDER.")
@click.pass_context
@reports_errors
def series(ctx, order):
    """Hilbert series 1/((1-t^2)(1-t^3)) of the S_3-invariants of C[L, M]."""
    order = ctx.obj.series_order if order is None else order
    emit(ctx, {"order": order, "coefficients": hilbert_series(order).to_list()})


def parse_and_dispatch(argv) -> int:
    """Run one command line and return its exit code."""
    try:
        result = cli.main(args=list(argv), prog_name="modulilab", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main():
    sys.exit(parse_and_dispatch(sys.argv[1:]))
