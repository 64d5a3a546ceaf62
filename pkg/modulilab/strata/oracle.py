"""
Brute-force singular point counts over F_p.

Both oracles reduce the defining equations mod p, enumerate every F_p-point
of the ambient space once and apply the Jacobian criterion. Work is split
into slices that can run in a process pool; counts merge by summation.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from modulilab.algebra.linalg import rank
from modulilab.algebra.rings import FpElem
from modulilab.identities.complete_intersection import UV_VARIABLES, limit_equations
from modulilab.invariants.forms import FORM_VARIABLES, form_polynomial, g_form
from modulilab.shared.config import Config, is_odd_prime
from modulilab.shared.errors import PrimeError
from modulilab.shared.models import ECoeffs, GCoeffs, SingReport

logger = logging.getLogger(__name__)


def _check_prime(p):
    if not is_odd_prime(p):
        raise PrimeError(f"{p} is not an odd prime")


def compile_mod_p(poly, p):
    """Integer (coefficient, exponent) pairs of ``poly`` reduced mod p."""
    return tuple((c.residue, e) for e, c in poly.reduce_mod(p).terms.items())


def evaluate_mod_p(compiled, values, p):
    total = 0
    for c, e in compiled:
        term = c
        for x, k in zip(values, e):
            if k:
                term *= x if k == 1 else pow(x, k, p)
        total += term
    return total % p


def projective_line(p):
    """P^1(F_p) as pairs (x, y) with x = 1, or (0, 1)."""
    return [(1, t) for t in range(p)] + [(0, 1)]


def projective_space(n, p):
    """P^n(F_p) as tuples whose first nonzero coordinate is 1."""
    points = []
    for lead in range(n + 1):
        for tail in product(range(p), repeat=n - lead):
            points.append((0,) * lead + (1,) + tail)
    return points


def _run_slices(worker, slices, workers):
    if workers > 1 and len(slices) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(worker, slices))
    return [worker(s) for s in slices]


def _merge(prime, results):
    count = 0
    charts = Counter()
    points = []
    for n, chart_counts, found in results:
        count += n
        charts.update(chart_counts)
        points.extend(found)
    return SingReport(prime, count, dict(charts), tuple(sorted(points)))


def _slice_1111(task):
    form, partials, p, firsts = task
    line = projective_line(p)
    count = 0
    charts = Counter()
    found = []
    for first in firsts:
        for rest in product(line, repeat=3):
            point = (first,) + rest
            values = [f[0] for f in point] + [f[1] for f in point]
            if evaluate_mod_p(form, values, p):
                continue
            # in the chart x_i = 1 the local coordinate is y_i, and conversely
            local = [partials[4 + i] if f[0] == 1 else partials[i] for i, f in enumerate(point)]
            if any(evaluate_mod_p(d, values, p) for d in local):
                continue
            count += 1
            charts["".join("x" if f[0] == 1 else "y" for f in point)] += 1
            found.append(point)
    return count, charts, found


def oracle_count_1111(g: GCoeffs, p: int, workers=None) -> SingReport:
    """Singular F_p-points of the divisor X_g in (P^1)^4."""
    _check_prime(p)
    workers = workers or Config.WORKERS
    poly = form_polynomial(g_form(g))
    form = compile_mod_p(poly, p)
    partials = tuple(compile_mod_p(poly.partial(v), p) for v in FORM_VARIABLES)
    line = projective_line(p)
    slices = [(form, partials, p, line[i::workers]) for i in range(min(workers, len(line)))]
    report = _merge(p, _run_slices(_slice_1111, slices, workers))
    logger.info("X_%s over F_%d: %d singular points", g.as_tuple(), p, report.count)
    return report


def _chart(point):
    return next(i for i, x in enumerate(point) if x) + 1


def _slice_22(task):
    equations, jacobian, p, cone_u, cone_v = task
    count = 0
    charts = Counter()
    found = []
    for u in cone_u:
        for v in cone_v:
            values = list(u) + list(v)
            if evaluate_mod_p(equations[2], values, p):
                continue
            matrix = [[FpElem(evaluate_mod_p(d, values, p), p) for d in row] for row in jacobian]
            if rank(matrix) < 3:
                count += 1
                charts[f"u{_chart(u)}v{_chart(v)}"] += 1
                found.append((u, v))
    return count, charts, found


def oracle_count_22(e: ECoeffs, p: int, workers=None) -> SingReport:
    """Singular F_p-points of the central fibre over ``e``, counted in P^3 x P^3."""
    _check_prime(p)
    workers = workers or Config.WORKERS
    model = limit_equations(e).equations
    equations = tuple(compile_mod_p(eq, p) for eq in model)
    jacobian = tuple(tuple(compile_mod_p(eq.partial(v), p) for v in UV_VARIABLES) for eq in model)
    space = projective_space(3, p)
    cone = [q for q in space if (q[1] * q[2] - q[3] * q[3]) % p == 0]
    slices = [(equations, jacobian, p, cone[i::workers], cone) for i in range(min(workers, len(cone)))]
    report = _merge(p, _run_slices(_slice_22, slices, workers))
    logger.info("Central fibre over %s mod %d: %d singular points", e.as_tuple(), p, report.count)
    return report
