"""
Four lines in P^3_z built from a point c of P^3, the divisor of (P^1)^4 they
determine, and the maps rho and sigma relating c to the coefficients (a:b:c:d).
"""
import logging
from fractions import Fraction

import numpy as np

from modulilab.algebra.mpoly import MPoly, poly_ring
from modulilab.invariants.forms import FORM_VARIABLES, form_polynomial, g_form
from modulilab.shared.config import Config
from modulilab.shared.errors import DegenerateInputError
from modulilab.shared.models import CPoint, GCoeffs, LinePair

logger = logging.getLogger(__name__)

Z_VARIABLES = ("z0", "z1", "z2", "z3")
C_VARIABLES = ("c0", "c1", "c2", "c3")

# coordinate permutations and sign changes of P^3_z: image of (z0, z1, z2, z3)
TAU = {
    "tau1": ((1, 1), (0, 1), (3, 1), (2, 1)),
    "tau2": ((0, 1), (1, -1), (2, 1), (3, -1)),
    "tau3": ((2, 1), (3, 1), (0, 1), (1, 1)),
}


def _is_zero(x):
    return x.is_zero() if isinstance(x, MPoly) else x == 0


def _quadratics(c0, c1, c2, c3):
    """A = c0c3 - c1c2, B, C, E = c0c1 - c2c3 and F = c0^2 - c2^2."""
    return (
        c0 * c3 - c1 * c2,
        c0 * c0 - c1 * c1 - c2 * c2 + c3 * c3,
        c0 * c0 + c1 * c1 - c2 * c2 - c3 * c3,
        c0 * c1 - c2 * c3,
        c0 * c0 - c2 * c2,
    )


def _z_ring(c: CPoint):
    extra = []
    for x in c.as_tuple():
        if isinstance(x, MPoly):
            extra.extend(v for v in x.variables if v not in extra)
    names = Z_VARIABLES + tuple(v for v in extra if v not in Z_VARIABLES)
    z = poly_ring(names)[:4]
    coords = [x.extend_vars(names) if isinstance(x, MPoly) else x for x in c.as_tuple()]
    return names, z, coords


def lines_from_c(c: CPoint):
    """The lines L1..L4 = {f_i = g_i = 0}."""
    names, (z0, z1, z2, z3), coords = _z_ring(c)
    A, B, C, E, F = _quadratics(*coords)
    if _is_zero(F):
        raise DegenerateInputError("The line construction needs c0^2 != c2^2")
    return (
        LinePair(-E * z0 + F * z1 - A * z2, -A * z0 - E * z2 + F * z3),
        LinePair(F * z0 - E * z1 - A * z3, -A * z1 + F * z2 - E * z3),
        LinePair(F * z0 + E * z1 + A * z3, A * z1 + F * z2 + E * z3),
        LinePair(-E * z0 - F * z1 - A * z2, -A * z0 - E * z2 - F * z3),
    )


def apply_tau(name, form: MPoly) -> MPoly:
    names = form.variables
    z = [MPoly.variable(v, names) for v in Z_VARIABLES]
    bindings = {v: MPoly.variable(v, names) for v in names}
    for v, (i, sign) in zip(Z_VARIABLES, TAU[name]):
        bindings[v] = z[i] * sign
    return form.substitute(bindings)


def _same_line(pair: LinePair, other: LinePair):
    return {pair.f, pair.g} == {other.f, other.g}


def tau_action_on_lines(c: CPoint):
    """L2 = tau1(L1), L3 = tau2(L2), L4 = tau2(L1), and tau3 preserves L1."""
    L = lines_from_c(c)

    def image(name, pair):
        return LinePair(apply_tau(name, pair.f), apply_tau(name, pair.g))

    return {
        "L2=tau1(L1)": _same_line(image("tau1", L[0]), L[1]),
        "L3=tau2(L2)": _same_line(image("tau2", L[1]), L[2]),
        "L4=tau2(L1)": _same_line(image("tau2", L[0]), L[3]),
        "L1=tau3(L1)": _same_line(image("tau3", L[0]), L[0]),
    }


def discriminants(c: CPoint):
    """(D12, D13, D14, quadric product); Di j = 0 when Li and Lj meet."""
    c0, c1, c2, c3 = c.as_tuple()
    A, B, C, E, F = _quadratics(c0, c1, c2, c3)
    d12 = ((c0 + c1) ** 2 - (c2 + c3) ** 2) * ((c0 - c1) ** 2 - (c2 - c3) ** 2)
    d13 = ((c0 - c2) ** 2 + (c1 - c3) ** 2) * ((c0 + c2) ** 2 + (c1 + c3) ** 2)
    d14 = F * (c1 * c1 - c3 * c3)
    return d12, d13, d14, C * B * E * A


def abcd_from_c(c: CPoint) -> GCoeffs:
    """Normal-form coefficients of the divisor swept by lines meeting L1..L4; always a + b = 0."""
    A, B, C, E, _ = _quadratics(*c.as_tuple())
    a = 4 * A * A - B * B
    return GCoeffs(a, -a, C * C + 4 * E * E, 4 * A * A + B * B)


def rho(z):
    """P^3_z to the quadric Q = {x^2 - y^2 - z^2 + t^2 = 0}."""
    A, B, C, E, _ = _quadratics(*z)
    return (2 * A, B, 2 * E, C)


def sigma(x, y, z, t):
    return (x * x - y * y, -z * z + t * t, z * z + t * t, x * x + y * y)


def intersecting_lines_u(c: CPoint) -> Fraction:
    """
    For c1 = c3 the lines meet in pairs and abcd_from_c(c) = (u : -u : 1 : 1) with
    u = (4c1^2 - (c0+c2)^2) / (4c1^2 + (c0+c2)^2).
    """
    c0, c1, c2, c3 = c.as_tuple()
    if c1 != c3:
        raise DegenerateInputError("The intersecting-lines regime needs c1 = c3")
    num = 4 * c1 * c1 - (c0 + c2) ** 2
    den = 4 * c1 * c1 + (c0 + c2) ** 2
    if den == 0:
        raise DegenerateInputError("c1 = c0 + c2 = 0 gives no divisor")
    return Fraction(num) / den


def _pullback(c: CPoint, lines):
    """Substitute x_i -> f_i, y_i -> g_i into G with coefficients abcd_from_c(c)."""
    form = form_polynomial(g_form(abcd_from_c(c)))
    names = lines[0].f.variables
    bindings = {f"x{i + 1}": pair.f for i, pair in enumerate(lines)}
    bindings.update({f"y{i + 1}": pair.g for i, pair in enumerate(lines)})
    for v in form.variables:
        if v not in FORM_VARIABLES:
            bindings[v] = MPoly.variable(v, names)
    return form.substitute(bindings)


def random_rationals(rng, count, bound=20):
    nums = rng.integers(-bound, bound + 1, size=count)
    dens = rng.integers(1, bound + 1, size=count)
    return [Fraction(int(n), int(d)) for n, d in zip(nums, dens)]


def verify_chi_vanishing(symbolic=True, c: CPoint = None, samples=200, seed=None, line_builder=lines_from_c) -> bool:
    """
    Whether the four lines parametrize a component of the divisor X_{abcd(c)}:
    identically in (z, c) when ``symbolic``, else at random rational samples.
    """
    if symbolic:
        lines = line_builder(CPoint(*poly_ring(C_VARIABLES)))
        pulled = _pullback(CPoint(*poly_ring(C_VARIABLES)), lines)
        logger.info("Symbolic pullback reduced to %d terms", len(pulled))
        return pulled.is_zero()

    rng = np.random.default_rng(Config.RANDOM_SEED if seed is None else seed)
    checked = 0
    while checked < samples:
        point = c
        if point is None:
            values = random_rationals(rng, 4)
            if values[0] ** 2 == values[2] ** 2 or not any(values):
                continue
            point = CPoint(*values)
        try:
            form = form_polynomial(g_form(abcd_from_c(point)))
        except DegenerateInputError:
            continue
        lines = line_builder(point)
        z = dict(zip(Z_VARIABLES, random_rationals(rng, 4)))
        values = {}
        for i, pair in enumerate(lines):
            values[f"x{i + 1}"] = pair.f.evaluate(z)
            values[f"y{i + 1}"] = pair.g.evaluate(z)
        if form.evaluate(values) != 0:
            logger.info("Pullback does not vanish at c = %s, z = %s", point.as_tuple(), z)
            return False
        checked += 1
    return True


def rho_sigma_checks():
    """
    The image of rho lies on Q, sigma sends Q into {a + b = 0}, the ruling
    parametrization of Q satisfies its equation, and sigma o rho = abcd_from_c.
    """
    z = poly_ring(Z_VARIABLES)
    x, y, w, t = rho(z)
    on_quadric = (x * x - y * y - w * w + t * t).is_zero()

    X, Y, W, T = poly_ring("x y z t")
    a, b, _, _ = sigma(X, Y, W, T)
    into_plane = a + b == X * X - Y * Y - W * W + T * T

    s1, t1, s2, t2 = poly_ring("s1 t1 s2 t2")
    p = (s1 * s2 + t1 * t2, s1 * t2 + s2 * t1, s1 * s2 - t1 * t2, s1 * t2 - s2 * t1)
    ruled = (p[0] ** 2 - p[1] ** 2 - p[2] ** 2 + p[3] ** 2).is_zero()

    composite = sigma(*rho(z)) == abcd_from_c(CPoint(*z)).as_tuple()
    return {
        "rho-image-on-Q": on_quadric,
        "sigma(Q)-in-a+b=0": into_plane,
        "Q-parametrization": ruled,
        "sigma-rho=abcd": composite,
    }


def rho_sigma_identities() -> bool:
    return all(rho_sigma_checks().values())


def pullback_size() -> int:
    """Number of terms of the symbolic form G_{abcd(c)} that the pullback check expands."""
    return len(form_polynomial(g_form(abcd_from_c(CPoint(*poly_ring(C_VARIABLES))))))
