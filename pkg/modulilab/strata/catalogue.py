"""
Explicit singular points of the normal forms X_(a:-a:c:d) on (P^1)^4 and of
the central fibres over E = P^2_(a:b:c), together with exact Jacobian tests
over Q that confirm them.

A point of (P^1)^4 is four pairs (x_i, y_i). A point of P(1,1,2)^2 is two
triples (s, t, w); entries "i" and "-i" stand for square roots of -1.
"""
from fractions import Fraction
from functools import lru_cache

from modulilab.algebra.linalg import rank
from modulilab.identities.complete_intersection import UV_VARIABLES, e_point_to_uv, limit_equations
from modulilab.invariants.forms import FORM_VARIABLES, form_polynomial, g_form
from modulilab.shared.errors import NoCatalogueError
from modulilab.shared.models import ECoeffs, GCoeffs, SingularCatalogue, StratumE, StratumP3
from modulilab.strata.classify import classify_e, classify_p3

ONE, ZERO = Fraction(1), Fraction(0)


def _signs(*eps):
    return tuple((ONE, Fraction(e)) for e in eps)


# (0:0:1:1)
SIX_A1_POINTS = (
    _signs(-1, -1, 1, 1),
    _signs(1, 1, 1, 1),
    _signs(1, -1, -1, 1),
    _signs(-1, 1, 1, -1),
    _signs(-1, -1, -1, -1),
    _signs(1, 1, -1, -1),
)

# (0:0:1:d), d not in {0, 1, -1}
FOUR_A1_POINTS = (
    _signs(-1, -1, 1, 1),
    _signs(1, 1, 1, 1),
    _signs(-1, -1, -1, -1),
    _signs(1, 1, -1, -1),
)

# (a:-a:c:d) off every special line
TWO_A1_POINTS = (_signs(1, 1, 1, 1), _signs(-1, -1, -1, -1))

CURV_DESCRIPTION = "((u:v),(v:u),(u:v),(v:u))"


def _curve_point(u, v):
    u, v = Fraction(u), Fraction(v)
    return ((u, v), (v, u), (u, v), (v, u))


CURV_SAMPLES = tuple(_curve_point(u, v) for u, v in ((1, 0), (0, 1), (1, 1), (1, 2)))


def _e(*coords):
    return tuple(c if isinstance(c, str) else Fraction(c) for c in coords)


E_FOUR_A1 = {
    (1, 0, 0): tuple((p, q) for p in (_e(1, 0, 0), _e(0, 1, 0)) for q in (_e(1, 0, 0), _e(0, 1, 0))),
    (0, 1, 0): tuple((p, q) for p in (_e("i", 1, 0), _e("-i", 1, 0)) for q in (_e("i", 1, 0), _e("-i", 1, 0))),
    (0, 0, 1): tuple((p, q) for p in (_e(1, 1, 0), _e(1, -1, 0)) for q in (_e(1, 1, 0), _e(1, -1, 0))),
}

E_TWO_A1 = (
    (lambda a, b, c: b + c == 0, ((_e(1, 0, 0), _e(1, 0, 0)), (_e(0, 1, 0), _e(0, 1, 0)))),
    (lambda a, b, c: b - c == 0, ((_e(1, 0, 0), _e(0, 1, 0)), (_e(0, 1, 0), _e(1, 0, 0)))),
    (lambda a, b, c: a - b == 0, ((_e(1, 1, 0), _e(1, -1, 0)), (_e(1, -1, 0), _e(1, 1, 0)))),
    (lambda a, b, c: a - c == 0, ((_e(1, "i", 0), _e(1, "i", 0)), (_e(1, "-i", 0), _e(1, "-i", 0)))),
    (lambda a, b, c: a + c == 0, ((_e(1, "i", 0), _e(1, "-i", 0)), (_e(1, "-i", 0), _e(1, "i", 0)))),
    (lambda a, b, c: a + b == 0, ((_e(1, 1, 0), _e(1, 1, 0)), (_e(1, -1, 0), _e(1, -1, 0)))),
)

E_BASE_CURVES = ("C1: s1 = t1 = w2 = 0", "C2: s2 = t2 = w1 = 0")
E_BASE_SAMPLES = (
    (_e(0, 0, 1), _e(1, 0, 0)),
    (_e(0, 0, 1), _e(1, 1, 0)),
    (_e(1, 0, 0), _e(0, 0, 1)),
    (_e(1, 1, 0), _e(0, 0, 1)),
)

# (1:b:c) with b, c = +-1: the extra curve inside {w1 = w2 = 0}, and a parametrization (s1:t1), (s2:t2) in k
E_CURV = {
    (1, 1): ("s1*s2 + t1*t2 = 0", lambda k: (_e(1, k, 0), _e(k, -1, 0))),
    (1, -1): ("s1*t2 + t1*s2 = 0", lambda k: (_e(1, k, 0), _e(1, -k, 0))),
    (-1, -1): ("s1*s2 - t1*t2 = 0", lambda k: (_e(1, k, 0), _e(k, 1, 0))),
    (-1, 1): ("s1*t2 - t1*s2 = 0", lambda k: (_e(1, k, 0), _e(1, k, 0))),
}


def _p3_catalogue(g: GCoeffs) -> SingularCatalogue:
    a, b, c, d = g.as_tuple()
    if a + b != 0:
        raise NoCatalogueError(f"Singular points are catalogued on the plane a + b = 0 only, not at {g.as_tuple()}")
    stratum = classify_p3(g)
    a, b, c, d = g.normalized().as_tuple()
    if stratum is StratumP3.TWO_A1:
        return SingularCatalogue(stratum.value, TWO_A1_POINTS)
    if stratum is StratumP3.SIX_A1 and (a, b, c, d) == (0, 0, 1, 1):
        return SingularCatalogue(stratum.value, SIX_A1_POINTS)
    if stratum is StratumP3.FOUR_A1 and a == 0:
        return SingularCatalogue(stratum.value, FOUR_A1_POINTS)
    if stratum is StratumP3.CURV and (a, b, c) == (1, -1, 1):
        return SingularCatalogue(stratum.value, curves=(CURV_DESCRIPTION,), samples=CURV_SAMPLES)
    raise NoCatalogueError(f"No catalogued singular points for {stratum.value} at {g.as_tuple()}")


def _e_catalogue(e: ECoeffs) -> SingularCatalogue:
    stratum = classify_e(e)
    a, b, c = e.normalized().as_tuple()
    if stratum is StratumE.FOUR_A1_PLUS:
        key = tuple(int(x) for x in (a, b, c))
        return SingularCatalogue(stratum.value, E_FOUR_A1[key], E_BASE_CURVES, E_BASE_SAMPLES)
    if stratum is StratumE.CURV_PLUS:
        equation, param = E_CURV[(int(b), int(c))]
        samples = E_BASE_SAMPLES + tuple(param(k) for k in (0, 1, 2))
        return SingularCatalogue(stratum.value, (), E_BASE_CURVES + ("w1 = w2 = 0, " + equation,), samples)
    if stratum is StratumE.TWO_A1_PLUS:
        points = tuple(p for condition, pts in E_TWO_A1 if condition(a, b, c) for p in pts)
        return SingularCatalogue(stratum.value, points, E_BASE_CURVES, E_BASE_SAMPLES)
    return SingularCatalogue(stratum.value, (), E_BASE_CURVES, E_BASE_SAMPLES)


def expected_singular_points(x) -> SingularCatalogue:
    if isinstance(x, GCoeffs):
        return _p3_catalogue(x)
    if isinstance(x, ECoeffs):
        return _e_catalogue(x)
    raise TypeError(f"Expected GCoeffs or ECoeffs, got {type(x).__name__}")


def is_rational_point(point):
    return not any(isinstance(x, str) for factor in point for x in factor)


@lru_cache(maxsize=64)
def _form_and_partials(g: GCoeffs):
    poly = form_polynomial(g_form(g))
    return poly, tuple(poly.partial(v) for v in FORM_VARIABLES)


def jacobian_singular_q(g: GCoeffs, point) -> bool:
    """Whether ``point`` of (P^1)^4 is a singular point of X_g, tested exactly over Q."""
    poly, partials = _form_and_partials(g)
    values = dict(zip(FORM_VARIABLES, [Fraction(f[0]) for f in point] + [Fraction(f[1]) for f in point]))
    if poly.evaluate(values) != 0:
        return False
    return all(p.evaluate(values) == 0 for p in partials)


@lru_cache(maxsize=64)
def _limit_jacobian(e: ECoeffs):
    equations = limit_equations(e).equations
    return equations, tuple(tuple(eq.partial(v) for v in UV_VARIABLES) for eq in equations)


def jacobian_singular_e(e: ECoeffs, point) -> bool:
    """Whether a rational point of P(1,1,2)^2 is singular on the central fibre over ``e``."""
    if not is_rational_point(point):
        raise ValueError(f"{point} is not a rational point")
    u, v = e_point_to_uv(point)
    values = dict(zip(UV_VARIABLES, u + v))
    equations, jacobian = _limit_jacobian(e)
    if any(eq.evaluate(values) != 0 for eq in equations):
        return False
    return rank([[p.evaluate(values) for p in row] for row in jacobian]) < 3
