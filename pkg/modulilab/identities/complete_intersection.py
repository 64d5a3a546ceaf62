"""
The P^3 x P^3 complete-intersection model of the divisors X_(a:b:c:d), its
degeneration over the point (0:0:0:1), and the Segre-type embedding of
(P^1)^4 that links the model back to the normal form G_{a,b,c,d}.
"""
import logging
from fractions import Fraction

from modulilab.algebra.mpoly import MPoly, poly_ring
from modulilab.invariants.forms import FORM_VARIABLES, form_polynomial, g_form
from modulilab.shared.models import CIModel, ECoeffs, GCoeffs

logger = logging.getLogger(__name__)

UV_VARIABLES = ("u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4")
QUARTER = Fraction(1, 4)


def _coefficient_names(values):
    names = []
    for x in values:
        if isinstance(x, MPoly):
            names.extend(v for v in x.variables if v not in names)
    return tuple(v for v in names if v not in UV_VARIABLES)


def _lift(x, names):
    return x.extend_vars(names) if isinstance(x, MPoly) else Fraction(x)


def _uv(values):
    names = UV_VARIABLES + _coefficient_names(values)
    gens = poly_ring(names)
    return names, gens[:4], gens[4:8], [_lift(x, names) for x in values]


def _pairing(u, v, a, b, c):
    """(b/4)(u2+u3)(v2+v3) + (c/4)(u2-u3)(v2-v3) + a u4 v4."""
    return (
        QUARTER * b * (u[1] + u[2]) * (v[1] + v[2])
        + QUARTER * c * (u[1] - u[2]) * (v[1] - v[2])
        + a * u[3] * v[3]
    )


def ci_model(g: GCoeffs) -> CIModel:
    names, u, v, (a, b, c, d) = _uv(g.as_tuple())
    return CIModel(
        (
            u[0] ** 2 + u[1] * u[2] - u[3] ** 2,
            v[0] ** 2 + v[1] * v[2] - v[3] ** 2,
            d * u[0] * v[0] - _pairing(u, v, a, b, c),
        )
    )


def family_member(e: ECoeffs, s) -> CIModel:
    """The reparametrized degeneration towards (0:0:0:1) with tangent direction (a:b:c)."""
    names, u, v, (a, b, c, s) = _uv(e.as_tuple() + (s,))
    s2 = s * s
    return CIModel(
        (
            s2 * u[0] ** 2 + u[1] * u[2] - u[3] ** 2,
            s2 * v[0] ** 2 + v[1] * v[2] - v[3] ** 2,
            u[0] * v[0] - _pairing(u, v, a, b, c),
        )
    )


def limit_equations(e: ECoeffs) -> CIModel:
    """The central fibre: two quadric cones and a (1,1)-form."""
    names, u, v, (a, b, c) = _uv(e.as_tuple())
    return CIModel(
        (
            u[1] * u[2] - u[3] ** 2,
            v[1] * v[2] - v[3] ** 2,
            u[0] * v[0]
            - (b / 4) * (u[1] + u[2]) * (v[1] + v[2])
            - (c / 4) * (u[1] - u[2]) * (v[1] - v[2])
            - a * u[3] * v[3],
        )
    )


def limit_check() -> bool:
    """
    The s-family specializes to the central fibre at s = 0, and rescaling
    u1, v1 by s in the line {(s^2 a : s^2 b : s^2 c : 1)} recovers the family.
    """
    generic = ECoeffs(*poly_ring("a b c"))
    if family_member(generic, 0).equations != limit_equations(generic).equations:
        logger.info("The s = 0 member differs from the central fibre")
        return False

    a, b, c, s = poly_ring("a b c s")
    e = ECoeffs(a, b, c)
    line = ci_model(GCoeffs(s * s * a, s * s * b, s * s * c, s.one()))
    names = line.quadric_u.variables
    scale = {name: MPoly.variable(name, names) for name in names}
    s_here = MPoly.variable("s", names)
    scale["u1"] = s_here * scale["u1"]
    scale["v1"] = s_here * scale["v1"]
    rescaled = [eq.substitute(scale) for eq in line.equations]
    family = family_member(e, s).equations
    return (
        rescaled[0] == family[0]
        and rescaled[1] == family[1]
        and rescaled[2] == s_here * s_here * family[2]
    )


def segre_substitution(extra=()):
    """u = (x1x2 - y1y2, 2x1y2, 2x2y1, x1x2 + y1y2) and v likewise on factors 3, 4."""
    names = FORM_VARIABLES + tuple(extra)
    x1, x2, x3, x4, y1, y2, y3, y4 = poly_ring(names)[:8]
    return names, {
        "u1": x1 * x2 - y1 * y2,
        "u2": 2 * x1 * y2,
        "u3": 2 * x2 * y1,
        "u4": x1 * x2 + y1 * y2,
        "v1": x3 * x4 - y3 * y4,
        "v2": 2 * x3 * y4,
        "v3": 2 * x4 * y3,
        "v4": x3 * x4 + y3 * y4,
    }


def cone_substitution():
    """(w, s^2, t^2, st) on each P(1,1,2) factor."""
    names = ("w1", "s1", "t1", "w2", "s2", "t2")
    w1, s1, t1, w2, s2, t2 = poly_ring(names)
    return names, {
        "u1": w1, "u2": s1 * s1, "u3": t1 * t1, "u4": s1 * t1,
        "v1": w2, "v2": s2 * s2, "v3": t2 * t2, "v4": s2 * t2,
    }


def segre_identities(bindings=None) -> bool:
    bindings = bindings or segre_substitution()[1]
    u = poly_ring(UV_VARIABLES)
    quadric = u[0] ** 2 + u[1] * u[2] - u[3] ** 2
    if not quadric.substitute(bindings).is_zero():
        return False
    _, cone = cone_substitution()
    return (u[1] * u[2] - u[3] ** 2).substitute(cone).is_zero()


def ci_model_segre_check() -> bool:
    """The (1,1)-form pulled back along the Segre-type map is -2 G_{a,b,c,-d}."""
    a, b, c, d = poly_ring("a b c d")
    model = ci_model(GCoeffs(a, b, c, d))
    names, bindings = segre_substitution(("a", "b", "c", "d"))
    for name in ("a", "b", "c", "d"):
        bindings[name] = MPoly.variable(name, names)
    pulled = model.bilinear.substitute(bindings)
    expected = form_polynomial(g_form(GCoeffs(a, b, c, -d))) * -2
    logger.debug("Segre pullback has %d terms", len(pulled))
    return pulled == expected


def e_point_to_uv(point):
    """((s1:t1:w1), (s2:t2:w2)) in P(1,1,2)^2 to (u, v) in P^3 x P^3."""
    (s1, t1, w1), (s2, t2, w2) = point
    return (w1, s1 * s1, t1 * t1, s1 * t1), (w2, s2 * s2, t2 * t2, s2 * t2)
