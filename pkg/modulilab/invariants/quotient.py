"""
Maps from the parameter space P^3_{a,b,c,d} to the GIT quotient P(1,3,4,6).

Two routes are provided: evaluating (H:R:S:T) on the normal form, and the
explicit chain of squaring, elementary symmetric functions and a fixed
polynomial map P(1,2,3,4) -> P(1,3,4,6).
"""
import logging
from fractions import Fraction
from math import lcm

from modulilab.algebra.mpoly import MPoly, poly_ring
from modulilab.algebra.series import RationalTerm, SeriesTrunc, series_expand
from modulilab.invariants.forms import g_form
from modulilab.invariants.invariants import invariants
from modulilab.shared.errors import DegenerateInputError, InternalInconsistencyError, WeightMismatchError
from modulilab.shared.models import GCoeffs, SValues, WeightedPoint

logger = logging.getLogger(__name__)

QUOTIENT_WEIGHTS = (1, 3, 4, 6)
S_WEIGHTS = (1, 2, 3, 4)


def _is_zero(x):
    return x.is_zero() if isinstance(x, MPoly) else x == 0


def quotient_point(g: GCoeffs) -> WeightedPoint:
    inv = invariants(g_form(g))
    coords = inv.hrst()
    if all(_is_zero(c) for c in coords):
        raise InternalInconsistencyError(f"All of H, R, S, T vanish at {g}")
    return WeightedPoint(QUOTIENT_WEIGHTS, coords)


def phi1(g: GCoeffs):
    return tuple(x * x for x in g.as_tuple())


def phi2(squares) -> SValues:
    p1, p2, p3, p4 = squares
    s1 = p1 + p2 + p3 + p4
    s2 = p1 * p2 + p1 * p3 + p1 * p4 + p2 * p3 + p2 * p4 + p3 * p4
    s3 = p1 * p2 * p3 + p1 * p2 * p4 + p1 * p3 * p4 + p2 * p3 * p4
    s4 = p1 * p2 * p3 * p4
    return SValues(s1, s2, s3, s4)


def phi3(s: SValues) -> WeightedPoint:
    s1, s2, s3, s4 = s.as_tuple()
    q = Fraction
    coords = (
        s1 * q(1, 2),
        (s1 * s1 * s1 - 4 * s1 * s2 + 24 * s3) * q(1, 32),
        (12 * s4 + s2 * s2 - 3 * s1 * s3) * q(1, 12),
        (27 * s1 * s1 * s4 - 72 * s2 * s4 + 2 * s2 * s2 * s2 - 9 * s1 * s2 * s3 + 27 * s3 * s3) * q(1, 432),
    )
    return WeightedPoint(QUOTIENT_WEIGHTS, coords)


def phi_chain(g: GCoeffs) -> WeightedPoint:
    return phi3(phi2(phi1(g)))


def weighted_monomials(weights, degree):
    """Exponent vectors e with sum(w_i * e_i) == degree."""
    out = []

    def extend(prefix, i, remaining):
        if i == len(weights) - 1:
            if remaining % weights[i] == 0:
                out.append(prefix + (remaining // weights[i],))
            return
        for k in range(remaining // weights[i] + 1):
            extend(prefix + (k,), i + 1, remaining - k * weights[i])

    extend((), 0, degree)
    return out


def veronese_vector(point: WeightedPoint):
    """All monomials of weighted degree lcm(weights) evaluated at ``point``."""
    degree = lcm(*point.weights)
    values = []
    for e in weighted_monomials(point.weights, degree):
        v = 1
        for c, k in zip(point.coords, e):
            if k:
                v = c**k * v
        values.append(v)
    return values


def wp_equal(p: WeightedPoint, q: WeightedPoint) -> bool:
    """
    Equality in weighted projective space over the algebraic closure: the
    Veronese vectors of degree lcm(weights) must be proportional.
    """
    if p.weights != q.weights:
        raise WeightMismatchError(f"Weights differ: {p.weights} vs {q.weights}")
    if all(x == y for x, y in zip(p.coords, q.coords)):
        return True
    u, v = veronese_vector(p), veronese_vector(q)
    pivot = next(i for i, x in enumerate(u) if not _is_zero(x))
    if _is_zero(v[pivot]):
        return False
    return all(_is_zero(u[pivot] * v[j] - v[pivot] * u[j]) for j in range(len(u)) if j != pivot)


def singular_image_divisibility():
    """
    Quotient of S^3 - 27 T^2 on the symbolic normal form by the product of the
    differences of the squares a^2, b^2, c^2, d^2, or None if it does not divide.
    """
    a, b, c, d = poly_ring("a b c d")
    inv = invariants(g_form(GCoeffs(a, b, c, d)))
    target = inv.S**3 - 27 * inv.T**2
    squares = [x * x for x in (a, b, c, d)]
    product = a.one()
    for i in range(4):
        for j in range(i + 1, 4):
            product = product * (squares[i] - squares[j])
    result = target.divide_exact(product)
    if result is None:
        logger.warning("S^3 - 27T^2 is not divisible by the square differences")
    return result


def normalize(point: WeightedPoint) -> WeightedPoint:
    """Scale a rational point so that its first weight-one coordinate is 1, if it has one."""
    for c, w in zip(point.coords, point.weights):
        if w == 1 and not isinstance(c, MPoly) and c != 0:
            return point.rescale(1 / Fraction(c))
    return point


def regular_parameters(point: WeightedPoint):
    """
    Weight-zero local parameters (r, s, t) = ((4R - H^3)/H^3, S/H^4, T/H^6)
    near (2:2:0:0); all three vanish there.
    """
    if point.weights != QUOTIENT_WEIGHTS:
        raise WeightMismatchError(f"Expected weights {QUOTIENT_WEIGHTS}, got {point.weights}")
    H, R, S, T = (Fraction(c) for c in point.coords)
    if H == 0:
        raise DegenerateInputError("Regular parameters need H != 0")
    return ((4 * R - H**3) / H**3, S / H**4, T / H**6)


def molien_sides(order):
    """Both sides of the Molien identity for the S_3-action on C[L, M]."""
    (t,) = poly_ring("t")
    one = t.one()
    lhs = series_expand(
        [
            RationalTerm(Fraction(1, 6), one, (1 - t) ** 2),
            RationalTerm(Fraction(3, 6), one, 1 - t**2),
            RationalTerm(Fraction(2, 6), one, 1 + t + t**2),
        ],
        order,
    )
    rhs = series_expand([RationalTerm(Fraction(1), one, (1 - t**2) * (1 - t**3))], order)
    return lhs, rhs


def molien_check(order: int) -> bool:
    lhs, rhs = molien_sides(order)
    logger.debug("Molien series to order %d: %s", order, rhs.to_list())
    return lhs == rhs


def hilbert_series(order) -> SeriesTrunc:
    return molien_sides(order)[1]
