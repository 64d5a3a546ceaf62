"""Stratum classifiers for P^3_{a,b,c,d} and for the exceptional plane E = P^2_{a,b,c}."""
from itertools import combinations

from modulilab.shared.errors import DegenerateInputError
from modulilab.shared.models import ECoeffs, GCoeffs, StratumE, StratumP3


def _numeric(x, kind):
    values = x.as_tuple()
    if not x.is_numeric():
        raise ValueError(f"{kind} classification needs rational coordinates")
    if all(v == 0 for v in values):
        raise DegenerateInputError(f"{kind} point must be nonzero")
    return values


def is_reducible(values):
    squares = [v * v for v in values]
    return len(set(squares)) == 1 or sum(1 for v in values if v == 0) >= 3


def is_curve_singular(values):
    squares = [v * v for v in values]
    return any(
        squares[i] == squares[j] == squares[k] != 0 for i, j, k in combinations(range(4), 3)
    )


def is_six_nodal(values):
    for i, j in combinations(range(4), 2):
        k, l = (m for m in range(4) if m not in (i, j))
        if values[i] == 0 and values[j] == 0 and values[k] ** 2 == values[l] ** 2:
            return True
    return False


def in_four_nodal_closure(values):
    """Either two pairs of equal squares or two vanishing coordinates."""
    squares = [v * v for v in values]
    pairings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
    if any(squares[i] == squares[j] and squares[k] == squares[l] for (i, j), (k, l) in pairings):
        return True
    return sum(1 for v in values if v == 0) >= 2


def singular_discriminant(values):
    """(a^2-b^2)(a^2-c^2)(a^2-d^2)(b^2-c^2)(b^2-d^2)(c^2-d^2)."""
    squares = [v * v for v in values]
    product = 1
    for i, j in combinations(range(4), 2):
        product *= squares[i] - squares[j]
    return product


def classify_p3(g: GCoeffs) -> StratumP3:
    values = _numeric(g, "P^3")
    if is_reducible(values):
        return StratumP3.RED
    if is_curve_singular(values):
        return StratumP3.CURV
    if is_six_nodal(values):
        return StratumP3.SIX_A1
    if in_four_nodal_closure(values):
        return StratumP3.FOUR_A1
    if singular_discriminant(values) == 0:
        return StratumP3.TWO_A1
    return StratumP3.SMOOTH


def e_discriminant(values):
    a, b, c = (v * v for v in values)
    return (a - b) * (a - c) * (b - c)


def classify_e(e: ECoeffs) -> StratumE:
    values = _numeric(e, "E")
    squares = [v * v for v in values]
    if squares[0] == squares[1] == squares[2]:
        return StratumE.CURV_PLUS
    if sum(1 for v in values if v == 0) == 2:
        return StratumE.FOUR_A1_PLUS
    if e_discriminant(values) == 0:
        return StratumE.TWO_A1_PLUS
    return StratumE.BASE


def plane_point(a, c, d) -> GCoeffs:
    """The point (a : -a : c : d) of the plane a + b = 0."""
    return GCoeffs(a, -a, c, d)


RED_PLANE_POINTS = ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1), (0, 1, 0), (0, 0, 1))
SIX_A1_PLANE_POINTS = ((1, 0, 0), (0, 1, 1), (0, 1, -1))


def curv_plane_closure(a, c, d):
    return (a + c) * (a - c) * (a + d) * (a - d) == 0


def four_a1_plane_closure(a, c, d):
    return a * (c + d) * (c - d) == 0


def plane_point_lists():
    """Red and SixA1 points of the plane a + b = 0, in coordinates (a : c : d)."""
    return {
        StratumP3.RED.value: RED_PLANE_POINTS,
        StratumP3.SIX_A1.value: SIX_A1_PLANE_POINTS,
    }
