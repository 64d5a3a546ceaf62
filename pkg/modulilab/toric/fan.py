"""The complete fan of the moduli component and the weighted projective space it blows up."""
import logging
from collections import Counter
from itertools import combinations
from math import gcd

import numpy as np

from modulilab.shared.config import Config
from modulilab.shared.errors import DegenerateInputError
from modulilab.shared.models import Fan, IdealGenerators

logger = logging.getLogger(__name__)

MODULI_RAYS = ((1, 2, 3), (1, 0, 0), (0, 1, 0), (0, 0, 1), (-3, -4, -6))
MODULI_CONES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (4, 1, 2), (4, 1, 3), (4, 2, 3))
BLOWUP_WEIGHTS = (1, 2, 3)

# r^6, r^4 s, r^3 t, r^2 s^2, r s t, s^3, t^2
IDEAL_EXPONENTS = ((6, 0, 0), (4, 1, 0), (3, 0, 1), (2, 2, 0), (1, 1, 1), (0, 3, 0), (0, 0, 2))


def _check_primitive(rays):
    for r in rays:
        if gcd(*r) != 1:
            raise DegenerateInputError(f"Ray {r} is not primitive")


def moduli_fan() -> Fan:
    return Fan(MODULI_RAYS, MODULI_CONES)


def weighted_projective_fan(weights=(1, 3, 4, 6)) -> Fan:
    """
    Fan of P(1, w1, w2, w3): rays e1, e2, e3 and -(w1, w2, w3), cones omitting one ray each.
    The last ray carries the weight 1.
    """
    if len(weights) != 4 or weights[0] != 1:
        raise ValueError(f"Expected weights (1, w1, w2, w3), got {weights}")
    rays = ((1, 0, 0), (0, 1, 0), (0, 0, 1), tuple(-w for w in weights[1:]))
    _check_primitive(rays)
    return Fan(rays, tuple(combinations(range(4), 3)))


def _matrix(fan, cone):
    return np.array([fan.rays[i] for i in cone], dtype=np.int64)


def _det(rows):
    a, b, c = rows
    return int(np.dot(a, np.cross(b, c)))


def cone_multiplicity(fan: Fan, cone) -> int:
    """Lattice index of the cone's rays: |det| of the 3x3 ray matrix."""
    if tuple(cone) not in fan.maximal_cones:
        raise ValueError(f"{tuple(cone)} is not a maximal cone of the fan")
    value = abs(_det(_matrix(fan, cone)))
    if value == 0:
        raise DegenerateInputError(f"Cone {tuple(cone)} is not full-dimensional")
    return value


def multiplicities(fan: Fan):
    return [cone_multiplicity(fan, c) for c in fan.maximal_cones]


def _contains(rows, d, x):
    # Cramer: x = sum l_i rows[i] with every l_i >= 0
    for i in range(3):
        replaced = list(rows)
        replaced[i] = x
        if _det(replaced) * d < 0:
            return False
    return True


def fan_is_complete(fan: Fan, seed=None, samples=1000) -> bool:
    """Wall pairing of the maximal cones plus a seeded random coverage test."""
    walls = Counter()
    dets = []
    for cone in fan.maximal_cones:
        rows = _matrix(fan, cone)
        d = _det(rows)
        if d == 0:
            raise DegenerateInputError(f"Cone {tuple(cone)} is not full-dimensional")
        dets.append((rows, d))
        walls.update(frozenset(w) for w in combinations(cone, 2))
    exposed = [tuple(sorted(w)) for w, n in walls.items() if n != 2]
    if exposed:
        logger.info("Walls not shared by exactly two cones: %s", exposed)
        return False

    rng = np.random.default_rng(Config.RANDOM_SEED if seed is None else seed)
    vectors = rng.integers(-100, 101, size=(samples, 3))
    for x in vectors:
        if not x.any():
            continue
        if not any(_contains(rows, d, x) for rows, d in dets):
            logger.info("Vector %s lies in no cone", x.tolist())
            return False
    return True


def star_subdivide(fan: Fan, cone, ray) -> Fan:
    """Insert ``ray`` into ``cone`` and replace the cone by the cones over its facets."""
    cone = tuple(cone)
    if cone not in fan.maximal_cones:
        raise ValueError(f"{cone} is not a maximal cone of the fan")
    ray = tuple(int(x) for x in ray)
    _check_primitive([ray])
    new = len(fan.rays)
    pieces = tuple((new,) + tuple(i for i in cone if i != j) for j in cone)
    cones = tuple(c for c in fan.maximal_cones if c != cone) + pieces
    return Fan(fan.rays + (ray,), cones)


def _cone_set(fan: Fan):
    return {frozenset(tuple(fan.rays[i]) for i in c) for c in fan.maximal_cones}


def same_fan(f: Fan, g: Fan) -> bool:
    return set(map(tuple, f.rays)) == set(map(tuple, g.rays)) and _cone_set(f) == _cone_set(g)


def star_subdivision_check(weights=BLOWUP_WEIGHTS, cone=(0, 1, 2)) -> bool:
    """Whether the weighted blow-up of P(1,3,4,6) at a torus-fixed point gives the moduli fan."""
    base = weighted_projective_fan()
    rays = np.array([base.rays[i] for i in cone], dtype=np.int64)
    ray = np.asarray(weights, dtype=np.int64) @ rays
    ray = tuple(int(x) for x in ray // gcd(*(int(x) for x in ray)))
    return same_fan(star_subdivide(base, cone, ray), moduli_fan())


def ideal_generators() -> IdealGenerators:
    return IdealGenerators(IDEAL_EXPONENTS)


def ideal_weighted_orders(weights=BLOWUP_WEIGHTS, ideal=None):
    """Weighted degree of each generator with wt(r), wt(s), wt(t) = ``weights``."""
    ideal = ideal or ideal_generators()
    return [sum(w * k for w, k in zip(weights, m)) for m in ideal.monomials]
