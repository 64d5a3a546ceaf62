"""
The finite groups acting on P^3_{a,b,c,d} = P(G).

A normal form is (a/2)u1 + (d/2)u2 + (b/2)u3 + (c/2)u4, so its coefficient
vector in the u-basis is (a, d, b, c)/2. A substitution u -> A.u sends that
vector to A^T times it; group elements store this coefficient action A^T,
indexed by the slots (a, d, b, c).
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction

from modulilab.algebra.linalg import det, mat_mul
from modulilab.algebra.mpoly import MPoly
from modulilab.algebra.rings import rat_to_str
from modulilab.shared.config import Config
from modulilab.shared.errors import DegenerateInputError, GroupClosureError
from modulilab.shared.models import GCoeffs, projective_normalize

logger = logging.getLogger(__name__)

# (a, b, c, d) <-> slot order (a, d, b, c)
SLOTS = (0, 3, 1, 2)
REFLECTION_ENTRIES = {Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2)}


def to_slots(values):
    return tuple(values[i] for i in SLOTS)


def from_slots(slots):
    a, d, b, c = slots
    return (a, b, c, d)


@dataclass(frozen=True)
class GroupElement:
    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(Fraction(x) for x in row) for row in self.matrix))

    @classmethod
    def from_substitution(cls, a):
        """Coefficient action of the substitution u -> a.u."""
        return cls(tuple(zip(*a)))

    @classmethod
    def identity(cls, n=4):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __mul__(self, other):
        return GroupElement(mat_mul(self.matrix, other.matrix))

    def __neg__(self):
        return GroupElement(tuple(tuple(-x for x in row) for row in self.matrix))

    def det(self):
        return det([list(row) for row in self.matrix])

    def is_identity(self):
        return self == GroupElement.identity(len(self.matrix))

    def apply(self, vector):
        return tuple(sum((x * v for x, v in zip(row, vector) if x), start=0 * vector[0]) for row in self.matrix)

    def projective_key(self):
        """The representative of {M, -M} whose first nonzero entry is positive."""
        first = next(x for row in self.matrix for x in row if x)
        return self if first > 0 else -self

    def to_list(self):
        return [[rat_to_str(x) for x in row] for row in self.matrix]


@dataclass(frozen=True)
class MatrixGroup:
    elements: frozenset
    generators: tuple = ()
    projective: bool = False

    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda g: g.matrix))

    def __contains__(self, g):
        if self.projective:
            g = g.projective_key()
        return g in self.elements

    def to_json(self):
        return json.dumps({"order": self.order(), "elements": [g.to_list() for g in self]}, sort_keys=True)


_SIGN_12 = ((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
_SWAP_12 = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
_CYCLE = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0))
_NEGATE_4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1))
_HADAMARD = tuple(
    tuple(Fraction(x, 2) for x in row)
    for row in ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))
)


def gamma0_generators():
    """Generators of the W(D4) subgroup: a sign change, a swap and a 4-cycle of the u_i."""
    return [GroupElement.from_substitution(a) for a in (_SIGN_12, _SWAP_12, _CYCLE)]


def negate_u4():
    return GroupElement.from_substitution(_NEGATE_4)


def hadamard():
    return GroupElement.from_substitution(_HADAMARD)


def gamma_generators():
    """Generators of W(F4): the W(D4) generators, the u4 sign change and the Hadamard-type map."""
    return gamma0_generators() + [negate_u4(), hadamard()]


def generate(gens, limit=None):
    """Close a set of invertible matrices under multiplication."""
    limit = limit or Config.GROUP_LIMIT
    gens = list(gens)
    for g in gens:
        if g.det() == 0:
            raise GroupClosureError(f"Generator {g.to_list()} is not invertible")
    if not gens:
        return MatrixGroup(frozenset([GroupElement.identity()]), ())
    elements = set(gens) | {GroupElement.identity(len(gens[0].matrix))}
    boundary = list(elements)
    while boundary:
        frontier = []
        for a in gens:
            for b in boundary:
                c = a * b
                if c not in elements:
                    elements.add(c)
                    frontier.append(c)
                    if len(elements) > limit:
                        raise GroupClosureError(f"Group closure exceeded {limit} elements")
        boundary = frontier
        logger.debug("group closure: %d elements", len(elements))
    logger.info("Generated a group of order %d from %d generators", len(elements), len(gens))
    return MatrixGroup(frozenset(elements), tuple(gens))


def project_mod_center(group: MatrixGroup) -> MatrixGroup:
    """One representative per {M, -M}; requires -I in the group."""
    minus_identity = -GroupElement.identity(len(next(iter(group.elements)).matrix))
    if minus_identity not in group.elements:
        raise GroupClosureError("-I is not in the group, so there is no projective quotient by it")
    classes = frozenset(g.projective_key() for g in group.elements)
    return MatrixGroup(classes, tuple(g.projective_key() for g in group.generators), projective=True)


def act(g: GroupElement, x: GCoeffs, normalize=True) -> GCoeffs:
    """Image of (a:b:c:d) under ``g``; numeric results are scaled so the first nonzero entry is 1."""
    values = x.as_tuple()
    if all((v.is_zero() if isinstance(v, MPoly) else v == 0) for v in values):
        raise DegenerateInputError("The zero vector is not a point of P^3")
    image = from_slots(g.apply(to_slots(values)))
    if normalize and not any(isinstance(v, MPoly) for v in image):
        image = projective_normalize(image)
    return GCoeffs(*image)


def orbit(group: MatrixGroup, x: GCoeffs):
    return {act(g, x) for g in group.elements}


def stabilizer(group: MatrixGroup, x: GCoeffs) -> MatrixGroup:
    point = x.normalized()
    fixing = frozenset(g for g in group.elements if act(g, x) == point)
    return MatrixGroup(fixing, tuple(sorted(fixing, key=lambda g: g.matrix)), projective=group.projective)


def is_reflection_group_entries(group: MatrixGroup) -> bool:
    return all(
        all(x in REFLECTION_ENTRIES for row in g.matrix for x in row) and g.det() in (1, -1)
        for g in group.elements
    )


def weyl_f4():
    return generate(gamma_generators())


def projective_weyl_f4():
    return project_mod_center(weyl_f4())


REDUCIBLE_POINT = GCoeffs(0, 0, 0, 1)


def stabilizer_image_on_e(group=None):
    """
    Action of the stabilizer of (0:0:0:1) on the projectivized tangent plane
    E = P^2_{a,b,c} there. Returns (stabilizer order, kernel order, image),
    the image being a set of 3x3 matrices normalized projectively.
    """
    group = group or projective_weyl_f4()
    theta = stabilizer(group, REDUCIBLE_POINT)
    d_slot = 1
    others = [i for i in range(4) if i != d_slot]
    image = set()
    kernel = 0
    for g in theta.elements:
        lam = g.matrix[d_slot][d_slot]
        block = tuple(tuple(g.matrix[i][j] / lam for j in others) for i in others)
        pivot = next(x for row in block for x in row if x)
        block = tuple(tuple(x / pivot for x in row) for row in block)
        image.add(block)
        if block == tuple(tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)):
            kernel += 1
    return theta.order(), kernel, image
