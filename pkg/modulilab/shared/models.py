"""Domain records shared across modulilab. Rationals are ``fractions.Fraction``."""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union

from modulilab.algebra.codec import to_text
from modulilab.algebra.mpoly import MPoly
from modulilab.algebra.rings import rat_to_str, to_rat
from modulilab.shared.errors import DegenerateInputError, InvalidProfileError

Scalar = Union[Fraction, MPoly]


def _is_zero(x):
    return x.is_zero() if isinstance(x, MPoly) else x == 0


def format_value(x):
    if isinstance(x, MPoly):
        return to_text(x)
    return rat_to_str(x)


def _coerce_entry(x):
    return x if isinstance(x, MPoly) else to_rat(x)


def parse_rationals(text, count):
    """Parse ``"a,b,c,d"`` into ``count`` Fractions."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if len(parts) != count or any(not p for p in parts):
        raise ValueError(f"Expected {count} comma-separated rationals, got {text!r}")
    return tuple(to_rat(p) for p in parts)


def projective_normalize(values):
    """Scale a rational vector so that its first nonzero entry is 1."""
    pivot = next((v for v in values if v != 0), None)
    if pivot is None:
        raise DegenerateInputError("The zero vector is not a projective point")
    return tuple(Fraction(v) / pivot for v in values)


class _Homogeneous:
    """Shared behaviour of the homogeneous coordinate records."""

    _fields = ()
    _label = ""

    def __post_init__(self):
        for name in self._fields:
            object.__setattr__(self, name, _coerce_entry(getattr(self, name)))
        if all(_is_zero(v) for v in self.as_tuple()):
            raise DegenerateInputError(f"{type(self).__name__} must not be all zero")

    def as_tuple(self):
        return tuple(getattr(self, name) for name in self._fields)

    def is_numeric(self):
        return not any(isinstance(v, MPoly) for v in self.as_tuple())

    def normalized(self):
        return type(self)(*projective_normalize(self.as_tuple()))

    def same_point(self, other):
        return projective_normalize(self.as_tuple()) == projective_normalize(other.as_tuple())

    def to_dict(self):
        return {self._label: [format_value(v) for v in self.as_tuple()]}

    @classmethod
    def parse(cls, text):
        return cls(*parse_rationals(text, len(cls._fields)))


@dataclass(frozen=True)
class GCoeffs(_Homogeneous):
    """The coefficients (a:b:c:d) of a normal form G_{a,b,c,d}."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    _fields = ("a", "b", "c", "d")
    _label = "gcoeffs"


@dataclass(frozen=True)
class ECoeffs(_Homogeneous):
    a: Scalar
    b: Scalar
    c: Scalar

    _fields = ("a", "b", "c")
    _label = "ecoeffs"


@dataclass(frozen=True)
class CPoint(_Homogeneous):
    c0: Scalar
    c1: Scalar
    c2: Scalar
    c3: Scalar

    _fields = ("c0", "c1", "c2", "c3")
    _label = "cpoint"


@dataclass(frozen=True)
class SValues(_Homogeneous):
    """A point of P(1,2,3,4): the elementary symmetric functions of the squares."""

    s1: Scalar
    s2: Scalar
    s3: Scalar
    s4: Scalar

    _fields = ("s1", "s2", "s3", "s4")
    _label = "svalues"


@dataclass(frozen=True, eq=False)
class WeightedPoint:
    """A point of a weighted projective space; ``==`` is projective equivalence."""

    weights: tuple
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "coords", tuple(_coerce_entry(c) for c in self.coords))
        if len(self.weights) != len(self.coords):
            raise ValueError(f"{len(self.weights)} weights but {len(self.coords)} coordinates")
        if any(w <= 0 for w in self.weights):
            raise ValueError(f"Weights must be positive: {self.weights}")
        if all(_is_zero(c) for c in self.coords):
            raise DegenerateInputError("A weighted projective point needs a nonzero coordinate")

    def __eq__(self, other):
        if not isinstance(other, WeightedPoint):
            return NotImplemented
        from modulilab.invariants.quotient import wp_equal

        return wp_equal(self, other)

    __hash__ = None

    def rescale(self, lam):
        return WeightedPoint(self.weights, tuple(c * lam**w for c, w in zip(self.coords, self.weights)))

    def to_dict(self):
        return {"wpoint": {"weights": list(self.weights), "coords": [format_value(c) for c in self.coords]}}

    def coords_text(self):
        return [format_value(c) for c in self.coords]


class StratumP3(str, Enum):
    SMOOTH = "Smooth"
    RED = "Red"
    CURV = "Curv"
    SIX_A1 = "SixA1"
    FOUR_A1 = "FourA1"
    TWO_A1 = "TwoA1"


class StratumE(str, Enum):
    BASE = "Base"
    CURV_PLUS = "CurvPlus"
    FOUR_A1_PLUS = "FourA1Plus"
    TWO_A1_PLUS = "TwoA1Plus"


@dataclass(frozen=True)
class SingReport:
    prime: int
    count: int
    charts: dict = field(default_factory=dict)
    points: tuple = ()

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("Singular point count cannot be negative")

    def to_dict(self):
        return {
            "prime": self.prime,
            "count": self.count,
            "charts": {str(k): v for k, v in sorted(self.charts.items())},
        }


@dataclass(frozen=True)
class StabilityReport:
    s_value: Fraction
    a_value: Fraction
    beta: Fraction
    name: str = ""

    def __post_init__(self):
        if self.beta != self.a_value - self.s_value:
            raise InvalidProfileError(f"beta {self.beta} != A - S = {self.a_value - self.s_value}")

    def to_dict(self):
        data = {
            "s_value": rat_to_str(self.s_value),
            "a_value": rat_to_str(self.a_value),
            "beta": rat_to_str(self.beta),
        }
        if self.name:
            data["preset"] = self.name
        return data


@dataclass(frozen=True)
class Fan:
    rays: tuple
    maximal_cones: tuple

    def to_dict(self):
        return {
            "rays": [list(map(int, r)) for r in self.rays],
            "maximal_cones": [list(c) for c in self.maximal_cones],
        }


@dataclass(frozen=True)
class IdealGenerators:
    """Monomials in (r, s, t) given by exponent triples."""

    monomials: tuple

    def __post_init__(self):
        if not self.monomials:
            raise ValueError("An ideal needs at least one generator")


@dataclass(frozen=True)
class LinePair:
    """The line {f = g = 0} in P^3_z."""

    f: MPoly
    g: MPoly

    def to_dict(self):
        return {"f": to_text(self.f), "g": to_text(self.g)}


@dataclass(frozen=True)
class CIModel:
    """Two quadrics and a (1,1)-form in P^3_u x P^3_v."""

    equations: tuple

    def __post_init__(self):
        if len(self.equations) != 3:
            raise ValueError(f"Expected three equations, got {len(self.equations)}")

    @property
    def quadric_u(self):
        return self.equations[0]

    @property
    def quadric_v(self):
        return self.equations[1]

    @property
    def bilinear(self):
        return self.equations[2]


def _point_text(point):
    return "(" + ",".join("(" + ":".join(str(x) if isinstance(x, str) else rat_to_str(x) for x in factor) + ")" for factor in point) + ")"


@dataclass(frozen=True)
class SingularCatalogue:
    """Catalogued singular points of one normal form, with curve components described by equations."""

    stratum: str
    points: tuple = ()
    curves: tuple = ()
    samples: tuple = ()

    def to_dict(self):
        return {
            "stratum": self.stratum,
            "points": [_point_text(p) for p in self.points],
            "curves": list(self.curves),
            "samples": [_point_text(p) for p in self.samples],
        }
