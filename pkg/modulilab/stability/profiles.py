"""
Exact S-invariants and beta-invariants from piecewise-polynomial volume profiles.

A profile lists vol(-K_X - uF) on consecutive intervals of u. Every number is
a Fraction; integration uses exact antiderivatives.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from modulilab.algebra.mpoly import MPoly
from modulilab.algebra.rings import to_rat
from modulilab.shared.errors import InvalidProfileError
from modulilab.shared.models import StabilityReport

logger = logging.getLogger(__name__)

ANTICANONICAL_VOLUME = Fraction(24)
SURFACE_DEGREE = Fraction(6)

u = MPoly.variable("u", ("u",))


@dataclass(frozen=True)
class Piece:
    lo: Fraction
    hi: Fraction
    poly: MPoly

    def __post_init__(self):
        object.__setattr__(self, "lo", to_rat(self.lo))
        object.__setattr__(self, "hi", to_rat(self.hi))
        if not isinstance(self.poly, MPoly):
            object.__setattr__(self, "poly", MPoly.constant(to_rat(self.poly), ("u",)))
        if self.lo >= self.hi:
            raise InvalidProfileError(f"Empty interval [{self.lo}, {self.hi}]")
        if self.poly.variables != ("u",):
            raise InvalidProfileError(f"Profile pieces must be polynomials in u, got {self.poly.variables}")


@dataclass(frozen=True)
class PiecewisePoly:
    pieces: tuple

    def __post_init__(self):
        pieces = tuple(p if isinstance(p, Piece) else Piece(*p) for p in self.pieces)
        if not pieces:
            raise InvalidProfileError("A profile needs at least one piece")
        for left, right in zip(pieces, pieces[1:]):
            if left.hi > right.lo:
                raise InvalidProfileError(f"Pieces [{left.lo}, {left.hi}] and [{right.lo}, {right.hi}] overlap")
            if left.hi < right.lo:
                raise InvalidProfileError(f"Gap between {left.hi} and {right.lo}")
        object.__setattr__(self, "pieces", pieces)

    def __call__(self, x):
        x = to_rat(x)
        for piece in self.pieces:
            if piece.lo <= x <= piece.hi:
                return piece.poly.evaluate([x])
        raise InvalidProfileError(f"{x} is outside the profile's range")

    def breakpoints(self):
        return [p.hi for p in self.pieces[:-1]]


def antiderivative(poly: MPoly) -> MPoly:
    return MPoly(poly.variables, {(k + 1,): c / (k + 1) for (k,), c in poly.terms.items()})


def integrate_piecewise(v: PiecewisePoly) -> Fraction:
    total = Fraction(0)
    for piece in v.pieces:
        F = antiderivative(piece.poly)
        total += F.evaluate([piece.hi]) - F.evaluate([piece.lo])
    return total


def s_value(v, anticanonical_volume=ANTICANONICAL_VOLUME) -> Fraction:
    if isinstance(v, str):
        v = preset(v)
    anticanonical_volume = to_rat(anticanonical_volume)
    if anticanonical_volume <= 0:
        raise InvalidProfileError(f"The anticanonical volume must be positive, got {anticanonical_volume}")
    if not isinstance(v, PiecewisePoly):
        return to_rat(v)
    return integrate_piecewise(v) / anticanonical_volume


def beta_value(a, s) -> Fraction:
    return to_rat(a) - to_rat(s)


def delta_bound_from_s(s, a=1) -> Fraction:
    s = to_rat(s)
    if s <= 0:
        raise InvalidProfileError(f"S must be positive, got {s}")
    return to_rat(a) / s


class NemuroBound(NamedTuple):
    factor: Fraction
    delta_bound: Fraction
    crude_bound: Fraction


def nemuro_bound() -> NemuroBound:
    """
    Fibration bound at a point of a fibre S: the weighted sum of the two
    refined S-values and the cruder bound vol(-K_X)/3 * delta(S) / (2 (-K_S)^2).
    """
    tail = integrate_piecewise(PiecewisePoly(((1, 2, (2 - u) ** 3),)))
    factor = Fraction(3, 4) + Fraction(3, 4) * tail
    crude = ANTICANONICAL_VOLUME / 3 * PRESET_CONSTANTS["delta-sextic-dP"] / (2 * SURFACE_DEGREE)
    return NemuroBound(factor, 1 / factor, crude)


PRESET_PROFILES = {
    "divisor-F-corrected": PiecewisePoly(((0, 1, 8 * u**3 - 24 * u**2 + 24), (1, 2, 8 * (2 - u) ** 3))),
    "divisor-F-literal": PiecewisePoly(((0, 1, 8 * u**3 - 24 * u**2 + 24), (1, 2, 8 * (2 - u) ** 3 * u))),
    "divisor-Eprime": PiecewisePoly(((0, 1, 8 * u**3 - 24 * u**2 + 24), (1, 2, 8 * (2 - u) ** 3))),
    "divisor-E": PiecewisePoly(((0, 1, 8 * (3 - 3 * u**2 + u**3)), (1, 2, 8 * (2 - u) ** 3))),
}

PRESET_CONSTANTS = {
    "fiber-S": Fraction(11, 16),
    "delta-sextic-dP": Fraction(1),
}

# log discrepancy A_X of each divisor; E is exceptional over a smooth curve
PRESET_LOG_DISCREPANCY = {"divisor-E": Fraction(2)}


def presets():
    return {**PRESET_PROFILES, **PRESET_CONSTANTS}


def preset(name):
    try:
        return presets()[name]
    except KeyError:
        raise InvalidProfileError(f"Unknown preset {name!r}; choose from {', '.join(sorted(presets()))}")


def report_for_preset(name, a_value=None) -> StabilityReport:
    if name == "delta-sextic-dP":
        raise InvalidProfileError("delta-sextic-dP is a delta-invariant, not an S-value")
    s = s_value(preset(name))
    a = to_rat(a_value) if a_value is not None else PRESET_LOG_DISCREPANCY.get(name, Fraction(1))
    report = StabilityReport(s, a, beta_value(a, s), name)
    logger.info("%s: S = %s, beta = %s", name, s, report.beta)
    return report


def volume_check(profiles=None) -> bool:
    """Each profile starts at vol(-K_X) = 24, is continuous at its breakpoints and ends at 0."""
    profiles = profiles or PRESET_PROFILES
    for name, v in profiles.items():
        if v.pieces[0].poly.evaluate([v.pieces[0].lo]) != ANTICANONICAL_VOLUME:
            logger.info("%s does not start at %s", name, ANTICANONICAL_VOLUME)
            return False
        for left, right in zip(v.pieces, v.pieces[1:]):
            if left.poly.evaluate([left.hi]) != right.poly.evaluate([right.lo]):
                logger.info("%s jumps at u = %s", name, left.hi)
                return False
        last = v.pieces[-1]
        if last.poly.evaluate([last.hi]) != 0:
            return False
    return True
