"""
Coefficient rings for the polynomial engine.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator,
arbitrary precision). Prime-field elements are ``FpElem``. A ``Ring`` object
tags every polynomial so that mixing Q with F_p, or F_5 with F_7, fails loudly.
"""
from fractions import Fraction

from modulilab.shared.config import is_odd_prime
from modulilab.shared.errors import PrimeError, RingMismatchError

Rat = Fraction


def to_rat(value):
    """Parse an int, Fraction or "num/den" string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("Empty rational literal")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Invalid rational literal {value!r}: {e}")
    raise TypeError(f"Cannot interpret {type(value).__name__} as a rational")


def rat_to_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class FpElem:
    """An element of the prime field F_p."""

    __slots__ = ("residue", "modulus")

    def __init__(self, value, modulus):
        if isinstance(value, Fraction):
            if value.denominator % modulus == 0:
                raise PrimeError(f"{modulus} divides the denominator of {value}")
            value = value.numerator * pow(value.denominator, -1, modulus)
        self.modulus = modulus
        self.residue = value % modulus

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise RingMismatchError(f"F_{self.modulus} and F_{other.modulus} elements cannot be combined")
            return other.residue
        if isinstance(other, (int, Fraction)):
            return FpElem(other, self.modulus).residue
        return NotImplemented

    def __repr__(self):
        return f"F{self.modulus}({self.residue})"

    def __str__(self):
        return str(self.residue)

    def __eq__(self, other):
        r = self._coerce(other) if isinstance(other, (FpElem, int, Fraction)) else NotImplemented
        if r is NotImplemented:
            return NotImplemented
        return self.residue == r

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return FpElem(self.residue + r, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return FpElem(self.residue - r, self.modulus)

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return FpElem(r - self.residue, self.modulus)

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return FpElem(self.residue * r, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.residue, self.modulus)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FpElem(pow(self.residue, exponent, self.modulus), self.modulus)

    def inverse(self):
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.modulus}")
        return FpElem(pow(self.residue, self.modulus - 2, self.modulus), self.modulus)

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return self * FpElem(r, self.modulus).inverse()

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return r
        return FpElem(r, self.modulus) * self.inverse()


class Ring:
    """Coefficient ring descriptor: Q when ``modulus`` is None, F_p otherwise."""

    __slots__ = ("modulus",)

    def __init__(self, modulus=None):
        if modulus is not None and not is_odd_prime(modulus):
            raise PrimeError(f"{modulus} is not an odd prime")
        self.modulus = modulus

    @property
    def name(self):
        return "QQ" if self.modulus is None else f"GF({self.modulus})"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Ring) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Ring", self.modulus))

    @property
    def zero(self):
        return Fraction(0) if self.modulus is None else FpElem(0, self.modulus)

    @property
    def one(self):
        return Fraction(1) if self.modulus is None else FpElem(1, self.modulus)

    def coerce(self, value):
        if self.modulus is None:
            if isinstance(value, FpElem):
                raise RingMismatchError(f"{value!r} is not a rational")
            return to_rat(value)
        if isinstance(value, FpElem):
            if value.modulus != self.modulus:
                raise RingMismatchError(f"{value!r} does not belong to {self.name}")
            return value
        if isinstance(value, str):
            value = to_rat(value)
        return FpElem(value, self.modulus)

    def format(self, value):
        return rat_to_str(value) if self.modulus is None else str(value.residue)


QQ = Ring()


def GF(p):
    return Ring(p)
