"""Truncated power series in one variable t with rational coefficients."""
from dataclasses import dataclass
from fractions import Fraction

from modulilab.algebra.mpoly import MPoly
from modulilab.algebra.rings import rat_to_str, to_rat
from modulilab.shared.errors import DegenerateInputError


@dataclass(frozen=True)
class SeriesTrunc:
    coefficients: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"Series order must be non-negative, got {self.order}")
        if len(self.coefficients) != self.order + 1:
            raise ValueError(f"Expected {self.order + 1} coefficients, got {len(self.coefficients)}")

    @classmethod
    def from_coefficients(cls, coefficients, order):
        coefficients = [to_rat(c) for c in coefficients][: order + 1]
        coefficients += [Fraction(0)] * (order + 1 - len(coefficients))
        return cls(tuple(coefficients), order)

    def _check(self, other):
        if other.order != self.order:
            raise ValueError(f"Series orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return SeriesTrunc(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SeriesTrunc(tuple(c * other for c in self.coefficients), self.order)
        self._check(other)
        a, b = self.coefficients, other.coefficients
        return SeriesTrunc(
            tuple(sum(a[k] * b[n - k] for k in range(n + 1)) for n in range(self.order + 1)),
            self.order,
        )

    __rmul__ = __mul__

    def inverse(self):
        b = self.coefficients
        if b[0] == 0:
            raise DegenerateInputError("Series with zero constant term is not invertible")
        c = [Fraction(1) / b[0]]
        for n in range(1, self.order + 1):
            c.append(-sum(b[k] * c[n - k] for k in range(1, n + 1)) / b[0])
        return SeriesTrunc(tuple(c), self.order)

    def to_list(self):
        return [rat_to_str(c) for c in self.coefficients]


@dataclass(frozen=True)
class RationalTerm:
    """scale * numerator / denominator, both univariate polynomials in one variable."""

    scale: Fraction
    numerator: MPoly
    denominator: MPoly


def univariate_coefficients(poly, order):
    if len(poly.variables) > 1:
        raise ValueError(f"Expected a univariate polynomial, got variables {poly.variables}")
    coefficients = [Fraction(0)] * (order + 1)
    for (k,), c in ((e if e else (0,), c) for e, c in poly.terms.items()):
        if k <= order:
            coefficients[k] = c
    return SeriesTrunc(tuple(coefficients), order)


def series_expand(terms, order):
    """Expand a formal sum of rational functions of t to the given order."""
    if order < 0:
        raise ValueError(f"Series order must be non-negative, got {order}")
    total = SeriesTrunc((Fraction(0),) * (order + 1), order)
    for term in terms:
        num = univariate_coefficients(term.numerator, order)
        den = univariate_coefficients(term.denominator, order)
        if den.coefficients[0] == 0:
            raise DegenerateInputError(f"Denominator {term.denominator!r} has zero constant term")
        total = total + (num * den.inverse()) * to_rat(term.scale)
    return total
