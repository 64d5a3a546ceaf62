"""
Degree-(1,1,1,1) forms on (P^1)^4.

Coefficient a_m with m = 8i + 4j + 2k + l multiplies the monomial whose first
factor contributes x_1 when i = 0 and y_1 when i = 1, and likewise for j, k, l
on factors 2, 3, 4. Thus a_0 = x1*x2*x3*x4, a_3 = x1*x2*y3*y4, a_15 = y1*y2*y3*y4.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from modulilab.algebra.mpoly import MPoly
from modulilab.algebra.rings import to_rat
from modulilab.shared.errors import DegenerateInputError
from modulilab.shared.models import GCoeffs, format_value

FORM_VARIABLES = ("x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")


def index_bits(m):
    return ((m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1)


def bits_index(bits):
    i, j, k, l = bits
    return 8 * i + 4 * j + 2 * k + l


def _is_zero(x):
    return x.is_zero() if isinstance(x, MPoly) else x == 0


@dataclass(frozen=True)
class Form1111:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(c if isinstance(c, MPoly) else to_rat(c) for c in self.coeffs)
        if len(coeffs) != 16:
            raise ValueError(f"A (1,1,1,1)-form has 16 coefficients, got {len(coeffs)}")
        if all(_is_zero(c) for c in coeffs):
            raise DegenerateInputError("The zero form has no invariants")
        object.__setattr__(self, "coeffs", coeffs)

    def __getitem__(self, m):
        return self.coeffs[m]

    def is_symbolic(self):
        return any(isinstance(c, MPoly) for c in self.coeffs)

    def to_dict(self):
        return {"form": [format_value(c) for c in self.coeffs]}


def g_form(g: GCoeffs) -> Form1111:
    """The normal form G_{a,b,c,d} as a (1,1,1,1)-form."""
    a, b, c, d = g.as_tuple()
    half = Fraction(1, 2)
    zero = next((x * 0 for x in (a, b, c, d) if isinstance(x, MPoly)), Fraction(0))
    coeffs = [zero] * 16
    coeffs[0] = coeffs[15] = (a + d) * half
    coeffs[3] = coeffs[12] = (a - d) * half
    coeffs[5] = coeffs[10] = (b + c) * half
    coeffs[6] = coeffs[9] = (b - c) * half
    return Form1111(tuple(coeffs))


def permute_factors(f: Form1111, sigma) -> Form1111:
    """Relabel the four P^1 factors: factor k of the result is factor sigma[k] of ``f``."""
    sigma = tuple(sigma)
    if sorted(sigma) != [0, 1, 2, 3]:
        raise ValueError(f"{sigma} is not a permutation of the four factors")
    coeffs = [None] * 16
    for m in range(16):
        bits = index_bits(m)
        coeffs[bits_index(tuple(bits[sigma[k]] for k in range(4)))] = f.coeffs[m]
    return Form1111(tuple(coeffs))


def factor_permutations():
    return list(permutations(range(4)))


def form_polynomial(f: Form1111, extra_variables=()) -> MPoly:
    """
    The form as a polynomial in x1..x4, y1..y4. Symbolic coefficients keep
    their own variables, which are appended after the form variables.
    """
    coefficient_vars = []
    for c in f.coeffs:
        if isinstance(c, MPoly):
            coefficient_vars.extend(v for v in c.variables if v not in coefficient_vars)
    for v in extra_variables:
        if v not in coefficient_vars:
            coefficient_vars.append(v)
    names = FORM_VARIABLES + tuple(v for v in coefficient_vars if v not in FORM_VARIABLES)
    total = MPoly(names)
    for m, c in enumerate(f.coeffs):
        if _is_zero(c):
            continue
        exponent = [0] * len(names)
        for factor, bit in enumerate(index_bits(m)):
            exponent[factor + 4 * bit] = 1
        monomial = MPoly(names, {tuple(exponent): 1})
        coefficient = c.extend_vars(names) if isinstance(c, MPoly) else c
        total = total + monomial * coefficient
    return total
