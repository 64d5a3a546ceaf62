from fractions import Fraction

import pytest
import sympy

from modulilab.algebra import codec
from modulilab.algebra.linalg import det, det_bareiss, det_cofactor, mat_mul, rank
from modulilab.algebra.mpoly import MPoly, poly_ops, poly_ring
from modulilab.algebra.rings import GF, QQ, FpElem, Ring, to_rat
from modulilab.algebra.series import SeriesTrunc, univariate_coefficients
from modulilab.invariants.quotient import wp_equal
from modulilab.shared.errors import (
    DegenerateInputError,
    DivisionByZeroPolynomialError,
    NonSquareMatrixError,
    PrimeError,
    RingMismatchError,
    UnboundVariableError,
    UnknownVariableError,
)
from modulilab.shared.models import WeightedPoint

VARIABLES = ("x", "y", "z")


def random_rational(rng, bound=9, nonzero=False):
    if nonzero:
        num = int(rng.integers(1, bound + 1)) * int(rng.choice([-1, 1]))
    else:
        num = int(rng.integers(-bound, bound + 1))
    return Fraction(num, int(rng.integers(1, bound + 1)))


def random_poly(rng, variables=VARIABLES, terms=4, degree=2):
    exponents = rng.integers(0, degree + 1, size=(terms, len(variables)))
    return MPoly(variables, {tuple(int(k) for k in e): random_rational(rng, nonzero=True) for e in exponents})


def test_to_rat_parses_literals():
    assert to_rat("3/6") == Fraction(1, 2)
    assert to_rat(-4) == Fraction(-4)
    with pytest.raises(ValueError):
        to_rat("1/0")
    with pytest.raises(ValueError):
        to_rat("")


def test_fp_arithmetic():
    x = FpElem(3, 5)
    assert x == 8
    assert x * x == 4
    assert x.inverse() * x == 1
    assert FpElem(Fraction(1, 2), 5) == 3
    with pytest.raises(PrimeError):
        FpElem(Fraction(1, 5), 5)
    with pytest.raises(RingMismatchError):
        FpElem(1, 5) + FpElem(1, 7)


def test_ring_rejects_non_primes():
    with pytest.raises(PrimeError):
        Ring(9)
    with pytest.raises(PrimeError):
        GF(2)
    assert GF(7).name == "GF(7)"
    assert QQ.name == "QQ"


def test_expansion_and_equality():
    x, y = poly_ring("x y")
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - x).is_zero()
    assert x * 0 == 0
    assert MPoly.constant(2, ("x", "y")) == 2
    assert poly_ops(x, y, "sub") == -(y - x)
    with pytest.raises(ValueError):
        poly_ops(x, y, "div")


def test_expansion_matches_sympy():
    x, y, z = poly_ring("x y z")
    ours = (x + 2 * y - z / 3) ** 4 * (x - y)
    sx, sy, sz = sympy.symbols("x y z")
    theirs = sympy.Poly(sympy.expand((sx + 2 * sy - sz / 3) ** 4 * (sx - sy)), sx, sy, sz)
    expected = {e: Fraction(int(c.p), int(c.q)) for e, c in theirs.terms()}
    assert ours.terms == expected


def test_mixing_rings_fails_loudly():
    (x,) = poly_ring("x")
    (x5,) = poly_ring("x", GF(5))
    (y,) = poly_ring("y")
    with pytest.raises(RingMismatchError):
        x + x5
    with pytest.raises(RingMismatchError):
        x * y


def test_divide_exact():
    x, y = poly_ring("x y")
    assert (x * x - y * y).divide_exact(x - y) == x + y
    assert (x * x + 1).divide_exact(x) is None
    with pytest.raises(DivisionByZeroPolynomialError):
        x.divide_exact(x * 0)


def test_partial_evaluate_substitute():
    x, y = poly_ring("x y")
    f = x**3 * y - 2 * y**2 + 5
    assert f.partial("x") == 3 * x**2 * y
    assert f.evaluate({"x": 2, "y": Fraction(1, 2)}) == Fraction(17, 2)
    with pytest.raises(UnboundVariableError):
        f.evaluate({"x": 1})
    with pytest.raises(UnknownVariableError):
        f.partial("z")

    s, t = poly_ring("s t")
    g = f.substitute({"x": s + t, "y": s.one()})
    assert g == (s + t) ** 3 + 3
    assert g.variables == ("s", "t")


def test_homogeneity():
    x, y, z = poly_ring("x y z")
    assert (x * y + z * z).homogeneous_degree() == 2
    assert (x**2 + z).homogeneous_degree(weights=(1, 5, 2)) == 2
    assert (x + y * y).homogeneous_degree() is None
    assert x.total_degree() == 1
    assert (x * 0).total_degree() == -1


def test_extend_and_restrict_vars():
    (x,) = poly_ring("x")
    wide = (x + 1).extend_vars(("w", "x"))
    assert wide.variables == ("w", "x")
    assert wide.restrict_vars(("x",)) == x + 1
    with pytest.raises(UnknownVariableError):
        x.extend_vars(("y",))


def test_reduce_mod():
    (x,) = poly_ring("x")
    f = (x + Fraction(1, 2)) * 4
    assert f.reduce_mod(7) == MPoly(("x",), {(1,): 4, (0,): 2}, GF(7))
    with pytest.raises(PrimeError):
        (x / 5).reduce_mod(5)


def test_text_codec():
    a, b = poly_ring("a b")
    f = Fraction(3, 2) * a**2 * b - a
    assert codec.to_text(f) == "3/2*a^2*b + -1*a"
    assert codec.from_text("3/2*a^2*b + -1*a", ("a", "b")) == f
    assert codec.to_text(a * 0) == "0"
    with pytest.raises(UnknownVariableError):
        codec.from_text("1*c", ("a", "b"))


def test_json_codec_keeps_the_ring():
    (x,) = poly_ring("x", GF(11))
    f = x**2 * 3 + 7
    restored = codec.from_json(codec.to_json(f))
    assert restored == f
    assert restored.ring == GF(11)
    with pytest.raises(ValueError):
        codec.from_json("{not json")


def test_determinants_agree():
    a, b = poly_ring("a b")
    m = [
        [a, b, 0, 1],
        [1, a, b, 0],
        [0, 1, a, b],
        [b, 0, 1, a],
    ]
    m = [[x if isinstance(x, MPoly) else a.one() * x for x in row] for row in m]
    assert det_bareiss(m) == det_cofactor(m)
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[Fraction(1, 2), 0, 0], [0, 2, 0], [0, 0, 3]]) == 3
    with pytest.raises(NonSquareMatrixError):
        det([[1, 2, 3], [4, 5, 6]])


def test_bareiss_handles_zero_pivots():
    m = [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
    assert det_bareiss(m) == det_cofactor(m) == -12


def test_rank():
    assert rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1
    assert rank([[Fraction(0), Fraction(0)]]) == 0
    assert rank([[FpElem(1, 5), FpElem(2, 5)], [FpElem(3, 5), FpElem(1, 5)]]) == 1
    assert rank([[FpElem(1, 7), FpElem(2, 7)], [FpElem(3, 7), FpElem(1, 7)]]) == 2


def test_series_inverse():
    (t,) = poly_ring("t")
    geometric = univariate_coefficients(1 - t, 5).inverse()
    assert geometric.to_list() == ["1"] * 6
    with pytest.raises(DegenerateInputError):
        SeriesTrunc.from_coefficients([0, 1], 3).inverse()


def test_ring_axioms_on_random_polynomials(rng):
    for _ in range(20):
        f, g, h = (random_poly(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f + f.zero() == f
        assert f * f.one() == f
        assert (f - f).is_zero()


def test_substitute_is_a_ring_homomorphism(rng):
    for _ in range(10):
        f, g = random_poly(rng), random_poly(rng)
        bindings = {v: random_poly(rng, ("s", "t"), terms=3) for v in VARIABLES}
        assert (f + g).substitute(bindings) == f.substitute(bindings) + g.substitute(bindings)
        assert (f * g).substitute(bindings) == f.substitute(bindings) * g.substitute(bindings)


def test_partial_satisfies_leibniz(rng):
    for _ in range(10):
        f, g = random_poly(rng), random_poly(rng)
        for v in VARIABLES:
            assert (f * g).partial(v) == f.partial(v) * g + f * g.partial(v)


def test_divide_exact_recovers_the_factor(rng):
    for _ in range(10):
        q, d = random_poly(rng), random_poly(rng, terms=3)
        assert (q * d).divide_exact(d) == q


def test_det_is_multiplicative(rng):
    for _ in range(20):
        a = [[random_rational(rng) for _ in range(3)] for _ in range(3)]
        b = [[random_rational(rng) for _ in range(3)] for _ in range(3)]
        assert det(mat_mul(a, b)) == det(a) * det(b)
        assert det_bareiss(a) == det_cofactor(a)


def test_weighted_equality_is_an_equivalence(rng):
    weights = (1, 3, 4, 6)
    for _ in range(20):
        p = WeightedPoint(weights, [random_rational(rng, nonzero=True) for _ in weights])
        q = p.rescale(random_rational(rng, nonzero=True))
        r = q.rescale(random_rational(rng, nonzero=True))
        other = WeightedPoint(weights, [random_rational(rng, nonzero=True) for _ in weights])
        assert wp_equal(p, p)
        assert wp_equal(p, q) and wp_equal(q, p)
        assert wp_equal(q, r) and wp_equal(p, r)
        assert wp_equal(p, other) == wp_equal(other, p)


def test_codecs_restore_random_polynomials(rng):
    for _ in range(10):
        f = random_poly(rng, terms=5, degree=3)
        assert codec.from_text(codec.to_text(f), VARIABLES) == f
        assert codec.from_json(codec.to_json(f)) == f
        reduced = f.reduce_mod(11)
        assert codec.from_json(codec.to_json(reduced)) == reduced
