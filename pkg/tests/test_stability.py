from fractions import Fraction

import pytest
import sympy

from modulilab.shared.errors import InvalidProfileError
from modulilab.shared.models import StabilityReport
from modulilab.stability import profiles
from modulilab.stability.profiles import PiecewisePoly, u


def test_integrate_single_piece():
    v = PiecewisePoly(((0, 1, 8 * u**3 - 24 * u**2 + 24),))
    assert profiles.integrate_piecewise(v) == 18


@pytest.mark.parametrize(
    "name, expected",
    [
        ("divisor-F-corrected", Fraction(5, 6)),
        ("divisor-F-literal", Fraction(17, 20)),
        ("divisor-Eprime", Fraction(5, 6)),
        ("divisor-E", Fraction(5, 6)),
        ("fiber-S", Fraction(11, 16)),
    ],
)
def test_preset_s_values(name, expected):
    assert profiles.s_value(name) == expected


def test_literal_profile_matches_sympy():
    x = sympy.symbols("x")
    total = sympy.integrate(8 * x**3 - 24 * x**2 + 24, (x, 0, 1)) + sympy.integrate(8 * (2 - x) ** 3 * x, (x, 1, 2))
    assert Fraction(int(total.p), int(total.q)) == profiles.integrate_piecewise(profiles.preset("divisor-F-literal"))


def test_beta_values():
    assert profiles.beta_value(1, profiles.s_value("fiber-S")) == Fraction(5, 16)
    assert profiles.beta_value(1, profiles.s_value("divisor-F-corrected")) == Fraction(1, 6)
    report = profiles.report_for_preset("divisor-E")
    assert (report.s_value, report.a_value, report.beta) == (Fraction(5, 6), 2, Fraction(7, 6))
    assert profiles.report_for_preset("divisor-E", a_value="1").beta == Fraction(1, 6)
    assert report.to_dict() == {"s_value": "5/6", "a_value": "2", "beta": "7/6", "preset": "divisor-E"}


def test_delta_bounds():
    assert profiles.delta_bound_from_s(Fraction(5, 6)) == Fraction(6, 5)
    with pytest.raises(InvalidProfileError):
        profiles.delta_bound_from_s(0)
    assert profiles.nemuro_bound() == (Fraction(15, 16), Fraction(16, 15), Fraction(2, 3))


def test_volume_profiles_are_consistent():
    assert profiles.volume_check()
    jump = {"broken": PiecewisePoly(((0, 1, 24 - 16 * u), (1, 2, 4 * (2 - u))))}
    assert not profiles.volume_check(jump)


def test_profile_evaluation():
    v = profiles.preset("divisor-E")
    assert v(0) == 24
    assert v(1) == 8
    assert v(Fraction(3, 2)) == 1
    assert v.breakpoints() == [1]
    with pytest.raises(InvalidProfileError):
        v(3)


def test_profile_validation():
    with pytest.raises(InvalidProfileError):
        PiecewisePoly(((0, 1, u), (Fraction(1, 2), 2, u)))
    with pytest.raises(InvalidProfileError):
        PiecewisePoly(((0, 1, u), (Fraction(3, 2), 2, u)))
    with pytest.raises(InvalidProfileError):
        PiecewisePoly(((1, 1, u),))
    with pytest.raises(InvalidProfileError):
        PiecewisePoly(())
    with pytest.raises(InvalidProfileError):
        profiles.s_value(PiecewisePoly(((0, 1, u),)), anticanonical_volume=0)


def test_presets():
    with pytest.raises(InvalidProfileError):
        profiles.preset("divisor-Q")
    with pytest.raises(InvalidProfileError):
        profiles.report_for_preset("delta-sextic-dP")
    with pytest.raises(InvalidProfileError):
        StabilityReport(Fraction(1), Fraction(1), Fraction(1))
