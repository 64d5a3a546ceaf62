from fractions import Fraction

import pytest

from modulilab.shared.errors import DegenerateInputError, NoCatalogueError, PrimeError
from modulilab.shared.models import ECoeffs, GCoeffs, StratumE, StratumP3
from modulilab.strata import catalogue, classify, oracle


@pytest.mark.parametrize(
    "g, expected",
    [
        (GCoeffs(1, 2, 3, 5), StratumP3.SMOOTH),
        (GCoeffs(0, 0, 1, 1), StratumP3.SIX_A1),
        (GCoeffs(1, -1, 1, 1), StratumP3.RED),
        (GCoeffs(0, 0, 0, 1), StratumP3.RED),
        (GCoeffs(1, -1, 1, 2), StratumP3.CURV),
        (GCoeffs(0, 0, 1, 2), StratumP3.FOUR_A1),
        (GCoeffs(1, 1, 2, 2), StratumP3.FOUR_A1),
        (GCoeffs(-165, 165, 1517, 173), StratumP3.TWO_A1),
        (GCoeffs(1, -1, 2, 0), StratumP3.TWO_A1),
    ],
)
def test_classify_p3(g, expected):
    assert classify.classify_p3(g) is expected


@pytest.mark.parametrize(
    "e, expected",
    [
        (ECoeffs(1, 1, 1), StratumE.CURV_PLUS),
        (ECoeffs(1, -1, 1), StratumE.CURV_PLUS),
        (ECoeffs(1, 0, 0), StratumE.FOUR_A1_PLUS),
        (ECoeffs(0, 3, 0), StratumE.FOUR_A1_PLUS),
        (ECoeffs(2, 3, 5), StratumE.BASE),
        (ECoeffs(1, 2, 2), StratumE.TWO_A1_PLUS),
        (ECoeffs(3, 3, 1), StratumE.TWO_A1_PLUS),
        (ECoeffs(0, 1, 2), StratumE.BASE),
    ],
)
def test_classify_e(e, expected):
    assert classify.classify_e(e) is expected


def test_zero_points_are_rejected():
    with pytest.raises(DegenerateInputError):
        GCoeffs(0, 0, 0, 0)
    with pytest.raises(DegenerateInputError):
        ECoeffs(0, 0, 0)


def _plane_grid():
    values = [Fraction(k, 2) for k in range(-4, 5)]
    return [(a, c, d) for a in values for c in values for d in values if (a, c, d) != (0, 0, 0)]


def test_plane_closures():
    for a, c, d in _plane_grid():
        stratum = classify.classify_p3(classify.plane_point(a, c, d))
        if stratum is StratumP3.CURV:
            assert classify.curv_plane_closure(a, c, d)
        if stratum is StratumP3.FOUR_A1:
            assert classify.four_a1_plane_closure(a, c, d)
        if stratum is StratumP3.SMOOTH:
            pytest.fail(f"(a:-a:c:d) = {(a, c, d)} cannot be smooth")


def test_plane_lists():
    lists = classify.plane_point_lists()
    assert len(lists["Red"]) == 6
    assert len(lists["SixA1"]) == 3
    for name, points in lists.items():
        assert all(classify.classify_p3(classify.plane_point(*p)).value == name for p in points)

    listed = {
        name: {classify.plane_point(*p).normalized() for p in points}
        for name, points in lists.items()
    }
    for a, c, d in _plane_grid():
        g = classify.plane_point(a, c, d)
        stratum = classify.classify_p3(g).value
        if stratum in listed:
            assert g.normalized() in listed[stratum]


def test_generic_plane_catalogue():
    entry = catalogue.expected_singular_points(GCoeffs(2, -2, 3, 7))
    assert entry.stratum == "TwoA1"
    assert entry.to_dict()["points"] == ["((1:1),(1:1),(1:1),(1:1))", "((1:-1),(1:-1),(1:-1),(1:-1))"]


def test_catalogue_errors():
    with pytest.raises(NoCatalogueError):
        catalogue.expected_singular_points(GCoeffs(1, 2, 3, 5))
    with pytest.raises(NoCatalogueError):
        catalogue.expected_singular_points(GCoeffs(1, -1, 1, 1))
    with pytest.raises(TypeError):
        catalogue.expected_singular_points((1, 2, 3))


def test_e_catalogue_lists():
    entry = catalogue.expected_singular_points(ECoeffs(1, 0, 0))
    assert entry.stratum == "FourA1Plus"
    assert len(entry.points) == 4
    assert entry.curves == catalogue.E_BASE_CURVES

    entry = catalogue.expected_singular_points(ECoeffs(2, 1, 1))
    assert set(entry.points) == {
        (catalogue._e(1, 0, 0), catalogue._e(0, 1, 0)),
        (catalogue._e(0, 1, 0), catalogue._e(1, 0, 0)),
    }

    entry = catalogue.expected_singular_points(ECoeffs(0, 1, 0))
    assert not any(catalogue.is_rational_point(p) for p in entry.points)
    assert "i" in entry.to_dict()["points"][0]


@pytest.mark.parametrize(
    "g",
    [GCoeffs(0, 0, 1, 1), GCoeffs(0, 0, 1, 2), GCoeffs(0, 0, 2, -3), GCoeffs(1, -1, 2, 3), GCoeffs(1, -1, 1, 2), GCoeffs(1, -1, 1, 3)],
)
def test_catalogued_points_are_singular(g):
    entry = catalogue.expected_singular_points(g)
    points = entry.points + entry.samples
    assert points
    assert all(catalogue.jacobian_singular_q(g, p) for p in points)


def test_jacobian_rejects_smooth_points():
    g = GCoeffs(0, 0, 1, 2)
    assert not catalogue.jacobian_singular_q(g, catalogue._signs(1, -1, 1, 1))
    assert not catalogue.jacobian_singular_q(g, catalogue._signs(1, 1, 1, -1))


@pytest.mark.parametrize(
    "e",
    [
        ECoeffs(1, 0, 0),
        ECoeffs(0, 0, 1),
        ECoeffs(1, 1, 1),
        ECoeffs(1, 1, -1),
        ECoeffs(1, -1, -1),
        ECoeffs(1, -1, 1),
        ECoeffs(2, 1, 1),
        ECoeffs(2, 1, -1),
        ECoeffs(1, 1, 2),
        ECoeffs(1, -1, 2),
        ECoeffs(2, 3, 5),
    ],
)
def test_catalogued_e_points_are_singular(e):
    entry = catalogue.expected_singular_points(e)
    rational = [p for p in entry.points + entry.samples if catalogue.is_rational_point(p)]
    assert all(catalogue.jacobian_singular_e(e, p) for p in rational)


def test_e_jacobian_needs_rational_points():
    with pytest.raises(ValueError):
        catalogue.jacobian_singular_e(ECoeffs(0, 1, 0), (catalogue._e("i", 1, 0), catalogue._e("i", 1, 0)))


def test_point_enumeration():
    assert len(oracle.projective_line(5)) == 6
    assert len(oracle.projective_space(3, 5)) == 1 + 5 + 25 + 125
    assert len(set(oracle.projective_space(2, 7))) == 57


def test_oracle_p3_counts(oracle_cases):
    for case in oracle_cases["p3"]:
        g = GCoeffs(*case["gcoeffs"])
        assert classify.classify_p3(g).value == case["stratum"]
        assert oracle.oracle_count_1111(g, case["prime"], workers=1).count == case["count"], case


def test_oracle_six_nodal_points_match_the_catalogue():
    report = oracle.oracle_count_1111(GCoeffs(0, 0, 1, 1), 7, workers=1)
    expected = {tuple((1, int(y) % 7) for _, y in p) for p in catalogue.SIX_A1_POINTS}
    assert set(report.points) == expected
    assert sum(report.charts.values()) == report.count
    assert set(report.charts) == {"xxxx"}


def test_oracle_curve_strata_grow_like_p():
    g = GCoeffs(1, -1, 1, 2)
    counts = [oracle.oracle_count_1111(g, p, workers=1).count for p in (5, 7)]
    assert counts == [6, 8]


@pytest.mark.slow
def test_oracle_smooth_and_reducible():
    assert oracle.oracle_count_1111(GCoeffs(1, 2, 3, 5), 11, workers=1).count == 0
    for p in (5, 7):
        assert oracle.oracle_count_1111(GCoeffs(1, -1, 1, 1), p, workers=1).count >= p * p


@pytest.mark.slow
def test_oracle_e_counts(oracle_cases):
    for case in oracle_cases["e"]:
        e = ECoeffs(*case["ecoeffs"])
        assert classify.classify_e(e).value == case["stratum"]
        assert oracle.oracle_count_22(e, case["prime"], workers=1).count == case["count"], case


@pytest.mark.slow
def test_oracle_workers_merge_to_the_same_report():
    g = GCoeffs(0, 0, 1, 2)
    serial = oracle.oracle_count_1111(g, 5, workers=1)
    parallel = oracle.oracle_count_1111(g, 5, workers=2)
    assert parallel == serial


def test_oracle_rejects_bad_primes():
    with pytest.raises(PrimeError):
        oracle.oracle_count_1111(GCoeffs(0, 0, 1, 1), 4)
    with pytest.raises(PrimeError):
        oracle.oracle_count_1111(GCoeffs(Fraction(1, 5), 0, 1, 1), 5)
    with pytest.raises(PrimeError):
        oracle.oracle_count_22(ECoeffs(1, 0, 0), 2)


def test_sing_report_serialization():
    report = oracle.oracle_count_1111(GCoeffs(1, -1, 2, 0), 5, workers=1)
    data = report.to_dict()
    assert data["prime"] == 5
    assert data["count"] == 2
    assert sum(data["charts"].values()) == 2
