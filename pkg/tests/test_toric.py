import pytest

from modulilab.shared.errors import DegenerateInputError
from modulilab.shared.models import Fan, IdealGenerators
from modulilab.toric import fan


def test_moduli_fan_shape():
    f = fan.moduli_fan()
    assert len(f.rays) == 5
    assert len(f.maximal_cones) == 6
    assert f.to_dict()["rays"][0] == [1, 2, 3]


def test_multiplicities():
    assert fan.multiplicities(fan.moduli_fan()) == [3, 2, 1, 6, 4, 3]
    assert fan.multiplicities(fan.weighted_projective_fan()) == [1, 6, 4, 3]


def test_cone_multiplicity_checks_membership():
    with pytest.raises(ValueError):
        fan.cone_multiplicity(fan.moduli_fan(), (0, 1, 4))
    flat = Fan(((1, 0, 0), (0, 1, 0), (1, 1, 0)), ((0, 1, 2),))
    with pytest.raises(DegenerateInputError):
        fan.cone_multiplicity(flat, (0, 1, 2))


@pytest.mark.parametrize("seed", [0, 1, 2024])
def test_fans_are_complete(seed):
    assert fan.fan_is_complete(fan.moduli_fan(), seed=seed)
    assert fan.fan_is_complete(fan.weighted_projective_fan(), seed=seed)


def test_missing_cone_is_detected():
    f = fan.moduli_fan()
    partial = Fan(f.rays, f.maximal_cones[:-1])
    assert not fan.fan_is_complete(partial, seed=0)


def test_weighted_blowup_gives_the_moduli_fan():
    assert fan.star_subdivision_check()
    assert not fan.star_subdivision_check(weights=(1, 1, 1))
    assert not fan.star_subdivision_check(cone=(0, 1, 3))


def test_star_subdivide():
    base = fan.weighted_projective_fan()
    subdivided = fan.star_subdivide(base, (0, 1, 2), (1, 1, 1))
    assert len(subdivided.maximal_cones) == len(base.maximal_cones) + 2
    assert fan.fan_is_complete(subdivided, seed=3)
    assert fan.multiplicities(subdivided)[-3:] == [1, 1, 1]
    with pytest.raises(DegenerateInputError):
        fan.star_subdivide(base, (0, 1, 2), (2, 2, 2))
    with pytest.raises(ValueError):
        fan.star_subdivide(base, (0, 1, 4), (1, 1, 1))


def test_same_fan_ignores_ordering():
    f = fan.moduli_fan()
    shuffled = Fan(tuple(reversed(f.rays)), tuple(tuple(4 - i for i in c) for c in f.maximal_cones))
    assert fan.same_fan(f, shuffled)
    assert not fan.same_fan(f, fan.weighted_projective_fan())


def test_weighted_projective_fan_validation():
    with pytest.raises(ValueError):
        fan.weighted_projective_fan((2, 3, 4, 6))
    with pytest.raises(DegenerateInputError):
        fan.weighted_projective_fan((1, 2, 4, 6))


def test_ideal_has_weighted_order_six():
    assert len(fan.ideal_generators().monomials) == 7
    assert set(fan.ideal_weighted_orders()) == {6}
    assert fan.ideal_weighted_orders(weights=(1, 1, 1)) == [6, 5, 4, 4, 3, 3, 2]
    with pytest.raises(ValueError):
        IdealGenerators(())
