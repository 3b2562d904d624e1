from fractions import Fraction

import pytest

from baseloci.errors import DimensionCapError, InputError
from baseloci.graded import (GradedMonomialSystem, check_inclusion, dim_one_period,
                             find_refinement_and_d, graded_limit_order,
                             multiple_in_subsemigroup_bound, verify_product_identity)
from baseloci.models import load_fixture
from baseloci.monomial import MonomialIdeal
from baseloci.ratgeom import Cone, Fan, det


@pytest.mark.parametrize("gens, d", [
    ([(1, 0), (0, 1)], 1),
    ([(1, 0), (1, 2)], 2),
    # exhaustive semigroup-membership scan (tests/oracles/generate.py)
    ([(1, 0), (1, 3)], 3),
    ([(1, 0, 0), (0, 1, 0), (1, 1, 2)], 2),
])
def test_subsemigroup_bound(gens, d):
    assert multiple_in_subsemigroup_bound(Cone(gens)) == d


def test_subsemigroup_bound_caps():
    with pytest.raises(DimensionCapError):
        multiple_in_subsemigroup_bound(Cone([(1, 0, 0, 0), (0, 1, 0, 0)]))


@pytest.mark.parametrize("degrees, d", [([1], 1), ([1, 1, 1], 1), ([2, 3], 6), ([5], 5), ([2, 4], 4)])
def test_dim_one_period(degrees, d):
    assert dim_one_period(degrees) == d


def test_dim_one_period_rejects_zero():
    with pytest.raises(InputError):
        dim_one_period([0, 2])


def _smooth(fan):
    return all(abs(det([fan.rays[i] for i in c])) == 1 for c in fan.cones)


def test_maximal_power_system():
    s = load_fixture("maxpower")
    fan, d = find_refinement_and_d(s)
    assert d == 1 and len(fan.cones) == 1
    assert s.ideal((3,)) == MonomialIdeal.maximal_power(2, 6)


def test_wall_fixture_gets_wall_ray():
    s = load_fixture("diagonal-wall")
    fan, d = find_refinement_and_d(s)
    assert d == 1 and (1, 1) in fan.rays and _smooth(fan)


def test_half_cone_needs_period_two():
    # direct enumeration + floating LP closures: fails for d = 1, holds for d = 2
    s = load_fixture("half-cone")
    fan, d = find_refinement_and_d(s)
    assert d == 2 and _smooth(fan)
    assert not all(verify_product_identity(s, 1, fan.cone(c))[0] for c in fan.cones)


def test_toric_base_ideal_system():
    s = load_fixture("chamber5-base")
    fan, d = find_refinement_and_d(s)
    assert d == 1
    assert graded_limit_order(s, d) == 1


def test_refinement_refines_given_fan():
    s = load_fixture("maxpower")
    s2 = GradedMonomialSystem(Cone([(1, 0), (0, 1)]), 2, rees=[((1, 0), (1, 0)), ((0, 1), (0, 1))])
    given = Fan([(1, 0), (0, 1), (1, 2)], [(0, 2), (1, 2)])
    fan, d = find_refinement_and_d(s2, fan=given)
    assert set(given.rays) <= set(fan.rays)
    for c in fan.cones:
        mid = tuple(sum(fan.rays[i][k] for i in c) for k in range(2))
        assert given.contains(mid)
    assert s.rank == 1


def test_broken_gradedness_gives_witness():
    s = GradedMonomialSystem(Cone([(1,)]), 1, rule=lambda m: MonomialIdeal([(m[0] ** 2,)], 1))
    ok, witness = verify_product_identity(s, 1, Cone([(1,)]), 4)
    assert not ok and witness == ("inclusion", (2,))
    assert check_inclusion(s, 1, Cone([(1,)]), 4) == (False, (2,))
    assert s.check_graded([(1,), (2,)]) == ((1,), (1,))


@pytest.mark.parametrize("name", ["maxpower", "diagonal-wall", "half-cone", "chamber5-base"])
def test_inclusion_always_holds(name):
    s = load_fixture(name)
    fan, d = find_refinement_and_d(s)
    for c in fan.cones:
        for dd in (1, 2, 3):
            assert check_inclusion(s, dd, fan.cone(c), 6)[0]


def test_bad_rees_generator():
    with pytest.raises(InputError):
        GradedMonomialSystem(Cone([(1, 0), (1, 2)]), 2, rees=[((0, 1), (1, 0))])


def test_graded_limit_with_weights():
    s = load_fixture("maxpower")
    assert graded_limit_order(s, 1, weights=(1, 2)) == 2
    assert graded_limit_order(s, 2) == Fraction(4, 2)
