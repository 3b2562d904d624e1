import random
from fractions import Fraction

import pytest

from baseloci import toric as T
from baseloci.catalog import cutkosky_function, cutkosky_ord_asym, cutkosky_point
from baseloci.convex_core import (ConeFunction, CubeRegion, Interval, certified_cube,
                                  check_homogeneous, check_subadditive, extend_continuously,
                                  homogeneity_failure, lipschitz_bound, split_cube,
                                  subadditivity_failure)
from baseloci.errors import DomainError, InputError, StreamStalledError
from baseloci.models import load_fixture

QUADRANT = lambda v: all(t > 0 for t in v)
BASIS = [(2, 1), (1, 2)]


def zero_function():
    return ConeFunction(lambda v: Fraction(0), QUADRANT, BASIS)


@pytest.fixture(scope="module")
def bl2():
    return load_fixture("blowup2")


@pytest.fixture(scope="module")
def ord_e1(bl2):
    # ord_{E1} on the two-point blow-up in coordinates (H, E1, E2); ample basis around 3H-E1-E2
    return T.order_function(bl2, (1, 1), [(3, -1, -1), (4, -1, -1), (4, -1, -2)])


def test_constructor_checks():
    with pytest.raises(InputError, match="vanish"):
        ConeFunction(lambda v: sum(v), QUADRANT, BASIS)
    with pytest.raises(InputError, match="basis"):
        ConeFunction(lambda v: 0, QUADRANT, [(1, 1), (2, 2)])
    with pytest.raises(InputError, match="outside"):
        ConeFunction(lambda v: 0, QUADRANT, [(1, 0), (0, 1)])
    with pytest.raises(DomainError):
        zero_function()((-1, 1))


def test_homogeneity_checks(ord_e1):
    pts = [(2, 1, -1), (3, 2, -1), (5, 1, -2)]
    assert check_homogeneous(ord_e1, [(p, q) for p in pts for q in (2, Fraction(1, 3))])
    sq = ConeFunction(lambda v: (v[0] - v[1]) ** 2, QUADRANT, BASIS, check=False)
    assert not check_homogeneous(sq, [((2, 1), 2)])
    assert homogeneity_failure(sq, [((2, 1), 2)]) == ((2, 1), 2)


def test_volume_is_homogeneous(bl2):
    def vol(v):
        return T.volume(bl2, bl2.combination(bl2.basis, v))
    for v in [(3, -1, -1), (5, -2, -1), (3, 2, 2)]:
        for q in (2, 3):
            assert vol(tuple(q * t for t in v)) == q * q * vol(v)


def test_subadditivity_checks(bl2, ord_e1):
    rng = random.Random(0)
    pts = []
    while len(pts) < 8:
        p = (rng.randint(2, 6), rng.randint(-2, 3), rng.randint(-3, 0))
        if T.is_big(bl2, bl2.combination(bl2.basis, p)):
            pts.append(p)
    assert check_subadditive(ord_e1, [(p, q) for p in pts for q in pts])
    lin = ConeFunction(lambda v: v[0] - v[1], QUADRANT, BASIS, check=False)
    assert check_subadditive(lin, [((1, 2), (3, 1))])
    # min is superadditive, strictly so on this pair; -min is subadditive
    pair = ((1, 3), (3, 1))
    mn = ConeFunction(lambda v: min(v), QUADRANT, BASIS, check=False)
    assert subadditivity_failure(mn, [pair]) == pair
    assert not check_subadditive(mn, [pair])
    assert check_subadditive(ConeFunction(lambda v: -min(v), QUADRANT, BASIS, check=False), [pair])


def test_lipschitz_zero():
    f = zero_function()
    cube = CubeRegion(f, (3, 3), (4, 4), 2)
    assert lipschitz_bound(f, cube) == 0


def test_lipschitz_chamber_formula(ord_e1):
    # in chamber 1 ord_E1 = -beta1 = coefficient of E1; corner value by the closed form
    cube = certified_cube(ord_e1, ord_e1.to_point((1, 1, 1)))
    assert cube is not None
    corner = ord_e1.to_point([c - cube.delta for c in cube.lo])
    expected = max(corner[1], 0) / cube.delta
    assert lipschitz_bound(ord_e1, cube) == expected
    scaled = cube.scaled(3)
    assert lipschitz_bound(ord_e1, scaled) == lipschitz_bound(ord_e1, cube)


def test_cube_invariants():
    f = zero_function()
    with pytest.raises(InputError, match="delta"):
        CubeRegion(f, (2, 2), (5, 3), 2)
    with pytest.raises(InputError, match="shifted"):
        CubeRegion(f, (1, 1), (2, 2), 2)
    cubes = split_cube(f, (4, 4), (7, 5), 2)
    assert all(not c.problems() for c in cubes) and len(cubes) == 2


def test_lipschitz_holds_on_sampled_pairs(ord_e1):
    rng = random.Random(1)
    cube = certified_cube(ord_e1, ord_e1.to_point((2, 1, 1)))
    M = lipschitz_bound(ord_e1, cube)
    for _ in range(40):
        u = [cube.lo[i] + (cube.hi[i] - cube.lo[i]) * Fraction(rng.randint(0, 20), 20) for i in range(3)]
        v = [cube.lo[i] + (cube.hi[i] - cube.lo[i]) * Fraction(rng.randint(0, 20), 20) for i in range(3)]
        x1, x2 = ord_e1.to_point(u), ord_e1.to_point(v)
        assert abs(ord_e1(x1) - ord_e1(x2)) <= M * max(abs(a - b) for a, b in zip(u, v))


def test_extend_rational_point(ord_e1):
    iv = extend_continuously(ord_e1, (3, 1, -1), Fraction(1, 100))
    assert iv.lo == iv.hi == ord_e1((3, 1, -1))


def test_extend_cutkosky():
    f = cutkosky_function()
    a = cutkosky_ord_asym(0)

    def stream(base):
        j = 1
        while True:
            e = Fraction(1, base ** j)
            yield cutkosky_point(e), e
            j += 1

    eps = Fraction(1, 1000)
    i1 = extend_continuously(f, stream(10), eps)
    i2 = extend_continuously(f, stream(7), eps)
    assert i1.width <= eps and i2.width <= eps
    assert i1.contains(a) and i2.contains(a)
    assert i1.overlaps(i2)
    assert float(i1.lo) < 0.887059 < float(i1.hi)


def test_extend_stalls():
    f = cutkosky_function()
    with pytest.raises(StreamStalledError):
        extend_continuously(f, iter([(cutkosky_point(Fraction(1, 2)), Fraction(1, 2))]), Fraction(1, 10 ** 6))


def test_interval():
    iv = Interval(Fraction(1), Fraction(2))
    assert iv.width == 1 and iv.contains(Fraction(3, 2)) and not iv.contains(3)
