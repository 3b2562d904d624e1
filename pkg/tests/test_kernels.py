import random

import pytest

from baseloci import _kernels
from baseloci._kernels import _pylattice

compiled = pytest.importorskip("baseloci._kernels._lattice")


def _random_system(rng, n):
    A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(1, 5))]
    b = [rng.randint(-8, 2) for _ in A]
    lo = [rng.randint(-5, 0) for _ in range(n)]
    hi = [rng.randint(0, 5) for _ in range(n)]
    return A, b, lo, hi


@pytest.mark.parametrize("seed", range(40))
def test_backends_agree(seed):
    rng = random.Random(seed)
    A, b, lo, hi = _random_system(rng, rng.randint(1, 3))
    w = [rng.randint(-4, 4) for _ in lo]
    assert compiled.enumerate_points(A, b, lo, hi) == _pylattice.enumerate_points(A, b, lo, hi)
    assert compiled.count_points(A, b, lo, hi) == _pylattice.count_points(A, b, lo, hi)
    assert compiled.min_dot(A, b, lo, hi, w) == _pylattice.min_dot(A, b, lo, hi, w)
    assert compiled.first_point(A, b, lo, hi) == _pylattice.first_point(A, b, lo, hi)


def test_brute_force_agreement():
    from itertools import product
    A, b, lo, hi = [[1, 1], [-1, 2]], [-2, -3], [-3, -3], [3, 3]
    pts = [u for u in product(range(-3, 4), repeat=2)
           if all(sum(a * x for a, x in zip(row, u)) >= r for row, r in zip(A, b))]
    assert _kernels.enumerate_points(A, b, lo, hi) == [tuple(u) for u in pts]
    assert _kernels.count_points(A, b, lo, hi) == len(pts)


def test_huge_inputs_use_python_path():
    big = 1 << 70
    A, b = [[1], [-1]], [big, -big - 2]
    assert _kernels.count_points(A, b, [big], [big + 5]) == 3
    assert _kernels.first_point(A, b, [big], [big + 5]) == (big,)
