"""Homogeneous subadditive functions on open cones and their continuity.

A :class:`ConeFunction` is sampled at rational points only.  Because it is
homogeneous, subadditive and vanishes on a basis ``a_1..a_n`` of the domain,
it is Lipschitz on every cube ``K = prod [c_i, d_i]`` (in ``a``-coordinates,
max-norm) with constant ``f(sum (c_i - delta) a_i) / delta`` once the sides of
``K`` are shorter than ``delta`` and ``K - delta * sum a_i`` stays in the
domain.  That constant certifies values at irrational points.
"""

from fractions import Fraction
from itertools import product

from .errors import DomainError, InputError, StreamStalledError
from .ratgeom.linalg import as_fraction, det, qvec, solve_linear
from .surds import QuadraticSurd


def _lower(v):
    return v if isinstance(v, QuadraticSurd) else Fraction(v)


class ConeFunction:
    """``evaluator`` on the open cone cut out by ``domain`` (a predicate on
    rational points), with an ample basis on which it vanishes."""

    def __init__(self, evaluator, domain, ample_basis, name="f", check=True):
        self.evaluator = evaluator
        self.domain = domain
        self.basis = [qvec(a) for a in ample_basis]
        self.dim = len(self.basis)
        self.name = name
        if any(len(a) != self.dim for a in self.basis) or det(self.basis) == 0:
            raise InputError("ample basis must be a basis of the ambient space")
        if check:
            for a in self.basis:
                if not domain(a):
                    raise InputError("ample basis vector %s outside the domain" % (list(map(str, a)),))
                if evaluator(a) != 0:
                    raise InputError("function does not vanish on the ample basis vector %s"
                                     % (list(map(str, a)),))

    def __call__(self, x):
        x = qvec(x)
        if not self.domain(x):
            raise DomainError("point %s outside the domain of %s" % (list(map(str, x)), self.name))
        return _lower(self.evaluator(x))

    def to_point(self, u):
        """Point ``sum u_i a_i`` from ample-basis coordinates."""
        u = qvec(u)
        return tuple(sum((ui * a[k] for ui, a in zip(u, self.basis)), Fraction(0))
                     for k in range(self.dim))

    def coordinates(self, x):
        A = [tuple(a[k] for a in self.basis) for k in range(self.dim)]
        return solve_linear(A, qvec(x))

    def norm(self, x):
        """Max-norm of ``x`` in ample-basis coordinates."""
        return max(abs(c) for c in self.coordinates(x))


class CubeRegion:
    """``prod [lo_i, hi_i]`` in ample-basis coordinates with margin ``delta``."""

    def __init__(self, f, lo, hi, delta):
        self.f = f
        self.lo = qvec(lo)
        self.hi = qvec(hi)
        self.delta = as_fraction(delta)
        problems = self.problems()
        if problems:
            raise InputError("invalid cube: " + "; ".join(problems))

    def problems(self):
        f, out = self.f, []
        if len(self.lo) != f.dim or len(self.hi) != f.dim:
            return ["cube dimension differs from the function's"]
        if self.delta <= 0:
            out.append("margin must be positive")
        for i, (c, d) in enumerate(zip(self.lo, self.hi)):
            if c > d:
                out.append("side %d is empty" % i)
            elif d - c >= self.delta:
                out.append("side %d has length %s >= delta" % (i, d - c))
        if out:
            return out
        # the domain is convex, so checking the vertices of the shifted cube
        # (which contains the cube itself once sides are shorter than delta) suffices
        for corner in product(*zip(self.lo, self.hi)):
            if not f.domain(f.to_point(corner)):
                out.append("corner %s outside the domain" % (list(map(str, corner)),))
                break
            shifted = [u - self.delta for u in corner]
            if not f.domain(f.to_point(shifted)):
                out.append("shifted corner %s outside the domain" % (list(map(str, shifted)),))
                break
        return out

    def contains(self, x):
        u = self.f.coordinates(x)
        return all(c <= t <= d for c, t, d in zip(self.lo, u, self.hi))

    def corners(self):
        return [self.f.to_point(c) for c in product(*zip(self.lo, self.hi))]

    def scaled(self, q):
        q = as_fraction(q)
        return CubeRegion(self.f, [c * q for c in self.lo], [d * q for d in self.hi], self.delta * q)


def split_cube(f, lo, hi, delta):
    """Cover ``prod [lo_i, hi_i]`` by cubes whose sides are shorter than ``delta``."""
    lo, hi, delta = qvec(lo), qvec(hi), as_fraction(delta)
    axes = []
    for c, d in zip(lo, hi):
        pieces = int((d - c) / delta) + 1
        step = (d - c) / pieces
        axes.append([(c + k * step, c + (k + 1) * step) for k in range(pieces)])
    return [CubeRegion(f, [s[0] for s in box], [s[1] for s in box], delta)
            for box in product(*axes)]


def homogeneity_failure(f, samples):
    """First ``(x, q)`` with ``f(q x) != q f(x)``, or ``None``."""
    for x, q in samples:
        q = as_fraction(q)
        x = qvec(x)
        if f(tuple(q * t for t in x)) != q * f(x):
            return (x, q)
    return None


def subadditivity_failure(f, samples):
    """First pair ``(x, y)`` with ``f(x + y) > f(x) + f(y)``, or ``None``."""
    for x, y in samples:
        x, y = qvec(x), qvec(y)
        if f(tuple(a + b for a, b in zip(x, y))) > f(x) + f(y):
            return (x, y)
    return None


def check_homogeneous(f, samples):
    """``f(q x) == q f(x)`` exactly on every sample ``(x, q)``."""
    return homogeneity_failure(f, samples) is None


def check_subadditive(f, samples):
    """``f(x + y) <= f(x) + f(y)`` on every sample pair."""
    return subadditivity_failure(f, samples) is None


def lipschitz_bound(f, cube):
    """``M_K = f(sum (c_i - delta) a_i) / delta`` for the max-norm in ``a``-coordinates."""
    if cube.problems():
        raise InputError("invalid cube")
    corner = f.to_point([c - cube.delta for c in cube.lo])
    return f(corner) / cube.delta


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, v):
        if isinstance(v, QuadraticSurd):
            return v >= self.lo and v <= self.hi
        return self.lo <= v <= self.hi

    def overlaps(self, other):
        return not (self.hi < other.lo or other.hi < self.lo)

    def __repr__(self):
        return "Interval(%s, %s)" % (self.lo, self.hi)


def _enclose(v, width):
    if isinstance(v, QuadraticSurd):
        return v.rational_bounds(width)
    return v, v


def certified_cube(f, x, min_side=0, tries=64):
    """The largest valid cube centred at ``x`` (ample coordinates) among sides
    ``s, s/2, s/4, ...`` with margin ``2s``; ``None`` if it would be smaller
    than ``min_side``."""
    u = f.coordinates(x)
    side = max(Fraction(1), max(abs(c) for c in u))
    for _ in range(tries):
        if side < min_side:
            return None
        try:
            return CubeRegion(f, [c - side / 2 for c in u], [c + side / 2 for c in u], 2 * side)
        except InputError:
            side /= 2
    return None


def extend_continuously(f, x, eps, max_terms=10000):
    """Certified interval of width ``<= eps`` around the continuous extension at ``x``.

    ``x`` is either a rational point (evaluated directly) or an iterable of
    ``(x_q, err_q)`` pairs: rational points with a bound on the max-norm
    distance (in ample coordinates) to the true point.  A cube is fixed around
    an early approximation; later approximations are consumed until the
    Lipschitz constant of that cube times the error is at most ``eps/4``."""
    eps = as_fraction(eps)
    if eps <= 0:
        raise InputError("eps must be positive")
    if isinstance(x, (tuple, list)) and x and not isinstance(x[0], (tuple, list)):
        lo, hi = _enclose(f(x), eps)
        return Interval(lo, hi)
    cube, M = None, None

    def ball_inside(xq, err):
        u = f.coordinates(xq)
        return all(c + err <= t <= d - err for c, t, d in zip(cube.lo, u, cube.hi))

    for count, (xq, err) in enumerate(x):
        if count >= max_terms:
            break
        xq, err = qvec(xq), as_fraction(err)
        if not f.domain(xq):
            raise DomainError("approximation %s outside the domain" % (list(map(str, xq)),))
        if cube is None or not ball_inside(xq, err):
            cube = certified_cube(f, xq, min_side=4 * err)
            if cube is None:
                continue
            # a rational upper bound keeps the interval endpoints rational
            M = _enclose(lipschitz_bound(f, cube), 1)[1]
        if M * err <= eps / 4:
            lo, hi = _enclose(f(xq), eps / 2)
            return Interval(lo - M * err, hi + M * err)
    raise StreamStalledError("approximation stream ended before reaching precision %s" % eps)
