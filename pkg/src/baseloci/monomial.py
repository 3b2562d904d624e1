"""Monomial ideals, their Newton polyhedra, and the Arnold and Samuel multiplicities.

A monomial ideal is stored by its minimal exponent vectors.  The Newton
polyhedron is ``conv(exponents) + R^n_{>=0}``; integral closure, the log
canonical threshold (through Howald's formula) and the Samuel multiplicity of
a finite-colength ideal are all read off from it.
"""

from fractions import Fraction
from itertools import product
from math import factorial

from .errors import BaselociError
from .ratgeom.cones import Cone
from .ratgeom.linalg import qvec
from .ratgeom.lp import linprog
from .ratgeom.polyhedra import Polyhedron, polytope_volume


def _minimal(points):
    pts = sorted(set(tuple(p) for p in points), key=lambda p: (sum(p), p))
    keep = []
    for p in pts:
        if not any(all(a <= b for a, b in zip(q, p)) for q in keep):
            keep.append(p)
    return sorted(keep)


class MonomialIdeal:
    """An ideal of ``k[x_1..x_n]`` generated by monomials."""

    def __init__(self, generators, nvars=None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for the zero ideal")
            nvars = len(gens[0])
        if any(len(g) != nvars or min(g, default=0) < 0 for g in gens):
            raise ValueError("exponents must be non-negative vectors of length %d" % nvars)
        self.nvars = nvars
        self.generators = tuple(_minimal(gens))
        self._vertices = None

    @classmethod
    def unit(cls, nvars):
        return cls([(0,) * nvars], nvars)

    @classmethod
    def zero(cls, nvars):
        return cls([], nvars)

    @classmethod
    def maximal_power(cls, nvars, c):
        """``(x_1, ..., x_n)^c``."""
        return cls(_compositions(c, nvars), nvars)

    def __repr__(self):
        return "MonomialIdeal(%s)" % (list(self.generators),)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.nvars == other.nvars and \
            self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @property
    def is_zero(self):
        return not self.generators

    @property
    def is_unit(self):
        return self.generators == ((0,) * self.nvars,)

    def contains_monomial(self, u):
        return any(all(a <= b for a, b in zip(g, u)) for g in self.generators)

    def __le__(self, other):
        """Containment ``self ⊆ other``."""
        return all(other.contains_monomial(g) for g in self.generators)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.nvars)
        return MonomialIdeal([tuple(a + b for a, b in zip(g, h))
                              for g in self.generators for h in other.generators], self.nvars)

    def __add__(self, other):
        return MonomialIdeal(self.generators + other.generators, self.nvars)

    def power(self, k):
        out = MonomialIdeal.unit(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def order(self):
        """Least total degree of a generator (infinite for the zero ideal)."""
        if self.is_zero:
            return float("inf")
        return min(sum(g) for g in self.generators)

    def newton_vertices(self):
        if self._vertices is None:
            self._vertices = newton_vertices(self.generators, self.nvars)
        return self._vertices

    def same_newton_polyhedron(self, other):
        """Equal integral closures, decided by comparing Newton vertex sets."""
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.newton_vertices() == other.newton_vertices()

    @property
    def has_finite_colength(self):
        n = self.nvars
        for i in range(n):
            if not any(all(g[j] == 0 for j in range(n) if j != i) for g in self.generators):
                return False
        return True


def _compositions(total, parts):
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def _lower_hull_2d(points):
    pts = sorted(set((Fraction(p[0]), Fraction(p[1])) for p in points))
    # staircase: keep points whose y strictly drops as x grows
    stair = []
    for p in pts:
        if not stair or p[1] < stair[-1][1]:
            stair.append(p)
    hull = []
    for p in stair:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless the turn is strictly convex
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_vertices(points, nvars):
    """Vertices of ``conv(points) + R^n_{>=0}`` in lexicographic order."""
    pts = [qvec(p) for p in points]
    if not pts:
        return []
    # only componentwise-minimal points can be vertices
    pts = sorted(set(pts))
    minimal = [p for p in pts if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts)]
    if nvars == 1:
        return [min(minimal)]
    if nvars == 2:
        return sorted(_lower_hull_2d(minimal))
    out = []
    for p in minimal:
        others = [q for q in minimal if q != p]
        if not others or not _in_newton(p, others, nvars):
            out.append(p)
    return sorted(out)


def _in_newton(u, points, nvars):
    """LP test: is ``u`` in ``conv(points) + R^n_{>=0}``?"""
    m = len(points)
    ge = [([-points[j][i] for j in range(m)], -u[i]) for i in range(nvars)]
    eq = [([1] * m, 1)]
    return linprog([0] * m, ge=ge, eq=eq, nonneg=[True] * m).optimal


def newton_halfspaces(points, nvars):
    """Inequalities ``a.u >= b`` describing the Newton polyhedron of ``points``."""
    V = newton_vertices(points, nvars)
    lifted = [tuple(v) + (Fraction(1),) for v in V]
    for i in range(nvars):
        lifted.append(tuple(Fraction(int(i == j)) for j in range(nvars)) + (Fraction(0),))
    cone = Cone(lifted, nvars + 1)
    out = []
    for f in cone.facets():
        a, c = f[:nvars], f[nvars]
        if any(a):
            out.append((a, Fraction(-c)))
    return out


def newton_closure(ideal):
    """Integral closure: the monomials lying in the Newton polyhedron."""
    if ideal.is_zero or ideal.is_unit:
        return ideal
    n = ideal.nvars
    V = ideal.newton_vertices()
    box = [int(max(v[i] for v in V)) for i in range(n)]
    H = newton_halfspaces(ideal.generators, n)
    pts = []
    for u in product(*[range(b + 1) for b in box]):
        if all(sum(a * x for a, x in zip(normal, u)) >= c for normal, c in H):
            pts.append(u)
    return MonomialIdeal(pts, n)


def arnold_from_points(points, nvars):
    """``min { t : t*(1,..,1) in conv(points) + R^n_{>=0} }`` for rational points."""
    pts = [qvec(p) for p in points]
    if not pts:
        raise ValueError("Newton polyhedron of no points")
    m = len(pts)
    # variables: lambda_1..lambda_m >= 0 and t
    ge = []
    for i in range(nvars):
        ge.append(([-p[i] for p in pts] + [1], 0))
    eq = [([1] * m + [0], 1)]
    res = linprog([0] * m + [1], ge=ge, eq=eq, nonneg=[True] * m + [False])
    return res.value


def samuel_from_points(points, nvars):
    """``n! * covolume`` of the Newton polyhedron of rational points."""
    V = newton_vertices(points, nvars)
    for i in range(nvars):
        if not any(all(v[j] == 0 for j in range(nvars) if j != i) for v in V):
            raise BaselociError("Samuel multiplicity needs finite colength "
                                "(no pure power of variable %d)" % (i + 1))
    M = max(max(v) for v in V)
    if M == 0:
        return Fraction(0)
    corners = set()
    for v in V:
        for mask in product((False, True), repeat=nvars):
            corners.add(tuple(M if s else x for s, x in zip(mask, v)))
    inside = polytope_volume(Polyhedron.from_points(sorted(corners)))
    return factorial(nvars) * (M ** nvars - inside)


def arnold_mult(ideal):
    """Arnold multiplicity ``1/lct`` of a monomial ideal, via Howald's formula."""
    if ideal.is_zero:
        raise BaselociError("Arnold multiplicity of the zero ideal")
    return arnold_from_points(ideal.generators, ideal.nvars)


def samuel_mult(ideal):
    if ideal.is_zero or not ideal.has_finite_colength:
        raise BaselociError("Samuel multiplicity is only defined for finite colength")
    return samuel_from_points(ideal.generators, ideal.nvars)
