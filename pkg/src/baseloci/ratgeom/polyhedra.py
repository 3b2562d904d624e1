"""Polyhedra ``{u : <u, v_i> >= c_i}`` with integer normals and rational constants."""

from fractions import Fraction
from itertools import combinations
from math import ceil, factorial, floor

from .. import _kernels
from .cones import Cone, pulling_triangulation
from .linalg import as_fraction, det, dot, lcm, primitive, qvec, rank, solve_linear
from .lp import linprog


class Polyhedron:
    """Intersection of half-spaces ``<u, normals[i]> >= constants[i]``."""

    def __init__(self, normals, constants, ambient_dim=None, bounded=None):
        normals = [tuple(int(x) for x in v) for v in normals]
        constants = [as_fraction(c) for c in constants]
        if len(normals) != len(constants):
            raise ValueError("%d normals but %d constants" % (len(normals), len(constants)))
        if ambient_dim is None:
            if not normals:
                raise ValueError("ambient dimension needed without constraints")
            ambient_dim = len(normals[0])
        if any(len(v) != ambient_dim for v in normals):
            raise ValueError("normal dimension mismatch")
        self.normals = tuple(normals)
        self.constants = tuple(constants)
        self.ambient_dim = ambient_dim
        self._vertices = None
        self._empty = None
        # callers that know the normals positively span (complete fans) pass bounded=True
        self._bounded = bounded

    def __repr__(self):
        return "Polyhedron(%d half-spaces in dimension %d)" % (len(self.normals), self.ambient_dim)

    @classmethod
    def from_points(cls, points):
        """The convex hull of finitely many rational points."""
        pts = [qvec(p) for p in points]
        if not pts:
            raise ValueError("hull of no points")
        n = len(pts[0])
        lifted = []
        for p in pts:
            den = 1
            for x in p:
                den = lcm(den, x.denominator)
            lifted.append(tuple(x * den for x in p) + (Fraction(den),))
        cone = Cone(lifted, n + 1)
        normals, constants = [], []

        def add(row):
            # row . (u, 1) >= 0  with row = (a, b)  <=>  a.u >= -b
            row = primitive(row) if any(row) else None
            if row is None:
                return
            a, b = row[:n], row[n]
            if not any(a):
                return
            normals.append(a)
            constants.append(-Fraction(b))

        for u in cone.facets():
            add(u)
        for e in cone.span_equations():
            add(e)
            add(tuple(-x for x in e))
        return cls(normals, constants, n)

    def contains(self, u):
        u = qvec(u)
        return all(dot(v, u) >= c for v, c in zip(self.normals, self.constants))

    def scaled(self, p):
        p = as_fraction(p)
        if p <= 0:
            raise ValueError("scale factor must be positive")
        return Polyhedron(self.normals, [c * p for c in self.constants], self.ambient_dim,
                          bounded=self._bounded)

    def is_empty(self):
        if self._empty is None and self._bounded:
            self.vertices()
        if self._empty is None:
            if not self.normals:
                self._empty = False
            else:
                res = linprog([0] * self.ambient_dim, ge=list(zip(self.normals, self.constants)))
                self._empty = not res.optimal
        return self._empty

    def is_bounded(self):
        """Bounded iff the normals positively span the whole space (or the set is empty)."""
        if self._bounded is None:
            self._bounded = self._positively_spanning()
        return self._bounded or self.is_empty()

    def _positively_spanning(self):
        n = self.ambient_dim
        if n == 0:
            return True
        if not self.normals or rank(list(self.normals)) < n:
            return False
        m = len(self.normals)
        eq = [([v[i] for v in self.normals], 0) for i in range(n)]
        ge = [([int(j == k) for j in range(m)], 1) for k in range(m)]
        return linprog([0] * m, ge=ge, eq=eq).optimal

    def vertices(self):
        """Vertices in lexicographic order, by exhaustive search over constraint subsets."""
        if self._vertices is None:
            n = self.ambient_dim
            out = set()
            # a bounded polyhedron is empty exactly when it has no vertex
            if self._bounded or not self.is_empty():
                if n == 0:
                    if self.contains(()):
                        out.add(())
                for sub in combinations(range(len(self.normals)), n) if n else ():
                    A = [self.normals[i] for i in sub]
                    if rank(A) != n:
                        continue
                    u = solve_linear(A, [self.constants[i] for i in sub])
                    if u is not None and self.contains(u):
                        out.add(u)
            self._vertices = sorted(out)
            if self._bounded:
                self._empty = not out
        return self._vertices

    def affine_dim(self):
        V = self.vertices()
        if not V:
            return -1
        return rank([tuple(a - b for a, b in zip(v, V[0])) for v in V[1:]]) if len(V) > 1 else 0

    def bounding_box(self):
        """Integer box containing every lattice point; requires boundedness."""
        V = self.vertices()
        n = self.ambient_dim
        lo = [ceil(min(v[i] for v in V)) for i in range(n)]
        hi = [floor(max(v[i] for v in V)) for i in range(n)]
        return lo, hi

    def _integer_system(self):
        # <u, v> >= c on integer u is equivalent to <u, v> >= ceil(c)
        return [list(v) for v in self.normals], [ceil(c) for c in self.constants]


def _require_bounded(p):
    if not p.is_bounded():
        raise ValueError("polyhedron is unbounded")


def lattice_points(p):
    """Integer points of a bounded polyhedron, in lexicographic order."""
    _require_bounded(p)
    if p.is_empty():
        return []
    lo, hi = p.bounding_box()
    A, b = p._integer_system()
    return _kernels.enumerate_points(A, b, lo, hi)


def count_lattice_points(p):
    _require_bounded(p)
    if p.is_empty():
        return 0
    lo, hi = p.bounding_box()
    A, b = p._integer_system()
    return _kernels.count_points(A, b, lo, hi)


def lattice_min(p, w):
    """Minimum of ``<u, w>`` over integer points ``u`` of ``p`` (``None`` if there are none)."""
    _require_bounded(p)
    if p.is_empty():
        return None
    lo, hi = p.bounding_box()
    A, b = p._integer_system()
    return _kernels.min_dot(A, b, lo, hi, [int(x) for x in w])


def first_lattice_point(p, extra=()):
    """Lexicographically first integer point of ``p`` that also satisfies the
    integer constraints ``extra`` (pairs ``(a, r)`` meaning ``a.u >= r``)."""
    _require_bounded(p)
    if p.is_empty():
        return None
    lo, hi = p.bounding_box()
    A, b = p._integer_system()
    for a, r in extra:
        A.append(list(a))
        b.append(r)
    return _kernels.first_point(A, b, lo, hi)


def minimize_linear(p, w):
    """Exact minimum of ``<u, w>`` over ``p``."""
    w = qvec(w)
    if len(w) != p.ambient_dim:
        raise ValueError("functional has the wrong dimension")
    if p.is_empty():
        raise ValueError("minimising over an empty polyhedron")
    if p.is_bounded():
        return min(dot(v, w) for v in p.vertices())
    res = linprog(w, ge=list(zip(p.normals, p.constants)))
    if res.status == "unbounded":
        raise ValueError("functional is unbounded below on the polyhedron")
    return res.value


def polytope_volume(p):
    """Euclidean volume of a bounded polyhedron by triangulating its vertices."""
    _require_bounded(p)
    n = p.ambient_dim
    V = p.vertices()
    if p.affine_dim() < n:
        return Fraction(0)
    lifted = []
    scale = []
    for v in V:
        w = tuple(v) + (Fraction(1),)
        prim = primitive(w)
        lifted.append(prim)
        scale.append(Fraction(prim[-1]))  # prim = scale * (v, 1)
    total = Fraction(0)
    for simplex in pulling_triangulation(lifted):
        d = abs(det([lifted[i] for i in simplex]))
        s = Fraction(1)
        for i in simplex:
            s *= scale[i]
        total += d / s
    return total / factorial(n)


def halfspaces_of_box(lo, hi):
    n = len(lo)
    normals, constants = [], []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        normals.append(tuple(e))
        constants.append(as_fraction(lo[i]))
        normals.append(tuple(-x for x in e))
        constants.append(-as_fraction(hi[i]))
    return Polyhedron(normals, constants, n)


__all__ = ["Polyhedron", "lattice_points", "count_lattice_points", "lattice_min",
           "first_lattice_point", "minimize_linear", "polytope_volume", "halfspaces_of_box"]
