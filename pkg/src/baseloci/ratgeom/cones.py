"""Rational polyhedral cones and fans.

Cones keep both descriptions: primitive integer generators, and (computed on
demand) the linear span equations plus inward facet normals.  Fans are a ray
list with maximal cones given as index tuples.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .. import _kernels
from .linalg import (det, dot, integer_kernel, inverse, nullspace, primitive, qvec, rank,
                     solve_linear)


def _idot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _minors_gcd(vectors):
    k = len(vectors)
    n = len(vectors[0])
    g = 0
    for rows in combinations(range(n), k):
        d = det([[v[r] for v in vectors] for r in rows])
        g = gcd(g, int(d))
    return g


class Cone:
    """The cone generated by a finite list of rational vectors.

    Generators are stored as primitive integer vectors in first-seen order;
    zero vectors are dropped.
    """

    def __init__(self, generators, ambient_dim=None):
        gens = []
        for g in generators:
            g = qvec(g)
            if any(g):
                p = primitive(g)
                if p not in gens:
                    gens.append(p)
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient dimension needed for the zero cone")
            ambient_dim = len(gens[0])
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError("generator dimension mismatch")
        self.generators = tuple(gens)
        self.ambient_dim = ambient_dim
        self._eqs = None
        self._facets = None
        self._rays = None

    def __repr__(self):
        return "Cone(%s)" % (list(self.generators),)

    def __eq__(self, other):
        return isinstance(other, Cone) and self.ambient_dim == other.ambient_dim and \
            sorted(self.rays) == sorted(other.rays) and self.lineality_dim == other.lineality_dim

    def __hash__(self):
        return hash((self.ambient_dim, tuple(sorted(self.rays))))

    @classmethod
    def from_inequalities(cls, ge, eq=(), ambient_dim=None):
        """The cone ``{x : a.x >= 0 for a in ge, a.x == 0 for a in eq}``."""
        ge = [qvec(a) for a in ge]
        eq = [qvec(a) for a in eq]
        n = ambient_dim or len((ge + eq)[0])
        lineality = nullspace(ge + eq, n)
        base_eqs = eq + lineality
        gens = []
        need = n - 1
        rows_all = ge
        seen = set()
        for k in range(0, min(need, len(rows_all)) + 1):
            for sub in combinations(range(len(rows_all)), k):
                rowset = [rows_all[i] for i in sub] + base_eqs
                if not rowset:
                    # no constraints at all: only a line has a one-dimensional solution space
                    ns = [(Fraction(1),)] if n == 1 else []
                elif rank(rowset) != need:
                    continue
                else:
                    ns = nullspace(rowset, n)
                if len(ns) != 1:
                    continue
                r = ns[0]
                for cand in (r, tuple(-x for x in r)):
                    if all(dot(a, cand) >= 0 for a in ge):
                        p = primitive(cand)
                        if p not in seen:
                            seen.add(p)
                            gens.append(p)
        for l in lineality:
            gens.append(primitive(l))
            gens.append(primitive(tuple(-x for x in l)))
        return cls(sorted(gens), n)

    @property
    def dim(self):
        return rank(list(self.generators)) if self.generators else 0

    def span_equations(self):
        """Rational rows ``e`` with ``e.x = 0`` cutting out the linear span."""
        if self._eqs is None:
            if self.generators:
                self._eqs = nullspace([tuple(Fraction(x) for x in g) for g in self.generators])
            else:
                self._eqs = [tuple(Fraction(int(i == j)) for j in range(self.ambient_dim))
                             for i in range(self.ambient_dim)]
        return self._eqs

    def facets(self):
        """Primitive inward normals of the facets, taken inside the span."""
        if self._facets is None:
            eqs = self.span_equations()
            k = self.ambient_dim - len(eqs)
            gens = self.generators
            found = []
            for sub in combinations(range(len(gens)), k - 1) if k >= 1 else ():
                rows = [gens[i] for i in sub]
                if rows and rank(rows) != k - 1:
                    continue
                ns = nullspace(rows + list(eqs), self.ambient_dim)
                if len(ns) != 1:
                    continue
                u = primitive(ns[0])
                vals = [_idot(u, g) for g in gens]
                if all(v >= 0 for v in vals):
                    pass
                elif all(v <= 0 for v in vals):
                    u = tuple(-x for x in u)
                else:
                    continue
                if u not in found and any(_idot(u, g) != 0 for g in gens):
                    found.append(u)
            self._facets = sorted(found)
        return self._facets

    @property
    def lineality_dim(self):
        gens = self.generators
        F = self.facets()
        if not gens:
            return 0
        inside = [g for g in gens if all(_idot(u, g) == 0 for u in F)]
        return rank(inside) if inside else 0

    @property
    def is_pointed(self):
        return self.lineality_dim == 0

    @property
    def rays(self):
        """Extreme rays (only meaningful for pointed cones), in generator order."""
        if self._rays is None:
            F = self.facets()
            eqs = self.span_equations()
            n = self.ambient_dim
            out = []
            for g in self.generators:
                tight = [u for u in F if _idot(u, g) == 0]
                if rank(tight + list(eqs)) == n - 1:
                    out.append(g)
            self._rays = tuple(out)
        return self._rays

    def contains(self, x):
        x = qvec(x)
        if any(dot(e, x) != 0 for e in self.span_equations()):
            return False
        return all(dot(u, x) >= 0 for u in self.facets())

    def contains_in_relative_interior(self, x):
        x = qvec(x)
        if any(dot(e, x) != 0 for e in self.span_equations()):
            return False
        return all(dot(u, x) > 0 for u in self.facets())

    def face_containing(self, x):
        """The smallest face of the cone containing ``x`` in its relative interior."""
        x = qvec(x)
        if not self.contains(x):
            raise ValueError("point not in cone")
        tight = [u for u in self.facets() if dot(u, x) == 0]
        return Cone([g for g in self.generators if all(_idot(u, g) == 0 for u in tight)],
                    self.ambient_dim)

    @property
    def is_simplicial(self):
        return self.is_pointed and len(self.rays) == self.dim

    def multiplicity(self):
        """Index of the sublattice spanned by the rays in the saturated lattice
        of the span; 1 means unimodular."""
        if not self.is_simplicial:
            raise ValueError("multiplicity is defined for simplicial cones")
        if not self.rays:
            return 1
        return _minors_gcd(self.rays)

    @property
    def is_smooth(self):
        return self.is_simplicial and self.multiplicity() == 1

    def lattice_basis(self):
        """Integer basis of the saturated lattice ``span & Z^n``."""
        return integer_kernel(self.span_equations(), self.ambient_dim)

    def coefficients(self, x):
        """Coordinates of ``x`` in the rays of a simplicial cone."""
        cols = self.rays
        A = [tuple(c[i] for c in cols) for i in range(self.ambient_dim)]
        return solve_linear(A, x)

    def parallelepiped_points(self):
        """Lattice points ``sum l_i r_i`` with ``0 <= l_i < 1`` of a simplicial cone."""
        if not self.is_simplicial:
            raise ValueError("parallelepiped of a non-simplicial cone")
        rays = self.rays
        k = len(rays)
        if k == 0:
            return [tuple([0] * self.ambient_dim)]
        B = self.lattice_basis()
        Bm = [tuple(b[i] for b in B) for i in range(self.ambient_dim)]
        Y = [solve_linear(Bm, r) for r in rays]   # rows: rays in lattice coordinates
        Ycols = [[Y[j][i] for j in range(k)] for i in range(k)]
        D = abs(int(det(Ycols)))
        adj = [[int(x * D) for x in row] for row in inverse(Ycols)]  # adj y = D * lambda
        A = []
        b = []
        for row in adj:
            A.append(row)
            b.append(0)
            A.append([-x for x in row])
            b.append(-(D - 1))
        lo = [int(sum(min(0, Ycols[i][j]) for j in range(k))) for i in range(k)]
        hi = [int(sum(max(0, Ycols[i][j]) for j in range(k))) for i in range(k)]
        pts = _kernels.enumerate_points(A, b, lo, hi)
        out = []
        for y in pts:
            out.append(tuple(sum(B[j][i] * y[j] for j in range(k)) for i in range(self.ambient_dim)))
        return sorted(out)


def pulling_triangulation(vectors, order=None):
    """Simplicial cones (as index tuples) triangulating ``cone(vectors)``.

    Pulls the first available vector in ``order`` and recurses on the facets
    not containing it.  Using one global order on every cone of a fan yields a
    triangulation that agrees on shared faces.
    """
    vectors = [tuple(v) for v in vectors]
    if order is None:
        order = list(range(len(vectors)))
    rank_of = {i: r for r, i in enumerate(order)}

    def run(idx):
        idx = sorted(set(idx), key=lambda i: rank_of[i])
        vecs = [vectors[i] for i in idx]
        k = rank(vecs) if vecs else 0
        if k == len(idx):
            return [tuple(sorted(idx))]
        cone = Cone(vecs, len(vectors[0]))
        first = idx[0]
        v = vectors[first]
        pieces = []
        for u in cone.facets():
            if _idot(u, v) == 0:
                continue
            sub = [i for i in idx if _idot(u, vectors[i]) == 0]
            for t in run(sub):
                pieces.append(tuple(sorted(t + (first,))))
        return pieces

    return sorted(set(run(range(len(vectors)))))


def hilbert_basis(cone):
    """The minimal generating set of the semigroup ``cone & Z^n``."""
    if not isinstance(cone, Cone):
        cone = Cone(cone)
    if not cone.is_pointed:
        raise ValueError("Hilbert basis requires a strongly convex cone")
    rays = list(cone.rays)
    if not rays:
        return []
    cand = set(rays)
    for simplex in pulling_triangulation(rays):
        piece = Cone([rays[i] for i in simplex], cone.ambient_dim)
        for p in piece.parallelepiped_points():
            if any(p):
                cand.add(p)
    cand = sorted(cand)
    basis = []
    for x in cand:
        reducible = False
        for y in cand:
            if y != x and cone.contains(tuple(a - b for a, b in zip(x, y))):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return basis


class Fan:
    """A fan given by primitive rays and maximal cones (tuples of ray indices)."""

    def __init__(self, rays, cones):
        self.rays = [tuple(int(x) for x in primitive(r)) for r in rays]
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("repeated ray")
        self.cones = sorted(set(tuple(sorted(c)) for c in cones))
        self.dim = len(self.rays[0]) if self.rays else 0

    @classmethod
    def from_cones(cls, cones):
        rays = []
        out = []
        for c in cones:
            if not isinstance(c, Cone):
                c = Cone(c)
            idx = []
            for r in c.rays:
                if r not in rays:
                    rays.append(r)
                idx.append(rays.index(r))
            out.append(tuple(idx))
        return cls(rays, out)

    def __repr__(self):
        return "Fan(%d rays, %d cones)" % (len(self.rays), len(self.cones))

    def cone(self, c):
        return Cone([self.rays[i] for i in c], self.dim)

    def maximal_cones(self):
        return [self.cone(c) for c in self.cones]

    def ray_index(self, r):
        return self.rays.index(tuple(primitive(r)))

    @property
    def is_simplicial(self):
        return all(self.cone(c).is_simplicial for c in self.cones)

    @property
    def is_smooth(self):
        return all(self.cone(c).is_smooth for c in self.cones)

    def contains(self, x):
        return any(self.cone(c).contains(x) for c in self.cones)

    def cone_containing(self, x):
        """Ray indices of the smallest cone of the fan containing ``x``, or ``None``."""
        best = None
        for c in self.cones:
            cone = self.cone(c)
            if cone.contains(x):
                face = cone.face_containing(x)
                idx = tuple(sorted(self.rays.index(r) for r in face.rays))
                if best is None or len(idx) < len(best):
                    best = idx
        return best

    def faces(self):
        """Every cone of a simplicial fan, as sorted index tuples (the zero cone included)."""
        out = set()
        for c in self.cones:
            for k in range(len(c) + 1):
                out.update(combinations(c, k))
        return sorted(out, key=lambda t: (len(t), t))

    @property
    def is_complete(self):
        """True when the maximal cones are full-dimensional and every facet is
        shared by exactly two of them."""
        n = self.dim
        count = {}
        for c in self.cones:
            cone = self.cone(c)
            if cone.dim != n:
                return False
            for u in cone.facets():
                key = tuple(sorted(i for i in c if _idot(u, self.rays[i]) == 0))
                count[key] = count.get(key, 0) + 1
        return bool(self.cones) and all(v == 2 for v in count.values())

    def refines(self, other):
        """Every cone of ``self`` lies in a cone of ``other`` and the supports agree."""
        for c in self.cones:
            cone = self.cone(c)
            if not any(all(o.contains(r) for r in cone.rays) for o in other.maximal_cones()):
                return False
        for c in other.cones:
            for r in other.cone(c).rays:
                if not self.contains(r):
                    return False
        return True

    def triangulated(self):
        """A simplicial refinement using no new rays."""
        pieces = []
        for c in self.cones:
            local = list(c)
            for simplex in pulling_triangulation([self.rays[i] for i in local],
                                                 order=sorted(range(len(local)), key=lambda j: local[j])):
                pieces.append(tuple(local[j] for j in simplex))
        return Fan(self.rays, pieces)

    def star_subdivide(self, v):
        """Stellar subdivision of a simplicial fan at the lattice vector ``v``."""
        v = tuple(primitive(v))
        if v in self.rays:
            return self
        tau = self.cone_containing(v)
        if tau is None:
            raise ValueError("vector %s outside the fan support" % (v,))
        rays = self.rays + [v]
        new = len(self.rays)
        cones = []
        for c in self.cones:
            if set(tau) <= set(c):
                for t in tau:
                    cones.append(tuple(sorted([i for i in c if i != t] + [new])))
            else:
                cones.append(c)
        return Fan(rays, cones)


def smooth_refine(fan, max_dim=3):
    """A refinement of ``fan`` into unimodular cones with the same support.

    Each step inserts a lattice point from the half-open parallelepiped of the
    worst cone; every cone it touches gets strictly smaller multiplicity."""
    if fan.dim > max_dim:
        raise ValueError("smooth refinement is implemented up to dimension %d" % max_dim)
    if not isinstance(fan, Fan):
        fan = Fan.from_cones(fan)
    f = fan.triangulated()
    while True:
        worst = None
        for c in f.cones:
            m = f.cone(c).multiplicity()
            if m > 1 and (worst is None or m > worst[0]):
                worst = (m, c)
        if worst is None:
            return f
        cone = f.cone(worst[1])
        pts = [p for p in cone.parallelepiped_points() if any(p)]
        p = min(pts, key=lambda q: (sum(abs(x) for x in q), q))
        f = f.star_subdivide(p)
