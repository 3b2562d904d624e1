"""Semigroup-graded systems of monomial ideals and their finite-generation data.

A system assigns to each lattice point ``m`` of a cone ``S`` a monomial ideal
``a_m`` with ``a_0 = (1)`` and ``a_m a_m' ⊆ a_{m+m'}``.  Systems are given by
Rees-algebra generators ``(degree, monomial)`` or by a rule ``m -> ideal``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import DimensionCapError, InputError, VerificationError
from .monomial import MonomialIdeal, newton_closure  # noqa: F401 (re-exported)
from .ratgeom.cones import Cone, Fan, hilbert_basis, smooth_refine
from .ratgeom.linalg import lcm, primitive, solve_linear
from .ratgeom.polyhedra import Polyhedron, first_lattice_point


class GradedMonomialSystem:
    """``m -> a_m`` over the lattice points of ``semigroup`` in ``nvars`` variables."""

    def __init__(self, semigroup, nvars, rees=None, rule=None, name="graded"):
        if (rees is None) == (rule is None):
            raise InputError("give exactly one of rees generators or a rule")
        if not isinstance(semigroup, Cone):
            semigroup = Cone(semigroup)
        if not semigroup.is_pointed:
            raise InputError("semigroup cone must be strongly convex")
        self.semigroup = semigroup
        self.rank = semigroup.ambient_dim
        self.nvars = nvars
        self.name = name
        self.rule = rule
        self.rees = None
        if rees is not None:
            gens = []
            for deg, mono in rees:
                deg = tuple(int(x) for x in deg)
                mono = tuple(int(x) for x in mono)
                if len(deg) != self.rank or len(mono) != nvars:
                    raise InputError("Rees generator %s has the wrong shape" % ((deg, mono),))
                if not any(deg) or not semigroup.contains(deg):
                    raise InputError("Rees degree %s must be a nonzero point of the semigroup" % (deg,))
                gens.append((deg, mono))
            self.rees = tuple(sorted(gens))
        self.ideal = lru_cache(maxsize=None)(self._ideal)

    def __repr__(self):
        return "GradedMonomialSystem(%s, rank %d, %d variables)" % (self.name, self.rank, self.nvars)

    @property
    def rees_degrees(self):
        return sorted(set(d for d, _ in self.rees)) if self.rees else []

    def _ideal(self, m):
        m = tuple(int(x) for x in m)
        if len(m) != self.rank:
            raise InputError("degree %s has the wrong dimension" % (m,))
        if not self.semigroup.contains(m):
            raise InputError("degree %s outside the semigroup" % (m,))
        if not any(m):
            return MonomialIdeal.unit(self.nvars)
        if self.rule is not None:
            out = self.rule(m)
            if not isinstance(out, MonomialIdeal):
                out = MonomialIdeal(out, self.nvars)
            return out
        gens = []
        for deg, mono in self.rees:
            rest = tuple(a - b for a, b in zip(m, deg))
            if not self.semigroup.contains(rest):
                continue
            sub = self.ideal(rest)
            gens.extend(tuple(a + b for a, b in zip(g, mono)) for g in sub.generators)
        return MonomialIdeal(gens, self.nvars)

    def check_graded(self, degrees):
        """First pair ``(m, m')`` among ``degrees`` violating ``a_m a_m' ⊆ a_{m+m'}``, or ``None``."""
        for m in degrees:
            for mp in degrees:
                s = tuple(a + b for a, b in zip(m, mp))
                if not (self.ideal(m) * self.ideal(mp)) <= self.ideal(s):
                    return (tuple(m), tuple(mp))
        return None


def _ray_coefficients(cone, x):
    rays = cone.rays
    n = len(x)
    A = [tuple(r[i] for r in rays) for i in range(n)]
    return solve_linear(A, x)


def _in_ray_semigroup(rays, x):
    """Is ``x`` a non-negative integer combination of ``rays``?"""
    R, n = len(rays), len(x)
    normals, constants = [], []
    for j in range(R):
        e = [0] * R
        e[j] = 1
        normals.append(e)
        constants.append(0)
    for i in range(n):
        row = [r[i] for r in rays]
        normals.append(row)
        constants.append(x[i])
        normals.append([-t for t in row])
        constants.append(-x[i])
    return first_lattice_point(Polyhedron(normals, constants, R)) is not None


def multiple_in_subsemigroup_bound(cone, max_dim=3):
    """Least ``d`` such that ``d*m`` lies in the semigroup spanned by the
    primitive ray generators, for every lattice point ``m`` of ``cone``."""
    if not isinstance(cone, Cone):
        cone = Cone(cone)
    if cone.ambient_dim > max_dim:
        raise DimensionCapError("semigroup bound computed in dimension <= %d" % max_dim)
    if not cone.is_pointed:
        raise InputError("cone must be strongly convex")
    rays = cone.rays
    basis = hilbert_basis(cone)
    if cone.is_simplicial:
        d = 1
        for m in basis:
            for c in _ray_coefficients(cone, m):
                d = lcm(d, Fraction(c).denominator)
        return d
    d = 1
    while True:
        if all(_in_ray_semigroup(rays, [d * t for t in m]) for m in basis):
            return d
        d += 1


def _multisets(weights, total):
    """Count vectors ``c`` with ``sum c_i w_i == total``."""
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    for k in range(total // w + 1):
        for rest in _multisets(weights[1:], total - k * w):
            yield (k,) + rest


def _splits(counts, weights, d, m):
    groups = list(_multisets(weights, d))
    reach = {tuple(0 for _ in weights)}
    for _ in range(m):
        nxt = set()
        for r in reach:
            for g in groups:
                s = tuple(a + b for a, b in zip(r, g))
                if all(a <= b for a, b in zip(s, counts)):
                    nxt.add(s)
        reach = nxt
        if not reach:
            return False
    return tuple(counts) in reach


def dim_one_period(degrees, bound=6, max_d=None):
    """Least ``d`` with ``R_{dm} = R_d^m`` for ``1 <= m <= bound`` in the
    ``N``-graded algebra freely generated in the given degrees.

    A monomial of degree ``dm`` is a multiset of generator degrees; it lies in
    ``R_d^m`` exactly when the multiset splits into ``m`` groups of total ``d``."""
    weights = sorted(set(int(x) for x in degrees))
    if not weights or weights[0] <= 0:
        raise InputError("degrees must be positive integers")
    L = 1
    for w in weights:
        L = lcm(L, w)
    max_d = max_d or L * len(weights)
    for d in range(1, max_d + 1):
        if not any(True for _ in _multisets(weights, d)):
            continue
        if all(_splits(c, weights, d, m)
               for m in range(2, bound + 1) for c in _multisets(weights, d * m)):
            return d
    raise VerificationError("no period up to %d verified to m = %d" % (max_d, bound))


def _compositions_upto(nparts, bound):
    for p in product(range(bound + 1), repeat=nparts):
        if 1 <= sum(p) <= bound:
            yield p


def _closures_agree(a, b):
    return a.same_newton_polyhedron(b)


def verify_product_identity(s, d, cone, degree_bound=8):
    """Check ``closure(a_{d sum p_i e_i}) = closure(prod a_{d e_i}^{p_i})`` on a
    smooth cone with rays ``e_i`` for all ``1 <= sum p_i <= degree_bound``.

    Returns ``(ok, witness)``: ``witness`` is ``None`` on success, otherwise
    ``(kind, p)`` with ``kind`` ``"inclusion"`` when the product is not even
    contained in the ideal and ``"closure"`` when only the closures differ."""
    if not isinstance(cone, Cone):
        cone = Cone(cone, s.rank)
    rays = cone.rays
    snap = [s.ideal(tuple(d * t for t in e)) for e in rays]
    for p in sorted(_compositions_upto(len(rays), degree_bound), key=lambda p: (sum(p), p)):
        m = tuple(d * sum(pi * e[i] for pi, e in zip(p, rays)) for i in range(s.rank))
        prod = MonomialIdeal.unit(s.nvars)
        for pi, a in zip(p, snap):
            prod = prod * a.power(pi)
        big = s.ideal(m)
        if not prod <= big:
            return False, ("inclusion", p)
        if not _closures_agree(big, prod):
            return False, ("closure", p)
    return True, None


def check_inclusion(s, d, cone, degree_bound=8):
    """The direction forced by gradedness, ``prod a_{d e_i}^{p_i} ⊆ a_{d sum p_i e_i}``.

    Returns ``(ok, p)`` with ``p`` the first failing exponent vector."""
    if not isinstance(cone, Cone):
        cone = Cone(cone, s.rank)
    rays = cone.rays
    snap = [s.ideal(tuple(d * t for t in e)) for e in rays]
    for p in sorted(_compositions_upto(len(rays), degree_bound), key=lambda p: (sum(p), p)):
        m = tuple(d * sum(pi * e[i] for pi, e in zip(p, rays)) for i in range(s.rank))
        prod = MonomialIdeal.unit(s.nvars)
        for pi, a in zip(p, snap):
            prod = prod * a.power(pi)
        if not prod <= s.ideal(m):
            return False, p
    return True, None


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def _candidate_periods(s, fan):
    L = multiple_in_subsemigroup_bound(s.semigroup) if s.rank > 1 else 1
    if s.rees:
        for ri, r in enumerate(fan.rays):
            on_ray = []
            for deg in s.rees_degrees:
                if tuple(primitive(deg)) == r:
                    k = next(abs(a) // abs(b) for a, b in zip(deg, r) if b)
                    on_ray.append(k)
            if on_ray:
                L = lcm(L, dim_one_period(on_ray))
    return L


def find_refinement_and_d(s, degree_bound=8, fan=None, max_d=24):
    """A smooth fan refining the support of ``s`` (and ``fan``, if given) and a
    ``d`` passing :func:`verify_product_identity` on every maximal cone.

    Candidate ``d`` are the divisors of the lcm of the one-dimensional periods
    and the semigroup bound, then the remaining integers up to ``max_d``."""
    if s.rank > 3:
        raise DimensionCapError("fan refinement is implemented for rank <= 3")
    S = s.semigroup
    if fan is None:
        fan = Fan(S.rays, [tuple(range(len(S.rays)))])
    fan = fan.triangulated()
    if s.rees:
        for deg in s.rees_degrees:
            fan = fan.star_subdivide(deg)
    fan = smooth_refine(fan, max_dim=3)
    L = _candidate_periods(s, fan)
    order = _divisors(L) + [k for k in range(1, max_d + 1) if L % k]
    last = None
    for d in order:
        ok = True
        for c in fan.cones:
            good, w = verify_product_identity(s, d, fan.cone(c), degree_bound)
            if not good:
                ok = False
                last = (d, c, w)
                break
        if ok:
            return fan, d
    raise VerificationError("no d verified up to degree %d" % degree_bound, last)


def graded_limit_order(s, d, weights=None):
    """``ord(a_d)/d`` for a rank-one system; the limit of ``ord(a_p)/p`` once
    ``d`` is a verified period."""
    a = s.ideal((d,))
    if a.is_zero:
        return None
    if weights is None:
        return Fraction(a.order(), d)
    return Fraction(min(sum(w * x for w, x in zip(weights, g)) for g in a.generators), d)
