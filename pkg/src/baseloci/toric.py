"""Smooth complete toric varieties: sections, base loci and asymptotic orders.

A torus-invariant divisor ``D = sum a_rho D_rho`` has section polytope
``P_D = {u : <u, v_rho> >= -a_rho}``; its lattice points index the monomial
sections of ``O(D)``.  A toric valuation is an integer vector ``w`` of the fan
support, and on the section ``chi^u`` it takes the value ``<u, w> + phi(w)``
where ``phi`` is linear on the cone containing ``w`` with ``phi(v_rho) = a_rho``.
"""

from fractions import Fraction
from itertools import combinations
from math import factorial, inf

from .errors import (BaselociError, DimensionCapError, InputError, ModelInvariantError,
                     NotBigError)
from .monomial import MonomialIdeal, arnold_from_points, samuel_from_points
from .ratgeom.cones import Cone, Fan
from .ratgeom.linalg import (as_fraction, det, dot, lcm, nullspace, primitive, qvec,
                             solve_linear)
from .ratgeom.lp import linprog, simplex_standard
from .surds import exact_root
from .ratgeom.polyhedra import (Polyhedron, count_lattice_points, first_lattice_point,
                                lattice_min, lattice_points, minimize_linear, polytope_volume)


class ToricModel:
    """A complete smooth fan plus optional names for divisors and orbits."""

    def __init__(self, rays, cones, ray_labels=None, orbit_labels=None, divisors=None,
                 basis=None, name="toric"):
        self.name = name
        rays = [tuple(int(x) for x in r) for r in rays]
        for r in rays:
            if tuple(primitive(r)) != r:
                raise ModelInvariantError("ray generators primitive", str(r))
        self.rays = rays
        self.fan = Fan(rays, cones)
        if self.fan.rays != rays:
            raise ModelInvariantError("ray order", "rays must be distinct")
        self.n = len(rays[0])
        if not self.fan.is_complete:
            raise ModelInvariantError("fan complete")
        if not self.fan.is_smooth:
            raise ModelInvariantError("every maximal cone unimodular")
        self.ray_labels = list(ray_labels) if ray_labels else ["D%d" % i for i in range(len(rays))]
        if len(self.ray_labels) != len(rays):
            raise ModelInvariantError("one label per ray")
        self._orbit_labels = {}
        for cone, label in (orbit_labels or {}).items():
            self._orbit_labels[tuple(sorted(cone))] = label
        self.divisors = {}
        for k, v in (divisors or {}).items():
            self.divisors[k] = self._coeffs(v)
        self.basis = list(basis) if basis else None
        self._faces = [f for f in self.fan.faces() if f]
        self._ample = None
        self._valuations = {}
        # class map: rows q with sum_rho q_rho v_rho = 0
        V = [tuple(Fraction(x) for x in r) for r in rays]
        self.class_map = nullspace([tuple(V[j][i] for j in range(len(rays))) for i in range(self.n)])

    def __repr__(self):
        return "ToricModel(%s: %d rays in dimension %d)" % (self.name, len(self.rays), self.n)

    @property
    def nrays(self):
        return len(self.rays)

    def _coeffs(self, a):
        a = qvec(a)
        if len(a) != self.nrays:
            raise InputError("divisor has %d coefficients, model has %d rays" % (len(a), self.nrays))
        return a

    def divisor(self, spec):
        """Coefficients from a vector, a divisor name, or a dict ``{name: coefficient}``."""
        if isinstance(spec, str):
            if spec not in self.divisors:
                raise InputError("unknown divisor %r" % spec)
            return self.divisors[spec]
        if isinstance(spec, dict):
            out = [Fraction(0)] * self.nrays
            for k, c in spec.items():
                out = [o + as_fraction(c) * x for o, x in zip(out, self.divisor(k))]
            return tuple(out)
        return self._coeffs(spec)

    def combination(self, names, coords):
        coords = qvec(coords)
        out = [Fraction(0)] * self.nrays
        for name, c in zip(names, coords):
            out = [o + c * x for o, x in zip(out, self.divisor(name))]
        return tuple(out)

    def faces(self):
        """Nonempty cones of the fan as sorted ray-index tuples."""
        return list(self._faces)

    def orbit_label(self, cone):
        cone = tuple(sorted(cone))
        if cone in self._orbit_labels:
            return self._orbit_labels[cone]
        if not cone:
            return "X"
        if len(cone) == 1:
            return self.ray_labels[cone[0]]
        return "V(%s)" % ",".join(self.ray_labels[i] for i in cone)

    def cone_index(self, label):
        for c in self._faces:
            if self.orbit_label(c) == label:
                return c
        raise InputError("no orbit labelled %r" % label)

    def class_of(self, a):
        a = self._coeffs(a)
        return tuple(dot(q, a) for q in self.class_map)

    def linearly_equivalent(self, a, b):
        return self.class_of(a) == self.class_of(b)

    def valuation(self, w):
        """``(cone, c)`` with ``w = sum c_rho v_rho`` over the smallest cone containing ``w``."""
        w = tuple(int(x) for x in w)
        if w in self._valuations:
            return self._valuations[w]
        if len(w) != self.n:
            raise InputError("valuation vector of wrong dimension")
        if not any(w):
            return (), {}
        cone = self.fan.cone_containing(w)
        if cone is None:
            raise InputError("vector %s outside the fan support" % (w,))
        A = [tuple(self.rays[j][i] for j in cone) for i in range(self.n)]
        c = solve_linear(A, w)
        self._valuations[w] = cone, dict(zip(cone, c))
        return self._valuations[w]

    def orbit_valuation(self, cone):
        """The monomial valuation ``sum_{rho in cone} v_rho`` centred on ``V(cone)``."""
        return tuple(sum(self.rays[i][k] for i in cone) for k in range(self.n))

    def local_linear_form(self, a, cone):
        """``m`` with ``<m, v_rho> = -a_rho`` for rho in a maximal cone."""
        A = [self.rays[i] for i in cone]
        return solve_linear(A, [-a[i] for i in cone])


def section_polytope(x, d):
    a = tuple(x.divisor(d))
    cache = x.__dict__.setdefault("_polytopes", {})
    P = cache.get(a)
    if P is None:
        if len(cache) > 4096:
            cache.clear()
        P = cache[a] = Polyhedron(x.rays, [-c for c in a], x.n, bounded=True)
    return P


def _phi(x, a, c):
    return sum((coef * a[i] for i, coef in c.items()), Fraction(0))


def is_big(x, d):
    P = section_polytope(x, d)
    return not P.is_empty() and P.affine_dim() == x.n


def _require_big(x, d):
    if not is_big(x, d):
        raise NotBigError("divisor %s is not big (section polytope not full-dimensional)"
                          % (list(map(str, x.divisor(d))),))


def is_nef(x, d):
    a = x.divisor(d)
    for cone in x.fan.cones:
        m = x.local_linear_form(a, cone)
        if any(dot(m, x.rays[i]) < -a[i] for i in range(x.nrays)):
            return False
    return True


def is_ample(x, d):
    a = x.divisor(d)
    for cone in x.fan.cones:
        m = x.local_linear_form(a, cone)
        if any(dot(m, x.rays[i]) <= -a[i] for i in range(x.nrays) if i not in cone):
            return False
    return True


def ample_divisor(x):
    """A fixed integral ample divisor: the anticanonical one when it is ample,
    otherwise the optimum of a small strict-convexity LP."""
    if x._ample is not None:
        return x._ample
    anti = tuple(Fraction(1) for _ in range(x.nrays))
    if is_ample(x, anti):
        x._ample = anti
        return anti
    R, n = x.nrays, x.n
    cones = x.fan.cones
    nvar = R + n * len(cones)
    ge, eq = [], []
    for k, cone in enumerate(cones):
        for i in range(R):
            row = [0] * nvar
            row[i] = 1
            for t in range(n):
                row[R + n * k + t] = x.rays[i][t]
            if i in cone:
                eq.append((row, 0))
            else:
                ge.append((row, 1))
    for i in cones[0]:
        row = [0] * nvar
        row[i] = 1
        eq.append((row, 0))
    res = linprog([1] * R + [0] * (nvar - R), ge=ge, eq=eq)
    if not res.optimal:
        raise ModelInvariantError("projective fan", "no strictly convex support function")
    a = res.x[:R]
    den = 1
    for c in a:
        den = lcm(den, c.denominator)
    x._ample = tuple(c * den for c in a)
    return x._ample


def base_order(x, d, w):
    """Order of vanishing of a general member of ``|D|`` (``D`` integral) along ``w``.

    Returns ``math.inf`` when ``|D|`` is empty."""
    a = x.divisor(d)
    if any(c.denominator != 1 for c in a):
        raise InputError("base orders need an integral divisor")
    _, c = x.valuation(w)
    m = lattice_min(section_polytope(x, a), w)
    if m is None:
        return inf
    return int(m + _phi(x, a, c))


def base_order_along_ray(x, d, ray):
    return base_order(x, d, x.rays[ray])


def asym_order(x, d, w):
    """Asymptotic order of vanishing ``lim v_w(|pD|)/p`` of a big divisor."""
    a = x.divisor(d)
    _require_big(x, a)
    _, c = x.valuation(w)
    return minimize_linear(section_polytope(x, a), w) + _phi(x, a, c)


def asym_order_via_effective_lp(x, d, w):
    """``min sum c_rho b_rho`` over effective ``b`` linearly equivalent to ``D``.

    Solved in the divisor coordinates ``b >= 0`` with ``Q b = Q a`` for the class
    map ``Q``; this never touches the section polytope."""
    a = x.divisor(d)
    _require_big(x, a)
    if isinstance(w, int):
        w = x.rays[w]
    _, c = x.valuation(w)
    cost = [c.get(i, Fraction(0)) for i in range(x.nrays)]
    Q = x.class_map
    rhs = [dot(q, a) for q in Q]
    res = simplex_standard(cost, [list(q) for q in Q], rhs)
    if res.status == "infeasible":
        raise BaselociError("divisor is not effective")
    return res.value


def _face_constraints(x, a, cone):
    out = []
    for i in cone:
        out.append((x.rays[i], -a[i]))
        out.append((tuple(-t for t in x.rays[i]), a[i]))
    return out


def _minimal_cones(cones):
    cones = sorted(set(cones), key=lambda c: (len(c), c))
    out = []
    for c in cones:
        if not any(set(o) <= set(c) for o in out):
            out.append(c)
    return frozenset(out)


def base_locus(x, d):
    """Torus-invariant base locus of ``|D|`` for integral ``D``, as the
    inclusion-minimal cones ``sigma`` with ``V(sigma)`` inside it.  The empty
    cone stands for the whole variety."""
    a = x.divisor(d)
    if any(c.denominator != 1 for c in a):
        raise InputError("base loci need an integral divisor")
    P = section_polytope(x, a)
    if P.is_empty() or first_lattice_point(P) is None:
        return frozenset([()])
    verts = [v for v in P.vertices() if all(t.denominator == 1 for t in v)]
    bad = []
    for cone in x.faces():
        on_face = [v for v in P.vertices()
                   if all(dot(v, x.rays[i]) == -a[i] for i in cone)]
        if not on_face:
            bad.append(cone)      # the face of P is empty, no section can be non-zero on V(cone)
            continue
        if any(v in verts for v in on_face):
            continue
        if first_lattice_point(P, [(r, int(c)) for r, c in _face_constraints(x, a, cone)]) is None:
            bad.append(cone)
    return _minimal_cones(bad)


def clearing_multiple(x, d):
    """Least ``p`` making ``p*D`` integral with a lattice section polytope."""
    a = x.divisor(d)
    p = 1
    for c in a:
        p = lcm(p, c.denominator)
    for v in section_polytope(x, a).vertices():
        for t in v:
            p = lcm(p, t.denominator)
    return p


def stable_base_locus(x, d, max_doublings=6):
    """``B(D)``: ``Bs(|pD|)`` for ``p = p0, 2 p0, ...`` until two successive agree.

    ``p0`` clears the denominators of ``D`` and of the vertices of ``P_D``; from
    then on every face of ``p P_D`` is spanned by lattice vertices, so the first
    comparison already agrees."""
    a = x.divisor(d)
    p = clearing_multiple(x, a)
    prev = base_locus(x, [c * p for c in a])
    for _ in range(max_doublings):
        p *= 2
        cur = base_locus(x, [c * p for c in a])
        if cur == prev:
            return cur
        prev = cur
    raise BaselociError("stable base locus did not stabilise after %d doublings" % max_doublings)


def restricted_base_locus(x, d):
    """``B_-(D)``: orbit closures whose monomial valuation has positive asymptotic order."""
    a = x.divisor(d)
    _require_big(x, a)
    pos = [c for c in x.faces() if asym_order(x, a, x.orbit_valuation(c)) > 0]
    return _minimal_cones(pos)


def _epsilon_breakpoints(x, a, A):
    """Values of ``eps`` in ``(0, 1]`` where a face of ``P_{D - eps A}`` can appear or vanish.

    Every face of the slice traces a face of the lifted polytope
    ``{(u, eps) : <u, v_i> - eps A_i >= -a_i, 0 <= eps <= 1}``, whose range in
    ``eps`` ends at vertices; the ``eps`` coordinates of all vertices suffice."""
    n = x.n
    normals = [tuple(x.rays[i]) + (-A[i],) for i in range(x.nrays)]
    normals += [(0,) * n + (1,), (0,) * n + (-1,)]
    constants = [-c for c in a] + [0, -1]
    lifted = Polyhedron(normals, constants, n + 1, bounded=True)
    return sorted(set(v[n] for v in lifted.vertices() if v[n] > 0))


def augmented_base_locus(x, d, max_halvings=64):
    """``B_+(D) = B(D - eps A)`` for the fixed ample ``A`` and small ``eps``.

    ``eps`` is halved from 1; the loop stops once ``eps`` is below every
    breakpoint where some face of ``P_{D - eps A}`` changes, and the result
    agrees with the previous halving."""
    a = x.divisor(d)
    _require_big(x, a)
    A = ample_divisor(x)
    brk = _epsilon_breakpoints(x, a, A)
    bound = brk[0] if brk else Fraction(1)
    eps = Fraction(1)
    prev = None
    for _ in range(max_halvings):
        cur = stable_base_locus(x, [c - eps * t for c, t in zip(a, A)])
        if eps < bound and cur == prev:
            return cur
        prev = cur
        eps /= 2
    raise BaselociError("augmented base locus did not stabilise")


def locus_labels(x, locus):
    return sorted(x.orbit_label(c) for c in locus)


def volume(x, d):
    """``n! vol(P_D)``; zero for non-big divisors."""
    P = section_polytope(x, d)
    if P.is_empty():
        return Fraction(0)
    return factorial(x.n) * polytope_volume(P)


def lattice_volume_estimate(x, d, p):
    """``n! #(p P_D ∩ M) / p^n``, the growth quotient that converges to the volume."""
    P = section_polytope(x, d).scaled(p)
    return Fraction(factorial(x.n) * count_lattice_points(P), p ** x.n)


def sections(x, d):
    """Lattice points of ``P_D``: exponents of the monomial sections of ``O(D)``."""
    return lattice_points(section_polytope(x, d))


def _exponent_points(x, a, cone, points):
    return [tuple(dot(u, x.rays[i]) + a[i] for i in cone) for u in points]


def base_ideal(x, d, cone):
    """The base ideal of ``|D|`` at the generic point of ``V(cone)`` in the
    local monomial coordinates of the chart, for integral ``D``."""
    a = x.divisor(d)
    pts = sections(x, a)
    exps = [tuple(int(t) for t in e) for e in _exponent_points(x, a, cone, pts)]
    return MonomialIdeal(exps, len(cone))


def asymptotic_newton_points(x, d, cone):
    """Rational generators of the limit Newton polyhedron of ``b(|pD|)/p`` at ``V(cone)``."""
    a = x.divisor(d)
    _require_big(x, a)
    return _exponent_points(x, a, cone, section_polytope(x, a).vertices())


def asym_arnold(x, d, cone):
    return arnold_from_points(asymptotic_newton_points(x, d, cone), len(cone))


def asym_samuel(x, d, cone):
    return samuel_from_points(asymptotic_newton_points(x, d, cone), len(cone))


def asym_samuel_root(x, d, cone):
    """``e^{1/codim}``, exact when rational (``None`` otherwise)."""
    return exact_root(asym_samuel(x, d, cone), len(cone))


def order_function(x, w, ample_basis, basis=None):
    """``asym_order(., w)`` as a cone function on the big cone, in the
    coordinates of ``basis`` (divisor names; defaults to the model's basis)."""
    from .convex_core import ConeFunction
    basis = list(basis or x.basis)

    def to_divisor(v):
        return x.combination(basis, v)

    return ConeFunction(lambda v: asym_order(x, to_divisor(v), w),
                        lambda v: is_big(x, to_divisor(v)), ample_basis,
                        name="ord_%s" % (tuple(w),))


class PiecewiseLinearFunction:
    """One linear functional per maximal cone of a fan (as a list of cones)."""

    def __init__(self, cones, functionals):
        self.cones = list(cones)
        self.functionals = [tuple(f) for f in functionals]

    def __call__(self, m):
        m = qvec(m)
        for cone, f in zip(self.cones, self.functionals):
            if cone.contains(m):
                return dot(f, m)
        raise InputError("point %s outside the support" % (m,))

    def is_continuous(self):
        """Functionals agree on the rays shared by neighbouring cones."""
        for (c1, f1), (c2, f2) in combinations(zip(self.cones, self.functionals), 2):
            for r in set(c1.rays) & set(c2.rays):
                if dot(f1, r) != dot(f2, r):
                    return False
        return True


class ChamberFan:
    """Result of :func:`chamber_fan`: cones in class coordinates, and for each
    valuation the piecewise-linear asymptotic order."""

    def __init__(self, model, basis, cones, valuations, functions, effective):
        self.model = model
        self.basis = basis
        self.cones = cones
        self.valuations = valuations
        self.functions = functions
        self.effective = effective

    @property
    def fan(self):
        return Fan.from_cones(self.cones)

    def rays(self):
        out = set()
        for c in self.cones:
            out.update(c.rays)
        return sorted(out)

    def interior_point(self, k):
        c = self.cones[k]
        return tuple(sum(Fraction(r[i]) for r in c.rays) for i in range(len(self.basis)))


def _basis_matrix(x, basis):
    cols = [x.class_of(x.divisor(b)) for b in basis]
    k = len(x.class_map)
    if len(cols) != k:
        raise InputError("basis must have %d classes (rank of the Picard group), got %d"
                         % (k, len(cols)))
    M = [tuple(col[i] for col in cols) for i in range(k)]
    if det(M) == 0:
        raise InputError("basis classes are linearly dependent")
    return M


def class_coordinates(x, basis, d):
    M = _basis_matrix(x, basis)
    return solve_linear(M, x.class_of(x.divisor(d)))


def _dual_vertices(x, w):
    """Vertices of ``{y >= 0 : sum y_rho v_rho = w}``."""
    n = x.n
    out = set()
    for sub in combinations(range(x.nrays), n):
        A = [tuple(x.rays[j][i] for j in sub) for i in range(n)]
        if det(A) == 0:
            continue
        y = solve_linear(A, w)
        if all(t >= 0 for t in y):
            full = [Fraction(0)] * x.nrays
            for j, t in zip(sub, y):
                full[j] = t
            out.add(tuple(full))
    return sorted(out)


def order_functionals(x, basis, w):
    """Linear functionals in class coordinates whose maximum is ``asym_order(., w)``
    on the effective cone (LP duality over the vertices of the dual polyhedron)."""
    _, c = x.valuation(w)
    divs = [x.divisor(b) for b in basis]
    out = set()
    for y in _dual_vertices(x, w):
        g = tuple(sum((c.get(r, 0) - y[r]) * D[r] for r in range(x.nrays)) for D in divs)
        out.add(g)
    return sorted(out)


def chamber_fan(x, basis=None, valuations=None, max_rank=3):
    """Coarsest fan in class coordinates on which every listed valuation's
    asymptotic order is linear.  Valuations default to the monomial valuations
    of all torus orbits; divisorial ones alone miss walls caused by orbits of
    higher codimension."""
    basis = list(basis or x.basis or [])
    r = len(basis)
    if r > max_rank:
        raise DimensionCapError("chamber fans are computed for Picard rank <= %d" % max_rank)
    M = _basis_matrix(x, basis)
    eff_gens = []
    for i in range(x.nrays):
        e = [0] * x.nrays
        e[i] = 1
        eff_gens.append(solve_linear(M, x.class_of(e)))
    eff = Cone(eff_gens, r)
    if valuations is None:
        valuations = [(x.orbit_label(c), x.orbit_valuation(c)) for c in x.faces()]
    funcs = {label: order_functionals(x, basis, w) for label, w in valuations}
    pieces = [list(eff.facets())]
    for label, _ in valuations:
        gs = funcs[label]
        if len(gs) < 2:
            continue
        nxt = []
        for H in pieces:
            parts = []
            for g in gs:
                extra = [tuple(gi - hi for gi, hi in zip(g, h)) for h in gs if h != g]
                cone = Cone.from_inequalities(H + extra, ambient_dim=r)
                if cone.dim == r:
                    parts.append(H + extra)
            nxt.extend(parts if len(parts) > 1 else [H])
        pieces = nxt
    cones = [Cone.from_inequalities(H, ambient_dim=r) for H in pieces]
    cones.sort(key=lambda c: sorted(c.rays))
    functions = {}
    for label, _ in valuations:
        per = []
        for c in cones:
            p = tuple(sum(Fraction(v[i]) for v in c.rays) for i in range(r))
            per.append(max(funcs[label], key=lambda g: dot(g, p)))
        functions[label] = PiecewiseLinearFunction(cones, per)
    return ChamberFan(x, basis, cones, valuations, functions, eff)
