"""Surfaces presented by a Néron-Severi lattice and a catalog of curves.

The catalog is trusted to contain every negative curve that matters; all
results are relative to it.  Zariski decompositions are computed by growing
the negative support one round at a time and re-solving the orthogonality
system ``(d . E_i) = sum_j (E_i . E_j) a_j``.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import (IncompleteCatalogError, InputError, ModelInvariantError,
                     NegativeDefinitenessError, NotBigError, NotNefError)
from .ratgeom.cones import Cone
from .ratgeom.linalg import (dot, inverse, is_negative_definite, mat_vec, qmat, qvec, signature,
                             solve_linear)

MAX_CATALOG = 12


class Curve:
    __slots__ = ("name", "cls", "negative")

    def __init__(self, name, cls, negative=None):
        self.name = name
        self.cls = qvec(cls)
        self.negative = negative

    def __repr__(self):
        return "Curve(%s)" % self.name


class SurfaceModel:
    """Intersection form, curve catalog and a declared ample class."""

    def __init__(self, labels, form, curves, ample, name="surface"):
        self.name = name
        self.labels = list(labels)
        self.form = qmat(form)
        self.rank = len(self.labels)
        self.curves = [c if isinstance(c, Curve) else Curve(*c) for c in curves]
        self.ample = qvec(ample)
        self._check()
        for c in self.curves:
            if c.negative is None:
                c.negative = self.intersect(c.cls, c.cls) < 0
        self._by_name = {c.name: c for c in self.curves}

    def __repr__(self):
        return "SurfaceModel(%s: rank %d, %d curves)" % (self.name, self.rank, len(self.curves))

    def _check(self):
        r = self.rank
        if len(self.form) != r or any(len(row) != r for row in self.form):
            raise ModelInvariantError("intersection_matrix shape", "expected %dx%d" % (r, r))
        for i in range(r):
            for j in range(i):
                if self.form[i][j] != self.form[j][i]:
                    raise ModelInvariantError("intersection_matrix symmetric",
                                              "entry (%d,%d) differs from (%d,%d)" % (i, j, j, i))
        if signature(self.form) != (1, r - 1, 0):
            raise ModelInvariantError("hodge index signature (1, rank-1)",
                                      "got %s" % (signature(self.form),))
        if len(self.ample) != r:
            raise ModelInvariantError("ample witness dimension")
        if self.intersect(self.ample, self.ample) <= 0:
            raise ModelInvariantError("ample witness h^2 > 0")
        if len(self.curves) > MAX_CATALOG:
            raise ModelInvariantError("catalog size <= %d" % MAX_CATALOG)
        names = set()
        for c in self.curves:
            if c.name in names:
                raise ModelInvariantError("curve names unique", c.name)
            names.add(c.name)
            if len(c.cls) != r:
                raise ModelInvariantError("curve class dimension", c.name)
            if any(x.denominator != 1 for x in c.cls):
                raise ModelInvariantError("curve classes integral", c.name)
            g = 0
            for x in c.cls:
                g = gcd(g, int(x))
            if g != 1:
                raise ModelInvariantError("curve classes primitive", c.name)
            if self.intersect(self.ample, c.cls) <= 0:
                raise ModelInvariantError("h.C > 0 for catalog curves", c.name)

    def intersect(self, a, b):
        return dot(qvec(a), mat_vec(self.form, qvec(b)))

    def curve(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise InputError("no curve named %r in catalog of %s" % (name, self.name))

    def divisor(self, coords):
        coords = qvec(coords)
        if len(coords) != self.rank:
            raise InputError("class has %d coordinates, model rank is %d" % (len(coords), self.rank))
        return coords

    def is_nef(self, d):
        return all(self.intersect(d, c.cls) >= 0 for c in self.curves)

    def format_class(self, d):
        parts = []
        for x, lab in zip(d, self.labels):
            if x == 0:
                continue
            coef = "" if x == 1 else "-" if x == -1 else str(x)
            parts.append(coef + lab)
        return " + ".join(parts).replace("+ -", "- ") or "0"


class ZariskiDecomposition:
    __slots__ = ("positive", "negative", "divisor")

    def __init__(self, divisor, positive, negative):
        self.divisor = divisor
        self.positive = positive
        self.negative = dict(sorted(negative.items()))

    @property
    def support(self):
        return frozenset(self.negative)

    def __repr__(self):
        return "ZariskiDecomposition(P=%s, N=%s)" % (list(self.positive), self.negative)


def _gram(m, names):
    return [tuple(m.intersect(m.curve(a).cls, m.curve(b).cls) for b in names) for a in names]


def _solve_support(m, d, names):
    """Coefficients making ``d - sum a_j E_j`` orthogonal to every ``E_i``."""
    if not names:
        return {}
    G = _gram(m, names)
    if not is_negative_definite(G):
        raise NegativeDefinitenessError("support %s has a Gram matrix that is not negative definite"
                                        % sorted(names))
    rhs = [m.intersect(d, m.curve(n).cls) for n in names]
    a = solve_linear(G, rhs)
    return dict(zip(names, a))


def _positive_part(m, d, coeffs):
    P = list(d)
    for name, a in coeffs.items():
        cls = m.curve(name).cls
        P = [p - a * c for p, c in zip(P, cls)]
    return tuple(P)


def _is_big_class(m, d):
    return m.intersect(d, d) > 0 and m.intersect(d, m.ample) > 0


def zariski_decompose(m, d):
    """Zariski decomposition of a big class against the model's catalog."""
    d = m.divisor(d)
    if m.intersect(d, m.ample) <= 0:
        raise NotBigError("class %s has d.h <= 0" % m.format_class(d))
    support = []
    while True:
        coeffs = _solve_support(m, d, support)
        neg = {k: v for k, v in coeffs.items() if v < 0}
        if neg:
            raise IncompleteCatalogError(neg)
        P = _positive_part(m, d, coeffs)
        bad = [c for c in m.curves if c.name not in coeffs and m.intersect(P, c.cls) < 0]
        if not bad:
            break
        if any(m.intersect(c.cls, c.cls) >= 0 for c in bad):
            # a curve of non-negative square is nef; failing it means d is not pseudo-effective
            raise NotBigError("class %s is not pseudo-effective" % m.format_class(d))
        support = sorted(set(support) | {c.name for c in bad}, key=[c.name for c in m.curves].index)
    if not (_is_big_class(m, d) or _is_big_class(m, P)):
        raise NotBigError("class %s is not big" % m.format_class(d))
    return ZariskiDecomposition(d, P, {k: v for k, v in coeffs.items() if v > 0})


def is_big(m, d):
    try:
        zariski_decompose(m, d)
    except (NotBigError, NegativeDefinitenessError):
        return False
    return True


def null_locus(m, p):
    """Catalog curves on which the nef and big class ``p`` has degree zero."""
    p = m.divisor(p)
    if not m.is_nef(p):
        raise NotNefError("class %s is not nef against the catalog" % m.format_class(p))
    if not _is_big_class(m, p):
        raise NotBigError("class %s is not big" % m.format_class(p))
    return frozenset(c.name for c in m.curves if m.intersect(p, c.cls) == 0)


def augmented_base_locus(m, d):
    return null_locus(m, zariski_decompose(m, d).positive)


def restricted_base_locus(m, d):
    return zariski_decompose(m, d).support


def asym_ord(m, d, curve):
    """Asymptotic order of vanishing along a catalog curve: its coefficient in N."""
    m.curve(curve)
    return zariski_decompose(m, d).negative.get(curve, Fraction(0))


def is_stable(m, d):
    z = zariski_decompose(m, d)
    return null_locus(m, z.positive) == z.support


def _support_functionals(m, names):
    """Linear maps ``d -> a_j(d)`` and ``d -> P(d).C`` for a fixed support."""
    r = m.rank
    basis = [tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)]
    if names:
        Ginv = inverse(_gram(m, names))
        # a_j(d) = sum_i Ginv[j][i] (E_i . d)
        rows = [tuple(m.intersect(m.curve(n).cls, e) for e in basis) for n in names]
        coef = [tuple(sum(Ginv[j][i] * rows[i][k] for i in range(len(names))) for k in range(r))
                for j in range(len(names))]
    else:
        coef = []
    a = dict(zip(names, coef))

    def pdotc(cls):
        # P(d).C = d.C - sum_j a_j(d) (E_j . C)
        out = [m.intersect(e, cls) for e in basis]
        for n in names:
            ec = m.intersect(m.curve(n).cls, cls)
            out = [o - x * ec for o, x in zip(out, a[n])]
        return tuple(out)

    return a, pdotc


def negative_definite_supports(m):
    neg = [c.name for c in m.curves if c.negative]
    out = [()]
    for k in range(1, len(neg) + 1):
        for sub in combinations(neg, k):
            if is_negative_definite(_gram(m, sub)):
                out.append(sub)
    return out


def stable_chambers(m, region):
    """Cones ``closure(S_B)`` covering ``region``, each with its support ``B``.

    On each returned cone every ``asym_ord`` is the linear functional listed in
    ``functionals`` (a map from curve name to coefficient vector)."""
    if not isinstance(region, Cone):
        region = Cone(region, m.rank)
    r = m.rank
    probe = tuple(sum(g[i] for g in region.generators) for i in range(r))
    if region.dim != r or not is_big(m, probe):
        raise NotBigError("region must be a full-dimensional cone with big interior")
    chambers = []
    for names in negative_definite_supports(m):
        a, pdotc = _support_functionals(m, list(names))
        ge = [a[n] for n in names]
        ge += [pdotc(c.cls) for c in m.curves if c.name not in names]
        ge += list(region.facets())
        eq = list(region.span_equations())
        cone = Cone.from_inequalities(ge, eq, r)
        if cone.dim == r:
            funcs = {c.name: a.get(c.name, tuple(Fraction(0) for _ in range(r))) for c in m.curves}
            chambers.append(Chamber(cone, frozenset(names), funcs))
    return chambers


class Chamber:
    __slots__ = ("cone", "support", "functionals")

    def __init__(self, cone, support, functionals):
        self.cone = cone
        self.support = support
        self.functionals = functionals

    def __iter__(self):
        return iter((self.cone, self.support))

    def __repr__(self):
        return "Chamber(%s, B=%s)" % (list(self.cone.rays), sorted(self.support))


def null_cone(m, curve, region):
    """Closed chambers whose support avoids ``curve``: where its order vanishes."""
    m.curve(curve)
    return [ch.cone for ch in stable_chambers(m, region) if curve not in ch.support]


def effective_cone(m):
    """Cone spanned by the catalog curves (the effective cone when the catalog generates it)."""
    return Cone([c.cls for c in m.curves], m.rank)
