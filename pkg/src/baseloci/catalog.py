"""Closed-form answers for two worked models, used as ground truth.

The two-point blow-up ``X = Bl_{P,Q} P^n`` with ``L = alpha H - beta1 E1 - beta2 E2``
splits its big cone into five stable chambers.  The Cutkosky-type example
``P(O(D) + O(-H))`` over ``E x E`` has an irrational asymptotic order along the
negative section.
"""

from fractions import Fraction
from math import ceil

from .convex_core import ConeFunction
from .errors import InputError
from .ratgeom.linalg import as_fraction, dot, mat_vec, qvec
from .surds import QuadraticSurd, SqrtCombination

CHAMBERS = ("chamber1", "chamber2", "chamber3", "chamber4", "chamber5")


class BlowupClass:
    __slots__ = ("n", "alpha", "beta1", "beta2")

    def __init__(self, n, alpha, beta1, beta2):
        if int(n) < 2:
            raise InputError("dimension must be at least 2")
        self.n = int(n)
        self.alpha, self.beta1, self.beta2 = (as_fraction(x) for x in (alpha, beta1, beta2))

    def __repr__(self):
        return "BlowupClass(n=%d, %s, %s, %s)" % (self.n, self.alpha, self.beta1, self.beta2)

    def coefficients(self):
        """Torus-invariant coefficients on the shipped toric model of dimension ``n``."""
        a, b1, b2 = self.alpha, self.beta1, self.beta2
        if self.n == 2:
            return (0, 0, a, -b1, a - b2)
        if self.n == 3:
            return (0, 0, 0, a, -b1, a - b2)
        raise InputError("toric realisation shipped for n = 2 and 3 only")


def blowup_chamber(c):
    a, b1, b2 = c.alpha, c.beta1, c.beta2
    if not a > max(b1, b2, 0):
        return "not-big"
    if b1 < 0 and a > b2 > 0:
        return "chamber1"
    if b2 < 0 and a > b1 > 0:
        return "chamber2"
    if b1 < 0 and b2 < 0:
        return "chamber3"
    if b1 > 0 and b2 > 0:
        if a > b1 + b2:
            return "chamber4"
        if a < b1 + b2:
            return "chamber5"
    return "wall"


class Invariants:
    """Values along one component of the stable base locus."""
    __slots__ = ("locus", "ord", "arnold", "samuel_root")

    def __init__(self, locus, ord, arnold, samuel_root):
        self.locus = locus
        self.ord = ord
        self.arnold = arnold
        self.samuel_root = samuel_root

    def as_tuple(self):
        return (self.locus, self.ord, self.arnold, self.samuel_root)

    def __repr__(self):
        return "Invariants(%s: ord=%s, Arn=%s, e^(1/codim)=%s)" % self.as_tuple()


def blowup_invariants(c):
    """Per-component table ``[Invariants]`` of a class in an open chamber.

    Exceptional divisors have codimension one, so there the Arnold and Samuel
    values both equal the order; along ``l`` (codimension ``n-1``) the base
    ideal is a power of the maximal ideal."""
    ch = blowup_chamber(c)
    if ch == "wall":
        raise InputError("class %r lies on a wall" % (c,))
    if ch == "not-big":
        raise InputError("class %r is not big" % (c,))
    out = []
    if ch in ("chamber1", "chamber3"):
        out.append(Invariants("E1", -c.beta1, -c.beta1, -c.beta1))
    if ch in ("chamber2", "chamber3"):
        out.append(Invariants("E2", -c.beta2, -c.beta2, -c.beta2))
    if ch == "chamber5":
        v = c.beta1 + c.beta2 - c.alpha
        out.append(Invariants("l", v, v / (c.n - 1), v))
    return out


def blowup_stable_locus(c):
    return frozenset(inv.locus for inv in blowup_invariants(c))


# The Cutkosky model.  N^1(E x E) has basis F1, F2, Delta with
# F_i^2 = Delta^2 = 0 and all mixed products 1.

CUTKOSKY_FORM = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
CUTKOSKY_D = (1, 1, 0)
CUTKOSKY_H = (0, 3, 3)
CUTKOSKY_h = (1, 1, 1)
CUTKOSKY_F1 = (1, 0, 0)


def _int(a, b):
    return dot(qvec(a), mat_vec([qvec(r) for r in CUTKOSKY_FORM], qvec(b)))


def cutkosky_quadratic(t):
    """Coefficients ``(A, B, C)`` of ``(D - x H + (1+x) t F1)^2 = A x^2 + B x + C``."""
    t = as_fraction(t)
    return 9 - 6 * t, -(9 + 5 * t), 1 + t


def _check_t(t):
    t = as_fraction(t)
    if not 0 <= t < Fraction(3, 2):
        raise InputError("t must satisfy 0 <= t < 3/2")
    return t


def cutkosky_sigma(t):
    """``sigma(t) = (9 + 5t - sqrt(49t^2 + 78t + 45)) / (18 - 12t)``: the smaller
    root of the quadratic above, the effectivity threshold for ``j/i``."""
    t = _check_t(t)
    den = 18 - 12 * t
    return (QuadraticSurd(9 + 5 * t) - QuadraticSurd.sqrt(49 * t * t + 78 * t + 45)) / den


def cutkosky_ord_asym(t):
    """``ord_E ||D_t|| = 1 / (1 + sigma(t))``."""
    return 1 / (1 + cutkosky_sigma(t))


def below_sigma(x, t):
    """``x < sigma(t)`` decided from the sign of the quadratic: below the smaller
    root exactly when the quadratic is positive left of its vertex."""
    A, B, C = cutkosky_quadratic(t)
    x = as_fraction(x)
    return A * x * x + B * x + C > 0 and 2 * A * x < -B


def cutkosky_ord_bruteforce(k, t):
    """``min{p : (k-p)/p < sigma(t)}``, the least ``p`` with ``pD - (k-p)H + ktF1``
    effective on ``E x E``; the boundary case counts as not effective."""
    t = _check_t(t)
    k = int(k)
    if k <= 0:
        raise InputError("k must be positive")
    if (k * t).denominator != 1:
        raise InputError("k*t must be an integer")
    for p in range(1, k + 1):
        if below_sigma(Fraction(k - p, p), t):
            return p
    return k


def surd_ceil(v):
    n = ceil(float(v))
    while n - 1 >= v:
        n -= 1
    while n < v:
        n += 1
    return n


def cutkosky_ceiling_estimate(k, t):
    """``ceil(k / (1 + sigma(t)))`` computed exactly."""
    return surd_ceil(k * cutkosky_ord_asym(t))


def divided_difference(ts, values):
    """Top divided difference of ``values`` (surds or rationals) at nodes ``ts``,
    as an exact :class:`SqrtCombination`."""
    ts = [as_fraction(t) for t in ts]
    col = [SqrtCombination.of(v) for v in values]
    for level in range(1, len(ts)):
        col = [(col[i + 1] - col[i]).scale(1 / (ts[i + level] - ts[i])) for i in range(len(col) - 1)]
    return col[0]


def excludes_polynomial(ts, values):
    """True when no polynomial of degree ``< len(ts) - 1`` takes these values."""
    return not divided_difference(ts, values).is_zero()


def cutkosky_class(a, g):
    """``a O(1) + pi^* G`` as coordinates ``(a, g_F1, g_F2, g_Delta)``."""
    return (as_fraction(a),) + tuple(as_fraction(x) for x in g)


def _cutkosky_eval(v):
    """``ord_E`` of ``a O(1) + pi^* G``: the least ``x >= 0`` with
    ``G - aH + x(D + H)`` nef on ``E x E`` (square and degree non-negative)."""
    a, G = v[0], v[1:]
    A0 = tuple(g - a * h for g, h in zip(G, CUTKOSKY_H))
    B = tuple(d + h for d, h in zip(CUTKOSKY_D, CUTKOSKY_H))
    if _int(A0, A0) >= 0 and _int(A0, CUTKOSKY_h) >= 0:
        return QuadraticSurd(0)
    bb, ab, aa = _int(B, B), _int(A0, B), _int(A0, A0)
    disc = ab * ab - aa * bb
    return (QuadraticSurd(-ab) + QuadraticSurd.sqrt(disc)) / bb


def _cutkosky_domain(v):
    a, G = v[0], v[1:]
    if a <= 0:
        return False
    C = tuple(g + a * d for g, d in zip(G, CUTKOSKY_D))
    return _int(C, C) > 0 and _int(C, CUTKOSKY_h) > 0


def cutkosky_function():
    """``ord_E`` as a cone function on the big cone of the threefold."""
    Hh = tuple(x + y for x, y in zip(CUTKOSKY_H, CUTKOSKY_h))
    basis = [cutkosky_class(1, tuple(x + y for x, y in zip(Hh, f)))
             for f in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0))]
    return ConeFunction(_cutkosky_eval, _cutkosky_domain, basis, name="ord_E")


def cutkosky_point(t):
    """The class ``D_t = O(1) + t pi^* F1``."""
    return cutkosky_class(1, tuple(as_fraction(t) * x for x in CUTKOSKY_F1))
