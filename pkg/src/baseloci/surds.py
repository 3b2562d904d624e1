"""Exact real quadratic irrationals ``p + q*sqrt(n)`` and sums of square roots.

Only what the Cutkosky oracle needs: arithmetic inside one quadratic field,
exact sign and comparison, decimal rendering, and an exact zero test for
rational combinations of square roots with different radicands.
"""

from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt

from .ratgeom.linalg import as_fraction


def squarefree_split(n):
    """``n = s*s*r`` with ``r`` squarefree; returns ``(s, r)`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("squarefree_split needs a positive integer")
    s, r = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1
    return s, r * n


def sqrt_parts(x):
    """``sqrt(x) = c*sqrt(r)`` for a non-negative rational ``x``: returns ``(c, r)``."""
    x = as_fraction(x)
    if x < 0:
        raise ValueError("square root of a negative rational")
    if x == 0:
        return Fraction(0), 1
    # sqrt(a/b) = sqrt(a*b)/b
    s, r = squarefree_split(x.numerator * x.denominator)
    return Fraction(s, x.denominator), r


class QuadraticSurd:
    """The real number ``p + q*sqrt(n)`` with rational ``p, q`` and squarefree ``n``.

    The canonical form has ``q == 0`` exactly when the number is rational, in
    which case ``n`` is stored as 1.
    """

    __slots__ = ("p", "q", "n")

    def __init__(self, p, q=0, n=1):
        p, q = as_fraction(p), as_fraction(q)
        n = int(n)
        if n < 1:
            raise ValueError("radicand must be positive")
        s, r = squarefree_split(n)
        q *= s
        if r == 1:
            p, q = p + q, Fraction(0)
        if q == 0:
            r = 1
        self.p, self.q, self.n = p, q, r

    @classmethod
    def sqrt(cls, x):
        c, r = sqrt_parts(x)
        return cls(0, c, r)

    @property
    def is_rational(self):
        return self.q == 0

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            return other
        return QuadraticSurd(as_fraction(other))

    def _field(self, other):
        if self.n != other.n and not (self.is_rational or other.is_rational):
            raise ValueError("surds from different quadratic fields: sqrt(%d) and sqrt(%d)"
                             % (self.n, other.n))
        return other.n if self.is_rational else self.n

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticSurd(self.p + o.p, self.q + o.q, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.n)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        n = self._field(o)
        return QuadraticSurd(self.p * o.p + self.q * o.q * n, self.p * o.q + self.q * o.p, n)

    __rmul__ = __mul__

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def conjugate(self):
        return QuadraticSurd(self.p, -self.q, self.n)

    def norm(self):
        return self.p * self.p - self.q * self.q * self.n

    def __truediv__(self, other):
        o = self._coerce(other)
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero surd")
        num = self * o.conjugate()
        return QuadraticSurd(num.p / nrm, num.q / nrm, num.n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def sign(self):
        if self.q == 0:
            return (self.p > 0) - (self.p < 0)
        sp = (self.p > 0) - (self.p < 0)
        sq = (self.q > 0) - (self.q < 0)
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with q^2 n
        d = self.p * self.p - self.q * self.q * self.n
        return sp if d > 0 else sq

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadraticSurd)):
            o = self._coerce(other)
            return (self.p, self.q, self.n) == (o.p, o.q, o.n)
        return NotImplemented

    def __hash__(self):
        return hash(self.p) if self.q == 0 else hash((self.p, self.q, self.n))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.p) + float(self.q) * self.n ** 0.5

    def rational_bounds(self, width):
        """Rationals ``lo <= self <= hi`` with ``hi - lo <= width``."""
        width = as_fraction(width)
        if self.q == 0:
            return self.p, self.p
        # bracket sqrt(n) by integer square roots at a scale fine enough for |q|
        scale = 1
        while Fraction(abs(self.q), scale) > width:
            scale *= 2
        r = isqrt(self.n * scale * scale)
        lo_s, hi_s = Fraction(r, scale), Fraction(r + 1, scale)
        a, b = self.p + self.q * lo_s, self.p + self.q * hi_s
        return (a, b) if a <= b else (b, a)

    def decimal(self, places=6):
        with localcontext() as ctx:
            ctx.prec = places + 20
            v = Decimal(self.p.numerator) / Decimal(self.p.denominator)
            if self.q:
                v += Decimal(self.q.numerator) / Decimal(self.q.denominator) * Decimal(self.n).sqrt()
            return str(round(v, places))

    def canonical(self):
        """``(a, b, n, c)`` with value ``(a + b*sqrt(n))/c``, ``c > 0`` and ``gcd(a, b, c) = 1``."""
        c = self.p.denominator * self.q.denominator // gcd(self.p.denominator, self.q.denominator)
        a = int(self.p * c)
        b = int(self.q * c)
        g = gcd(gcd(a, b), c)
        return a // g, b // g, self.n, c // g

    def __str__(self):
        a, b, n, c = self.canonical()
        if b == 0:
            return str(Fraction(a, c))
        if b == 1:
            rad = "√%d" % n
        elif b == -1:
            rad = "-√%d" % n
        else:
            rad = "%d√%d" % (b, n)
        if a == 0:
            body = rad
        else:
            body = "%d%s%s" % (a, "+" if b > 0 else "", rad)
        return body if c == 1 else "(%s)/%d" % (body, c)

    def __repr__(self):
        return "QuadraticSurd(%s)" % self


class SqrtCombination:
    """A finite sum ``sum_r c_r * sqrt(r)`` over distinct squarefree ``r``.

    Square roots of distinct squarefree integers are linearly independent over
    the rationals, so the sum is zero exactly when every coefficient is zero.
    """

    def __init__(self, terms=None):
        self.terms = {}
        for r, c in (terms or {}).items():
            self._add(r, as_fraction(c))

    def _add(self, r, c):
        s, r = squarefree_split(r)
        c = c * s
        v = self.terms.get(r, Fraction(0)) + c
        if v:
            self.terms[r] = v
        else:
            self.terms.pop(r, None)

    @classmethod
    def of(cls, x):
        if isinstance(x, SqrtCombination):
            return x
        if isinstance(x, QuadraticSurd):
            return cls({1: x.p, x.n: x.q}) if x.q else cls({1: x.p})
        return cls({1: as_fraction(x)})

    def __add__(self, other):
        out = SqrtCombination(self.terms)
        for r, c in SqrtCombination.of(other).terms.items():
            out._add(r, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        return SqrtCombination({r: -c for r, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-SqrtCombination.of(other))

    def scale(self, k):
        k = as_fraction(k)
        return SqrtCombination({r: c * k for r, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __float__(self):
        return sum(float(c) * r ** 0.5 for r, c in self.terms.items())

    def __repr__(self):
        return "SqrtCombination(%s)" % dict(sorted(self.terms.items()))


def exact_root(x, k):
    """The rational ``k``-th root of a non-negative rational, or ``None`` if irrational."""
    x = as_fraction(x)
    if x < 0:
        raise ValueError("root of a negative number")

    def iroot(n):
        r = round(n ** (1.0 / k))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** k == n:
                return c
        lo, hi = 0, n + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** k < n:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** k == n else None

    a, b = iroot(x.numerator), iroot(x.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)
