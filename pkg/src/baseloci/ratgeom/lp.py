"""Exact linear programming: a two-phase tableau simplex with Bland's rule.

Problems here are small (tens of variables) but must be solved without any
rounding, so the tableau is kept in Fractions and Bland's rule guarantees
termination under degeneracy.
"""

from fractions import Fraction

from .linalg import as_fraction


class LPResult:
    __slots__ = ("status", "x", "value")

    def __init__(self, status, x=None, value=None):
        self.status = status
        self.x = x
        self.value = value

    @property
    def optimal(self):
        return self.status == "optimal"

    def __repr__(self):
        return "LPResult(%s, value=%s)" % (self.status, self.value)


def _pivot(T, r, c):
    inv = 1 / T[r][c]
    T[r] = [x * inv for x in T[r]]
    pr = T[r]
    for i, row in enumerate(T):
        if i != r:
            f = row[c]
            if f:
                T[i] = [a - f * b for a, b in zip(row, pr)]


def _run(T, basis, cost, allowed):
    ncol = len(T[0]) - 1
    while True:
        cb = [cost[b] for b in basis]
        enter = None
        for j in allowed:
            if j in basis:
                continue
            z = cost[j]
            for i, row in enumerate(T):
                if row[j] and cb[i]:
                    z -= cb[i] * row[j]
            if z < 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[ncol] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, best[1], enter)
        basis[best[1]] = enter


def simplex_standard(c, A, b):
    """Minimise ``c.y`` subject to ``A y = b`` and ``y >= 0``."""
    m = len(A)
    n = len(c)
    T = []
    for row, rhs in zip(A, b):
        row = list(row)
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        T.append(row + [Fraction(0)] * m + [rhs])
    for i in range(m):
        T[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]
    cost1 = [Fraction(0)] * n + [Fraction(1)] * m
    _run(T, basis, cost1, list(range(n + m)))
    if sum(T[i][-1] for i in range(m) if basis[i] >= n) != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, i, j)
            basis[i] = j
        i += 1
    T = [row[:n] + [row[-1]] for row in T]
    cost = list(c)
    if not T:
        if any(x < 0 for x in cost):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in range(n)), Fraction(0))
    status = _run(T, basis, cost, list(range(n)))
    if status != "optimal":
        return LPResult(status)
    y = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        y[bi] = T[i][-1]
    return LPResult("optimal", tuple(y), sum((ci * yi for ci, yi in zip(cost, y)), Fraction(0)))


def linprog(c, ge=(), eq=(), nonneg=None):
    """Minimise ``c.x`` over ``x`` with ``a.x >= r`` for ``(a, r)`` in ``ge`` and
    ``a.x == r`` for ``(a, r)`` in ``eq``.

    ``nonneg`` lists, per variable, whether it is sign-constrained; by default
    every variable is free.  Returns an :class:`LPResult` whose status is one of
    ``optimal``, ``infeasible`` or ``unbounded``.
    """
    c = [as_fraction(x) for x in c]
    n = len(c)
    if nonneg is None:
        nonneg = [False] * n
    # column layout: one column per nonneg variable, two per free one, then slacks
    cols = []
    for j in range(n):
        cols.append((j, 1))
        if not nonneg[j]:
            cols.append((j, -1))
    ge = [([as_fraction(x) for x in a], as_fraction(r)) for a, r in ge]
    eq = [([as_fraction(x) for x in a], as_fraction(r)) for a, r in eq]
    for a, _ in ge + eq:
        if len(a) != n:
            raise ValueError("constraint of length %d for %d variables" % (len(a), n))
    nslack = len(ge)
    width = len(cols) + nslack
    A, b = [], []
    for k, (a, r) in enumerate(ge):
        row = [a[j] * s for j, s in cols] + [Fraction(0)] * nslack
        row[len(cols) + k] = Fraction(-1)
        A.append(row)
        b.append(r)
    for a, r in eq:
        A.append([a[j] * s for j, s in cols] + [Fraction(0)] * nslack)
        b.append(r)
    cost = [c[j] * s for j, s in cols] + [Fraction(0)] * nslack
    if not A:
        A, b = [[Fraction(0)] * width], [Fraction(0)]
    res = simplex_standard(cost, A, b)
    if not res.optimal:
        return res
    x = [Fraction(0)] * n
    for (j, s), y in zip(cols, res.x):
        x[j] += s * y
    return LPResult("optimal", tuple(x), res.value)


def feasible_point(ge=(), eq=(), n=None):
    """Some point satisfying the constraints, or ``None``."""
    if n is None:
        n = len((list(ge) + list(eq))[0][0])
    res = linprog([0] * n, ge, eq)
    return res.x if res.optimal else None
