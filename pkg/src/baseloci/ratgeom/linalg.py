"""Exact linear algebra over the rationals.

Vectors are tuples and matrices are lists of row tuples; every entry is a
``Fraction`` (integers are accepted on input).  Nothing here ever rounds.
"""

from fractions import Fraction
from math import gcd


def as_fraction(x):
    """Coerce ``x`` to a Fraction.  Strings of the form ``"p/q"`` are accepted;
    floats are refused because they would smuggle in rounding."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("refusing float %r; pass an int, Fraction or 'p/q' string" % x)
    raise TypeError("cannot read %r as a rational" % (x,))


def qvec(v):
    return tuple(as_fraction(x) for x in v)


def qmat(rows):
    rows = [qvec(r) for r in rows]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("dimension mismatch: %d vs %d" % (len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(A, x):
    return tuple(dot(row, x) for row in A)


def transpose(A, ncols=None):
    if not A:
        return [() for _ in range(ncols or 0)]
    return [tuple(col) for col in zip(*A)]


def mat_mul(A, B):
    Bt = transpose(B)
    return [tuple(dot(r, c) for c in Bt) for r in A]


def identity(n):
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def rref(A, ncols=None):
    """Reduced row echelon form.  Returns ``(R, pivots)``."""
    R = [list(as_fraction(x) for x in row) for row in A]
    if not R:
        return [], []
    m, n = len(R), len(R[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return [tuple(row) for row in R], pivots


def rank(A):
    return len(rref(A)[1]) if A else 0


def nullspace(A, n=None):
    """A basis of ``{x : A x = 0}``; ``n`` is needed when ``A`` has no rows."""
    if not A:
        return identity(n or 0)
    n = len(A[0])
    R, piv = rref(A)
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, p in enumerate(piv):
            x[p] = -R[i][f]
        basis.append(tuple(x))
    return basis


def solve_linear(A, b):
    """One exact solution of ``A x = b`` or ``None`` when inconsistent.

    Free variables are set to zero, so the answer is deterministic."""
    A = qmat(A)
    b = qvec(b)
    if len(A) != len(b):
        raise ValueError("dimension mismatch: %d rows but %d right-hand sides" % (len(A), len(b)))
    if not A:
        return ()
    n = len(A[0])
    R, piv = rref([row + (rhs,) for row, rhs in zip(A, b)])
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(piv):
        x[p] = R[i][n]
    return tuple(x)


def det(A):
    A = [list(as_fraction(x) for x in row) for row in A]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def inverse(A):
    n = len(A)
    R, piv = rref([tuple(row) + e for row, e in zip(qmat(A), identity(n))])
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def _check_symmetric(M):
    n = len(M)
    for i in range(n):
        if len(M[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(i):
            if M[i][j] != M[j][i]:
                raise ValueError("matrix is not symmetric at (%d, %d)" % (i, j))


def is_negative_definite(M):
    """Leading principal minors alternate in sign, starting negative."""
    M = qmat(M)
    _check_symmetric(M)
    for k in range(1, len(M) + 1):
        d = det([row[:k] for row in M[:k]])
        if d == 0 or (d > 0) != (k % 2 == 0):
            return False
    return True


def signature(M):
    """``(positive, negative, zero)`` counts of a symmetric form, found by
    congruence diagonalisation."""
    A = [list(r) for r in qmat(M)]
    _check_symmetric(A)
    n = len(A)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if A[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + e_j, making the diagonal entry 2 A[i][j]
            for t in range(n):
                A[i][t] += A[j][t]
            for t in range(n):
                A[t][i] += A[t][j]
            k = i
        p = A[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = A[i][k] / p
            if f:
                for t in range(n):
                    A[i][t] -= f * A[k][t]
                for t in range(n):
                    A[t][i] -= f * A[t][k]
    return pos, neg, n - pos - neg


def lcm(a, b):
    return a // gcd(a, b) * b if a and b else 0


def primitive(v):
    """The primitive integer vector on the ray through the rational vector ``v``."""
    v = qvec(v)
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in ints)


def integer_kernel(E, n):
    """A lattice basis of ``{x in Z^n : E x = 0}`` for a rational matrix ``E``.

    Column operations bring ``E U`` to echelon form with unimodular ``U``; the
    columns of ``U`` under the zero block span the kernel lattice."""
    rows = []
    for row in E:
        row = qvec(row)
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        rows.append([int(x * den) for x in row])
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # U[col] is a column vector
    M = [[rows[r][j] for r in range(len(rows))] for j in range(n)]  # M[col] = E applied to U[col]
    live = list(range(n))
    for r in range(len(rows)):
        while True:
            nz = [c for c in live if M[c][r] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda c: (abs(M[c][r]), c))
            for c in nz:
                if c == piv:
                    continue
                q = M[c][r] // M[piv][r]
                M[c] = [a - q * b for a, b in zip(M[c], M[piv])]
                U[c] = [a - q * b for a, b in zip(U[c], U[piv])]
        if nz:
            live.remove(nz[0])
    return [tuple(U[c]) for c in live]
