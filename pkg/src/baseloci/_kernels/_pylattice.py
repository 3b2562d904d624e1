"""Reference lattice-scan kernels in plain Python.

Every kernel scans the integer points ``u`` of the box ``lo <= u <= hi`` that
satisfy ``A u >= b`` (all entries integers).  The innermost coordinate is never
iterated blindly: for fixed outer coordinates the constraints cut it down to an
interval, which is what makes counting cheap.
"""


def _floordiv(a, b):
    return a // b


def _ceildiv(a, b):
    return -((-a) // b)


def _last_interval(A, b, u, n, lo_last, hi_last):
    # bounds on u[n-1] given u[0..n-2]
    lo_v, hi_v = lo_last, hi_last
    for row, rhs in zip(A, b):
        s = rhs
        for j in range(n - 1):
            s -= row[j] * u[j]
        a = row[n - 1]
        if a > 0:
            c = _ceildiv(s, a)
            if c > lo_v:
                lo_v = c
        elif a < 0:
            # a*x >= s with a < 0  <=>  x <= (-s) / (-a)
            c = _floordiv(-s, -a)
            if c < hi_v:
                hi_v = c
        elif s > 0:
            return 1, 0
        if lo_v > hi_v:
            return 1, 0
    return lo_v, hi_v


def _outer_points(lo, hi, n):
    if n <= 1:
        yield []
        return
    u = list(lo[: n - 1])
    while True:
        yield u
        k = n - 2
        while k >= 0:
            if u[k] < hi[k]:
                u[k] += 1
                break
            u[k] = lo[k]
            k -= 1
        if k < 0:
            return


def enumerate_points(A, b, lo, hi):
    n = len(lo)
    if n == 0:
        return [()] if all(x <= 0 for x in b) else []
    if any(l > h for l, h in zip(lo, hi)):
        return []
    out = []
    for u in _outer_points(lo, hi, n):
        a, z = _last_interval(A, b, u, n, lo[n - 1], hi[n - 1])
        head = tuple(u)
        for x in range(a, z + 1):
            out.append(head + (x,))
    return out


def count_points(A, b, lo, hi):
    n = len(lo)
    if n == 0:
        return 1 if all(x <= 0 for x in b) else 0
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    total = 0
    for u in _outer_points(lo, hi, n):
        a, z = _last_interval(A, b, u, n, lo[n - 1], hi[n - 1])
        if z >= a:
            total += z - a + 1
    return total


def min_dot(A, b, lo, hi, w):
    """Minimum of ``w . u`` over the feasible points; ``None`` if there are none."""
    n = len(lo)
    if n == 0:
        return 0 if all(x <= 0 for x in b) else None
    if any(l > h for l, h in zip(lo, hi)):
        return None
    best = None
    wl = w[n - 1]
    for u in _outer_points(lo, hi, n):
        a, z = _last_interval(A, b, u, n, lo[n - 1], hi[n - 1])
        if z < a:
            continue
        s = 0
        for j in range(n - 1):
            s += w[j] * u[j]
        s += wl * (a if wl >= 0 else z)
        if best is None or s < best:
            best = s
    return best


def first_point(A, b, lo, hi):
    """Lexicographically first feasible point, or ``None``."""
    n = len(lo)
    if n == 0:
        return () if all(x <= 0 for x in b) else None
    if any(l > h for l, h in zip(lo, hi)):
        return None
    for u in _outer_points(lo, hi, n):
        a, z = _last_interval(A, b, u, n, lo[n - 1], hi[n - 1])
        if z >= a:
            return tuple(u) + (a,)
    return None
