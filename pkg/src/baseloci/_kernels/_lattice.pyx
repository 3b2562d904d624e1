# cython: boundscheck=False, wraparound=False, cdivision=True
"""Machine-integer versions of the lattice-scan kernels.

Same contract as the pure-Python module.  Callers must make sure every
partial sum fits in 64 bits; the package-level wrapper checks this before
dispatching here.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


cdef inline int64_t _fdiv(int64_t a, int64_t b) nogil:
    # floor division for b > 0
    cdef int64_t q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef inline int64_t _cdiv(int64_t a, int64_t b) nogil:
    # ceiling division for b > 0
    cdef int64_t q = a / b
    if (a % b != 0) and (a > 0):
        q += 1
    return q


cdef class _Scan:
    cdef int64_t *A
    cdef int64_t *b
    cdef int64_t *lo
    cdef int64_t *hi
    cdef int64_t *u
    cdef int m, n

    def __cinit__(self, A, b, lo, hi):
        cdef int i, j
        self.m = len(b)
        self.n = len(lo)
        self.A = <int64_t *> malloc(max(1, self.m * self.n) * sizeof(int64_t))
        self.b = <int64_t *> malloc(max(1, self.m) * sizeof(int64_t))
        self.lo = <int64_t *> malloc(max(1, self.n) * sizeof(int64_t))
        self.hi = <int64_t *> malloc(max(1, self.n) * sizeof(int64_t))
        self.u = <int64_t *> malloc(max(1, self.n) * sizeof(int64_t))
        if not (self.A and self.b and self.lo and self.hi and self.u):
            raise MemoryError()
        for i in range(self.m):
            row = A[i]
            for j in range(self.n):
                self.A[i * self.n + j] = row[j]
            self.b[i] = b[i]
        for j in range(self.n):
            self.lo[j] = lo[j]
            self.hi[j] = hi[j]
            self.u[j] = lo[j]

    def __dealloc__(self):
        free(self.A)
        free(self.b)
        free(self.lo)
        free(self.hi)
        free(self.u)

    cdef bint empty_box(self):
        cdef int j
        for j in range(self.n):
            if self.lo[j] > self.hi[j]:
                return True
        return False

    cdef bint last_interval(self, int64_t *lo_out, int64_t *hi_out) nogil:
        cdef int i, j, n = self.n
        cdef int64_t s, a, c
        cdef int64_t lo_v = self.lo[n - 1]
        cdef int64_t hi_v = self.hi[n - 1]
        for i in range(self.m):
            s = self.b[i]
            for j in range(n - 1):
                s -= self.A[i * n + j] * self.u[j]
            a = self.A[i * n + n - 1]
            if a > 0:
                c = _cdiv(s, a)
                if c > lo_v:
                    lo_v = c
            elif a < 0:
                c = _fdiv(-s, -a)
                if c < hi_v:
                    hi_v = c
            elif s > 0:
                return False
            if lo_v > hi_v:
                return False
        lo_out[0] = lo_v
        hi_out[0] = hi_v
        return True

    cdef bint advance(self) nogil:
        cdef int k = self.n - 2
        while k >= 0:
            if self.u[k] < self.hi[k]:
                self.u[k] += 1
                return True
            self.u[k] = self.lo[k]
            k -= 1
        return False

    cdef bint trivially_feasible(self):
        cdef int i
        for i in range(self.m):
            if self.b[i] > 0:
                return False
        return True


def enumerate_points(A, b, lo, hi):
    cdef _Scan sc = _Scan(A, b, lo, hi)
    cdef int64_t a, z, x
    cdef int n = sc.n
    if n == 0:
        return [()] if sc.trivially_feasible() else []
    if sc.empty_box():
        return []
    out = []
    while True:
        if sc.last_interval(&a, &z):
            head = tuple([sc.u[j] for j in range(n - 1)])
            x = a
            while x <= z:
                out.append(head + (x,))
                x += 1
        if not sc.advance():
            break
    return out


def count_points(A, b, lo, hi):
    cdef _Scan sc = _Scan(A, b, lo, hi)
    cdef int64_t a, z
    cdef object total = 0
    cdef int64_t chunk = 0
    if sc.n == 0:
        return 1 if sc.trivially_feasible() else 0
    if sc.empty_box():
        return 0
    with nogil:
        while True:
            if sc.last_interval(&a, &z):
                chunk += z - a + 1
            if not sc.advance():
                break
    total += chunk
    return total


def min_dot(A, b, lo, hi, w):
    """Minimum of ``w . u`` over the feasible points; ``None`` if there are none."""
    cdef _Scan sc = _Scan(A, b, lo, hi)
    cdef int n = sc.n
    cdef int64_t a, z, s, best = 0
    cdef bint found = False
    cdef int j
    cdef int64_t *wv
    if n == 0:
        return 0 if sc.trivially_feasible() else None
    if sc.empty_box():
        return None
    wv = <int64_t *> malloc(n * sizeof(int64_t))
    if not wv:
        raise MemoryError()
    for j in range(n):
        wv[j] = w[j]
    with nogil:
        while True:
            if sc.last_interval(&a, &z):
                s = 0
                for j in range(n - 1):
                    s += wv[j] * sc.u[j]
                if wv[n - 1] >= 0:
                    s += wv[n - 1] * a
                else:
                    s += wv[n - 1] * z
                if not found or s < best:
                    best = s
                    found = True
            if not sc.advance():
                break
    free(wv)
    return best if found else None


def first_point(A, b, lo, hi):
    """Lexicographically first feasible point, or ``None``."""
    cdef _Scan sc = _Scan(A, b, lo, hi)
    cdef int n = sc.n
    cdef int64_t a, z
    if n == 0:
        return () if sc.trivially_feasible() else None
    if sc.empty_box():
        return None
    while True:
        if sc.last_interval(&a, &z):
            return tuple([sc.u[j] for j in range(n - 1)]) + (a,)
        if not sc.advance():
            break
    return None
