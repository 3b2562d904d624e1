"""Integer lattice-scan kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``BASELOCI_PURE_PYTHON`` is set to ``1``, the plain
Python module is used.  Inputs whose partial sums could leave the 64-bit
range always go to the Python code, which has unbounded integers.
"""

import os

from . import _pylattice

BACKEND = "python"
_fast = None
if os.environ.get("BASELOCI_PURE_PYTHON", "") != "1":
    try:
        from . import _lattice as _fast
        BACKEND = "compiled"
    except ImportError:
        _fast = None

_LIMIT = 1 << 62


def _fits(A, b, lo, hi, w=None):
    box = [max(abs(l), abs(h)) for l, h in zip(lo, hi)]
    for row, rhs in zip(A, b):
        if abs(rhs) + sum(abs(a) * x for a, x in zip(row, box)) >= _LIMIT:
            return False
    if w is not None and sum(abs(a) * x for a, x in zip(w, box)) >= _LIMIT:
        return False
    size = 1
    for l, h in zip(lo, hi):
        size *= max(0, h - l + 1)
    return size < _LIMIT


def _pick(A, b, lo, hi, w=None):
    if _fast is not None and _fits(A, b, lo, hi, w):
        return _fast
    return _pylattice


def enumerate_points(A, b, lo, hi):
    """All integer ``u`` with ``lo <= u <= hi`` and ``A u >= b``, in lex order."""
    return _pick(A, b, lo, hi).enumerate_points(A, b, lo, hi)


def count_points(A, b, lo, hi):
    """Number of integer points that :func:`enumerate_points` would return."""
    return _pick(A, b, lo, hi).count_points(A, b, lo, hi)


def min_dot(A, b, lo, hi, w):
    """Minimum of ``w . u`` over the feasible points, or ``None``."""
    return _pick(A, b, lo, hi, w).min_dot(A, b, lo, hi, w)


def first_point(A, b, lo, hi):
    """Lexicographically first feasible point, or ``None``."""
    return _pick(A, b, lo, hi).first_point(A, b, lo, hi)


__all__ = ["BACKEND", "enumerate_points", "count_points", "min_dot", "first_point"]
