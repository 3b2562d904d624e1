"""Exact rational linear algebra, linear programming and polyhedral geometry."""

from .cones import Cone, Fan, hilbert_basis, pulling_triangulation, smooth_refine
from .linalg import (as_fraction, det, dot, integer_kernel, inverse, is_negative_definite,
                     nullspace, primitive, qmat, qvec, rank, rref, signature, solve_linear)
from .lp import LPResult, linprog
from .polyhedra import (Polyhedron, count_lattice_points, first_lattice_point, lattice_min,
                        lattice_points, minimize_linear, polytope_volume)

__all__ = [
    "Cone", "Fan", "hilbert_basis", "pulling_triangulation", "smooth_refine",
    "as_fraction", "det", "dot", "integer_kernel", "inverse", "is_negative_definite",
    "nullspace", "primitive", "qmat", "qvec", "rank", "rref", "signature", "solve_linear",
    "LPResult", "linprog",
    "Polyhedron", "count_lattice_points", "first_lattice_point", "lattice_min",
    "lattice_points", "minimize_linear", "polytope_volume",
]
