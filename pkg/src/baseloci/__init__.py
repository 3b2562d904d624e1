"""Exact invariants of base loci on surfaces, toric varieties and monomial graded systems.

Every model is numerical: a class is its vector of intersection numbers or
torus-invariant coefficients, so two numerically equivalent divisors get the
same base loci.  Stable base loci that depend on torsion in the Picard group
are outside what these models can express.
"""

__version__ = "0.1.0"
