"""Exact-arithmetic toolkit for differential Lie algebras of arbitrary weight.

Submodules:
  linalg        exact rational matrices (rank, kernel, solve, homology)
  permutations  shuffles, pointed shuffles, signatures, Koszul signs
  multilinear   alternating and graded-symmetric multilinear maps, suspension
  liealg        differential Lie algebras, representations, LieAct triples
  nr            the Nijenhuis-Richardson circle product and bracket
  linfty        L-infinity[1] structures: derived brackets, MC, twisting
  cohomology    the three cochain complexes and their bridges
  extensions    abelian extensions and their classification
  deformations  truncated formal deformations and rigidification
  homotopy      homotopy differential Lie algebras on graded spaces
  samples       seeded random generators of valid fixtures
  cli           command-line interface
"""

__version__ = "1.0.0"
