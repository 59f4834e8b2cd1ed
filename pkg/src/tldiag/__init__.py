"""Exact diagram calculus for finite and affine Temperley-Lieb algebras.

Modules:

* :mod:`tldiag.scalars` -- integer Laurent polynomials, quantum integers,
  loop-parameter polynomials, and the n-basis transitions.
* :mod:`tldiag.tl_diagram` -- finite diagrams, composition with loop
  counting, cycle types, and the diagram classes d_gamma.
* :mod:`tldiag.affine_diagram` -- affine diagrams with pole windings,
  generators, and the pole-wrapped companions.
* :mod:`tldiag.algebra` -- formal sums, word evaluation, and the three
  constructions of the commuting Jucys-Murphy family.
* :mod:`tldiag.shapes` -- partitions, skew shapes, standard tableaux, and
  the branching graphs.
* :mod:`tldiag.spectra` -- content eigenvalues, the two-row eigenvalue
  formulas, and the central-element constants.
* :mod:`tldiag.repcheck` -- exact-rational regular-representation checks.
* :mod:`tldiag.cli` -- the ``tldiag`` command-line front end.
"""

from .scalars import IntLaurent, ParamScalar, NPoly, qint, exact_divide, to_n_basis

__all__ = [
    "IntLaurent",
    "ParamScalar",
    "NPoly",
    "qint",
    "exact_divide",
    "to_n_basis",
]

__version__ = "0.1.0"
