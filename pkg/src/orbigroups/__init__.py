"""Orbifold fundamental groups of curve pairs, nilpotent extensions and toric surfaces.

Submodules:

* :mod:`orbigroups.curve_pairs` - standard coefficients, the toric / elliptic /
  sporadic classification, complements and orbifold presentations;
* :mod:`orbigroups.fpgroups` - words, coset enumeration, Smith normal form,
  Reidemeister-Schreier and small permutation groups;
* :mod:`orbigroups.nilpotent` - the Heisenberg-style groups ``H_k`` and their
  finite quotients;
* :mod:`orbigroups.toric_fan` - complete fans in the plane;
* :mod:`orbigroups.fibration` - coefficient formulas and structure certificates;
* :mod:`orbigroups.cli` - the JSON command-line front end (``python -m orbigroups``).
"""

from .curve_pairs import (INFINITY, CurveDivisor, StdCoeff, classify_trichotomy,
                          find_complement, orbifold_presentation, standard_approximation)
from .fpgroups import Presentation, abelianization, coset_enumerate

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "CurveDivisor", "StdCoeff", "classify_trichotomy", "find_complement",
    "orbifold_presentation", "standard_approximation", "Presentation", "abelianization",
    "coset_enumerate", "__version__",
]
