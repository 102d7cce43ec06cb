"""
Coefficients along fibrations and covers
========================================

Adjunction to a curve, multiple fibers and ramified covers all move
boundary coefficients around by simple exact formulas.
"""
from fractions import Fraction as F

from orbigroups.curve_pairs import CurveDivisor, classify_trichotomy
from orbigroups.fibration import (AdjunctionPointDatum, CoverCoeffDatum, FibrationFiberDatum,
                                  adjunction_coefficient, base_pair_coefficient,
                                  check_compatible, nori_certificate, ramification_pullback)

###############################################################################
# A curve through points of orbifold index 2, 3 and 4 picks up the
# (2,3,4) configuration.  Another boundary curve through the index-2 point
# with coefficient 1/2 gives the same 3/4.

pts = [AdjunctionPointDatum(2), AdjunctionPointDatum(3), AdjunctionPointDatum(4)]
coeffs = [adjunction_coefficient(p) for p in pts]
print([str(c) for c in coeffs], classify_trichotomy(CurveDivisor.of(0, coeffs)))
print(adjunction_coefficient(AdjunctionPointDatum(2, ((F(1, 2), 1),))))

###############################################################################
# A double fiber carrying coefficient 1/2 contributes 3/4 on the base.

print(base_pair_coefficient(FibrationFiberDatum(2, F(1, 2))))
print(base_pair_coefficient(FibrationFiberDatum(3, F(0))))

###############################################################################
# Pulling back 3/4 under a double cover gives 1/2, and the two are
# compatible.

a = ramification_pullback(F(3, 4), 2)
print(a, check_compatible(CoverCoeffDatum(2, F(3, 4), a)))

###############################################################################
# The structure certificate depends only on the types of fiber and base.

for fiber, base in (("Elliptic", "Elliptic"), ("Sporadic", "Elliptic"),
                    ("Toric", "Elliptic"), ("Sporadic", "Toric")):
    c = nori_certificate(fiber, base)
    print(f"{fiber:9} over {base:9} {c.kind_label:20} index <= {c.index_bound}")
