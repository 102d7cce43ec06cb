"""
Orbifold curves and their fundamental groups
============================================

A pair (P^1, sum of (1 - 1/m_i) p_i) of non-positive degree falls into one of
three families.  This tour classifies a few of them, writes down the
orbifold presentation and asks coset enumeration what group it is.
"""
from fractions import Fraction as F

from orbigroups.curve_pairs import (CurveDivisor, abelianization_cover, classify_trichotomy,
                                    enumerate_standard_pairs, find_complement, identify_group,
                                    orbifold_presentation, pair_degree)

###############################################################################
# Coefficients are exact fractions.  The degree of K + D on P^1 is
# -2 plus the sum of the coefficients.

D = CurveDivisor.of(0, [F(1, 2), F(2, 3), F(3, 4)])
print("degree:", pair_degree(D))
print("class: ", classify_trichotomy(D))

###############################################################################
# The orbifold group has one loop per point, their product trivial, and
# the loop around a point of index m has order m.

op = orbifold_presentation(D)
print(op.presentation)
g = identify_group(D)
print(g.name, "of order", g.order, "derived series", g.derived_series)

###############################################################################
# Pairs with a coefficient-one complement are toric.  Their groups are
# cyclic or dihedral.

for coeffs in ([F(1, 2), F(1, 2), F(4, 5)], [F(3, 4), F(2, 3)], [F(1, 2), F(1, 2)]):
    D = CurveDivisor.of(0, coeffs)
    cls = classify_trichotomy(D)
    print(f"{[str(c) for c in coeffs]!s:28} {cls!s:14} {identify_group(D).name}")

###############################################################################
# Elliptic pairs have degree exactly zero.  A cyclic cover of small degree
# turns them into an elliptic curve, visible in the target genus.

for coeffs in ([F(1, 2)] * 4, [F(2, 3)] * 3, [F(1, 2), F(2, 3), F(5, 6)], [F(1, 2), F(3, 4), F(3, 4)]):
    D = CurveDivisor.of(0, coeffs)
    d, target = abelianization_cover(D)
    print(f"{classify_trichotomy(D)!s:22} cover of degree {d} onto genus {target.genus}")

###############################################################################
# Complements round coefficients up to multiples of 1/N.  The (2,3,5)
# pair needs N = 6.

cert = find_complement(CurveDivisor.of(0, [F(1, 2), F(2, 3), F(4, 5)]))
print("N =", cert.N, [str(c) for c in cert.gamma_plus.coeffs])

###############################################################################
# Sweeping all denominators up to 30 leaves only three sporadic pairs.

sporadic = [D for D in enumerate_standard_pairs(30) if classify_trichotomy(D).kind == "Sporadic"]
for D in sporadic:
    print(classify_trichotomy(D), identify_group(D).order)
