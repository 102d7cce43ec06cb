"""
Toric surfaces from fans
========================

A complete fan in Z^2 is a cyclic list of primitive rays.  Cone indices
give the singular points, and the rays determine every self-intersection.
"""
from orbigroups.toric_fan import (BoundarySum, Fan2D, complexity, cone_table, hirzebruch,
                                  hj_resolve, recognize, resolve_fan, self_intersections,
                                  smooth_fans, star_subdivide)

###############################################################################
# The weighted projective plane P(1,2,3) has an A_1 and an A_2 point.

f = Fan2D(((1, 0), (0, 1), (-2, -3)))
print(recognize(f))
for row in cone_table(f):
    print(row)

###############################################################################
# Adding the ray (0,-1) blows up the index-3 point, leaving two A_1 points.

g = star_subdivide(f, (0, -1))
print([row["label"] for row in cone_table(g)])
print([str(s) for s in self_intersections(g)])

###############################################################################
# Hirzebruch-Jung resolution inserts a chain of rational curves.

print(hj_resolve((1, 0), (-1, 3)))    # one -3 curve
print(hj_resolve((1, 0), (1, 3)))     # two -2 curves
print(recognize(resolve_fan(f)), resolve_fan(f).rays)

###############################################################################
# On a smooth complete fan the squares add up to 12 - 3r.

s2 = hirzebruch(2)
print(recognize(s2), [str(x) for x in self_intersections(s2)])
fans = smooth_fans(7)
print(len(fans), "smooth fans,",
      all(sum(self_intersections(h)) == 12 - 3 * len(h) for h in fans))

###############################################################################
# The toric boundary has complexity zero.

value, toric = complexity(BoundarySum.toric_boundary(f))
print(value, toric)
