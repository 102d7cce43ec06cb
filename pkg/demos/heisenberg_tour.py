"""
Arithmetic in the groups H_k
============================

H_k = <a, b, c | [a,b] = c^k, c central>.  Every element is a^x b^y c^z,
so products reduce to integer formulas.
"""
from orbigroups.fpgroups import abelianization
from orbigroups.fibration import bundle_pi1
from orbigroups.nilpotent import (evaluate, generators, h_commutator, h_mul, h_pow,
                                  is_virtually_abelian, min_abelian_normal_index,
                                  rewrite_normal_form, sqrt_lower_bound)

###############################################################################
# Commutators of powers grow quadratically.

a, b, c = generators(2)
print(h_commutator(h_pow(a, 3), h_pow(b, 3)))   # c^18
print(h_mul(b, a))                              # b a = a b c^-k

###############################################################################
# The closed form agrees with plain word rewriting.

w = [1, 2, -1, 3, -2, 2, 1]
print(evaluate(w, 2).triple, rewrite_normal_form(w, 2))

###############################################################################
# For k != 0 the group is not virtually abelian: the commutator of the l-th
# powers of a and b is never trivial.

ok, witness = is_virtually_abelian(3)
print(ok, [str(witness.at(l)) for l in (1, 2, 5)])
print(abelianization(bundle_pi1(3)))

###############################################################################
# In the finite quotient c^m = 1 an abelian normal subgroup needs index at
# least sqrt(m/k).  The lattice search finds the true minimum.

for m in (4, 9, 12, 16, 30):
    index, datum = min_abelian_normal_index(m, 1)
    print(f"m={m:2}  bound {sqrt_lower_bound(m, 1)}  minimum {index}  basis {datum.basis}")
