"""
Post covering groups
====================

Every n-ary group embeds into an ordinary group of order m(n-1) whose
n-fold products realize the n-ary operation.  The carrier sits inside as
the <x,0> slice, the retract reappears as a normal subgroup H with cyclic
quotient of order n-1, and representations transfer back and forth.
"""

import numpy as np

import polyadic as P

T2 = P.NaryGroup.from_function(3, 2, lambda x, y, z: (x + y + z) % 2)
T2b = P.NaryGroup.from_function(3, 2, lambda x, y, z: (x + y + z + 1) % 2)
Z4M = P.NaryGroup.from_function(3, 4, lambda x, y, z: (x - y + z) % 4)
Q4 = P.NaryGroup.from_function(4, 2, lambda w, x, y, z: (w + x + y + z + 1) % 2)

#%%
# Two order-2 ternary groups with very different covers: (Z2, x+y+z) covers
# to the Klein four-group, while the shifted (Z2, x+y+z+1) covers to Z4.

for name, group in [("T2", T2), ("T2b", T2b), ("Z4M", Z4M), ("Q4", Q4)]:
    cov = P.covering_group(group, 0)
    print(f"{name}: cover order {cov.group.order}, shape {P.small_group_tag(cov.group)}")

#%%
# The difference group (Z4, x-y+z) covers to the dihedral group D4: the
# embedded slice consists of the four reflections.

cov = P.covering_group(Z4M, 0)
print("orders of embedded elements:", [cov.group.element_order(int(i)) for i in cov.embed])

#%%
# H = {<x, n-2>} is a normal subgroup isomorphic to the retract, the
# quotient by it is cyclic of order n-1, and the identity sits at
# <skew(anchor), n-2>.  cover_H checks all of that.

h = P.cover_H(cov)
print("H:", h, " identity pair:", cov.pair_of(cov.group.identity))

#%%
# The embedding law: multiplying n embedded elements projects back onto the
# n-ary operation, for every tuple.

print("embedding verified:", P.verify_embedding(cov).passed)

#%%
# A covering-group representation restricts to the n-ary group exactly when
# its kernel meets the embedded carrier.  For the Klein cover of T2, three
# of the four characters make it through.

cov = P.covering_group(T2, 0)
kept = 0
for row in P.abelian_characters(cov.group):
    gamma = P.BinaryRepresentation(cov.group, row.reshape(-1, 1, 1))
    kept += P.lift_module_from_cover(cov, gamma) is not None
print("Klein characters that restrict:", kept, "of 4")
