"""Unimodular rows, sections and the action of elementary matrices.

Run: python3 demos/02_unimodular_rows.py
"""

from wittkit import (ElementaryProduct, RingPresentation, act_right, check_unimodular,
                     find_elementary_reduction, power_last, section, standard_row,
                     verify_elementary_reduction)
from wittkit.matrices import E

sphere = RingPresentation("x y z", ["x^2 + y^2 + z^2 - 1"])
x, y, z = sphere.gens

# (x, y, z) generates the unit ideal on the sphere
v = check_unimodular([x, y, z])
print("v =", v, " certificate:", [str(c) for c in v.cofactors])

# a row together with a section w (v . w = 1)
rs = section(v)
print(rs)

# right action of E_31(1): add the third entry to the first
g = ElementaryProduct(sphere, 3, [E(3, 1, 1, 3, sphere)])
u = act_right(v, g)
print("v . E_31(1) =", u, " certificate:", [str(c) for c in u.cofactors])
print("undo with E_31(-1):", verify_elementary_reduction(u, g.inverse(), v))

# raise the last entry; the section is recomputed from scratch
sq = power_last(rs, 2)
print("(x, y, z^2) with section", [str(c) for c in sq.w])

# standard rows pi_{i,n}
print("pi_{4,4} =", standard_row(4, 4, sphere))

# best-effort elementary reduction to a row ending in 1 = 1^e
row = check_unimodular([1 + x, x, y])
found = find_elementary_reduction(row, 3, best_effort=True)
if found:
    word, target = found
    print("reduced", row, "to", target, "with", len(word), "generators")
