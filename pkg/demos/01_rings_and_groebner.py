"""Polynomial rings, quotient rings and ideal membership.

Run: python3 demos/01_rings_and_groebner.py
"""

from wittkit import GF, PolyRing, RingPresentation, groebner_basis, parse_poly

# polynomials over Q, grevlex by default
R = PolyRing("x y z")
f = parse_poly("x^2 + y^2 + z^2 - 1", R)
print("f =", f)
print("f^2 =", f ** 2)

# a Groebner basis of <f, x>: x is already a generator, f reduces to y^2 + z^2 - 1
for g in groebner_basis([f, parse_poly("x", R)]):
    print("  gb:", g)

# the unit ideal collapses to [1]
print("<x, 1 - x> ->", [str(g) for g in groebner_basis([parse_poly("x", R), parse_poly("1 - x", R)])])

# the coordinate ring of the 2-sphere; elements are stored as normal forms
sphere = RingPresentation("x y z", ["x^2 + y^2 + z^2 - 1"])
x, y, z = sphere.gens
print("x^2 + y^2 + z^2 =", x * x + y * y + z * z)
print("x^3 =", x ** 3)  # x^3 is reduced against the relation

# 1 lies in <x, y, z>; the cofactors are a certificate
print("cofactors of 1 in <x, y, z>:", [str(c) for c in sphere.ideal_membership(1, [x, y, z])])

# same question in the plane: no certificate exists
plane = RingPresentation("x y")
print("cofactors of 1 in <x, y> over Q[x, y]:", plane.ideal_membership(1, plane.gens))

# the ring S_5 = Q[x1..x3, y1..y3]/(x.y - 1)
S5 = RingPresentation("x1 x2 x3 y1 y2 y3", ["x1*y1 + x2*y2 + x3*y3 - 1"])
print("in S5, x1*y1 + x2*y2 + x3*y3 =", S5("x1*y1 + x2*y2 + x3*y3"))

# the same presentation over a prime field
F7 = RingPresentation("t", ["t^2 - 3"], field=GF(7))
t = F7.gen("t")
print("over F7 with t^2 = 3: t^5 =", t ** 5, " 1/t =", F7.inverse(t))

# the text format round-trips
text = sphere.to_text()
print(text, end="")
assert RingPresentation.from_text(text) == sphere
