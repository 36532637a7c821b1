"""Orbits of elementary and symplectic generators on Um_4(F_p).

Run: python3 demos/06_finite_field_orbits.py
"""

from wittkit import RingPresentation, orbit_bruteforce
from wittkit.fields import GF
from wittkit.matrices import SE

for p in (2, 3, 5):
    for gens in ("E", "SE"):
        part = orbit_bruteforce(p, 4, gens)
        print(f"p={p} {gens:>2}: {part.summary()}   (p^4 - 1 = {p ** 4 - 1})")

# a generating family that only moves the first hyperbolic pair is not transitive
F = RingPresentation(field=GF(2))
part = orbit_bruteforce(2, 4, [SE(1, 2, 1, 4, F), SE(2, 1, 1, 4, F)])
print("first pair only:", part.summary())
