"""The Vaserstein matrix, the hyperbolic map and certified Witt equivalences.

Run: python3 demos/05_vaserstein_and_witt.py
"""

from wittkit import (ElementaryProduct, RingHom, RingPresentation, RowWithSection, WittWitness,
                     evaluate, hyperbolic, pfaffian, psi, pushforward, section, suslin_matrix,
                     vaserstein_symbol, verify_witt_equiv, verify_wsl_equiv)
from wittkit.matrices import E, SE

sphere = RingPresentation("x y z", ["x^2 + y^2 + z^2 - 1"])
x, y, z = sphere.gens

V = vaserstein_symbol(section([x, y, z])).matrix
print("V((x,y,z),(x,y,z)) =")
print(V)
print("Pf =", pfaffian(V))

# V(pi_1, e_1) is psi_4
Q = RingPresentation()
print("V(pi1, e1) == psi_4:", vaserstein_symbol(RowWithSection.from_lists(Q, [1, 0, 0], [1, 0, 0])).matrix == psi(2, Q))

# the hyperbolic image of an elementary matrix is certified equivalent to psi by the word itself
word = ElementaryProduct(sphere, 4, [E(1, 3, x, 4), E(4, 2, y * z, 4), SE(2, 3, x - 1, 4)])
H = hyperbolic(evaluate(word))
print("H(phi) ~ psi_4:", verify_witt_equiv(H, psi(2, sphere), WittWitness(0, word.embed(8))))

# a wrong witness is rejected (which says nothing about inequivalence)
bad = WittWitness(0, ElementaryProduct(sphere, 8, [E(1, 5, x, 8)]))
print("bad witness:", verify_witt_equiv(H, psi(2, sphere), bad))

# W_SL twist: the Suslin matrix over S_5 has determinant 1
S5 = RingPresentation("x1 x2 x3 y1 y2 y3", ["x1*y1 + x2*y2 + x3*y3 - 1"])
sigma = suslin_matrix(S5.gens[:3], S5.gens[3:]).matrix
Hs = hyperbolic(sigma)
print("H(sigma) ~ sigma^t psi sigma:", verify_wsl_equiv(Hs, psi(2, S5), WittWitness(0, ElementaryProduct(S5, 8)), sigma))

# functoriality along S_5 -> sphere
h = RingHom(S5, sphere, [x, y, z, x, y, z])
rs = RowWithSection.from_lists(S5, S5.gens[:3], S5.gens[3:])
print("pushforward(V) == V(h(a), h(b)):", pushforward(h, vaserstein_symbol(rs).matrix) == V)
