"""Alternating matrices, Pfaffians and the psi tower.

Run: python3 demos/03_pfaffians.py
"""

import random

from wittkit import AlternatingMatrix, GF, RingPresentation, det, orth_sum, pfaffian, psi

# generic 4 x 4 alternating matrix
R = RingPresentation("a b c d e f")
a, b, c, d, e, f = R.gens
M = AlternatingMatrix(R, [
    [0, a, b, c],
    [-a, 0, d, e],
    [-b, -d, 0, f],
    [-c, -e, -f, 0],
])
print("Pf =", pfaffian(M))
print("Pf^2 == det:", pfaffian(M) ** 2 == det(M))

# psi_2 and the tower psi_{2n+2} = psi_{2n} ⊥ psi_2
Q = RingPresentation()
for n in range(1, 4):
    print(f"psi_{2 * n}: Pf = {pfaffian(psi(n, Q))}")
print(psi(2, Q))

# Pf is multiplicative on orthogonal sums
print("Pf(M ⊥ psi_2) == Pf(M):", pfaffian(orth_sum(M, psi(1, R))) == pfaffian(M))

# random rank-8 check over F_5
F = RingPresentation("s", field=GF(5))
rng = random.Random(0)
rows = [[F(0)] * 8 for _ in range(8)]
for i in range(8):
    for j in range(i + 1, 8):
        v = F(rng.randrange(5)) + F.gen("s") * rng.randrange(5)
        rows[i][j], rows[j][i] = v, -v
N = AlternatingMatrix(F, rows)
print("rank 8 over F5[s]: Pf =", pfaffian(N), "; Pf^2 == det:", pfaffian(N) ** 2 == det(N))
