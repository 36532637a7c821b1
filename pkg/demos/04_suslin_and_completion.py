"""Suslin matrices and the 3 x 3 completion of (a, b, c^2).

Run: python3 demos/04_suslin_and_completion.py
"""

from wittkit import Matrix, RingPresentation, RowWithSection, det, factorial_completion_3, suslin_matrix

# generic rows v, w of length 3
R = RingPresentation("v0 v1 v2 w0 w1 w2")
v, w = R.gens[:3], R.gens[3:]
S = suslin_matrix(v, w).matrix
print("S_2(v, w) =")
print(S)
vw = sum((p * q for p, q in zip(v, w)), R.zero())
print("S(v,w) S(w,v)^t == (v.w) I:", S @ suslin_matrix(w, v).matrix.T == Matrix.identity(R, 4).scale(vw))
print("det S_2 == (v.w)^2:", det(S) == vw ** 2)

# on S_5, where v.w = 1, the Suslin matrix has determinant 1
S5 = RingPresentation("x1 x2 x3 y1 y2 y3", ["x1*y1 + x2*y2 + x3*y3 - 1"])
print("det over S5:", det(suslin_matrix(S5.gens[:3], S5.gens[3:]).matrix))

# completion of (a, b, c^2) over the generic ring a p + b q + c r = 1
G = RingPresentation("a b c p q r", ["a*p + b*q + c*r - 1"])
a, b, c, p, q, r = G.gens
B = factorial_completion_3(RowWithSection.from_lists(G, [a, b, c], [p, q, r]))
print("completion:")
print(B)
print("det =", det(B))
