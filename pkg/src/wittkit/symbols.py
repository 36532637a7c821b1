"""Explicit matrix constructions from a row and a section.

* Suslin matrices S_r(v, w) of size 2^r for rows of length r + 1;
* a determinant-one 3 x 3 completion of (a, b, c^2) from a section of (a, b, c);
* the 4 x 4 alternating Vaserstein matrix V(a, b) with Pfaffian a.b.
"""

from dataclasses import dataclass
from math import factorial

from .matrices import AlternatingMatrix, Matrix, MatrixError, det, pfaffian
from .umrows import RowWithSection


class ConstructionError(ArithmeticError):
    """A construction failed its own postcondition check (an implementation bug)."""


def _entries(ring, v):
    if isinstance(v, RowWithSection):
        raise TypeError("pass the row and the section separately")
    if hasattr(v, "entries"):
        v = v.entries
    return [ring(x) for x in v]


def _suslin_rows(v, w, ring):
    if len(v) == 1:
        return [[v[0]]]
    v0, vr = v[0], v[1:]
    w0, wr = w[0], w[1:]
    top_right = _suslin_rows(vr, wr, ring)
    other = _suslin_rows(wr, vr, ring)
    k = len(top_right)
    zero = ring.zero()
    rows = []
    for i in range(k):
        rows.append([v0 if i == j else zero for j in range(k)] + top_right[i])
    for i in range(k):
        # -S_{r-1}(w', v')^t
        rows.append([-other[j][i] for j in range(k)] + [w0 if i == j else zero for j in range(k)])
    return rows


@dataclass(frozen=True)
class SuslinMatrix:
    order: int
    v: tuple
    w: tuple
    matrix: Matrix


def suslin_matrix(v, w, ring=None):
    """S_r(v, w) for rows v, w of length r + 1.

    S_0(v, w) = (v_0) and
    S_r(v, w) = [[v_0 I, S_{r-1}(v', w')], [-S_{r-1}(w', v')^t, w_0 I]].
    Satisfies S_r(v, w) S_r(w, v)^t = (v.w) I for any v, w.
    """
    if ring is None:
        ring = (v.ring if hasattr(v, "ring") else v[0].ring)
    v = _entries(ring, v)
    w = _entries(ring, w)
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    if not v:
        raise ValueError("empty row")
    rows = _suslin_rows(v, w, ring)
    return SuslinMatrix(len(v) - 1, tuple(v), tuple(w), Matrix(ring, rows))


def factorial_completion_3(rs):
    """Determinant-one 3 x 3 matrix with first row (a, b, c^2).

    With (a, b, c).(p, q, r) = 1, put y = (c, -q, p) and
    n = (r, c*p - b, a + c*q).  Then n.y = 1, and
    M = y y^t + K(n), K(n) the skew matrix with kernel n, has
    det M = (n.y)^2 = 1 and first row (c^2, a, b).  A cyclic column shift
    (even permutation) moves it to (a, b, c^2).
    """
    if len(rs) != 3:
        raise ValueError("factorial_completion_3 needs a row of length 3")
    ring = rs.ring
    a, b, c = rs.v
    p, q, r = rs.w
    y = (c, -q, p)
    n1, n2, n3 = r, c * p - b, a + c * q
    K = ((0, n3, -n2), (-n3, 0, n1), (n2, -n1, 0))
    M0 = [[y[i] * y[j] + K[i][j] for j in range(3)] for i in range(3)]
    M = Matrix(ring, [[row[1], row[2], row[0]] for row in M0])
    if not verify_factorial_completion(rs.v, M):
        raise ConstructionError("completion of (a, b, c^2) failed verification")
    return M


def verify_factorial_completion(v, M):
    """True iff M has determinant 1 and first row (v_1, ..., v_{n-1}, v_n^((n-1)!))."""
    n = len(v)
    if M.shape != (n, n):
        return False
    ring = M.ring
    target = [ring(x) for x in v]
    target[-1] = target[-1] ** factorial(n - 1)
    return list(M.rows[0]) == target and det(M) == 1


@dataclass(frozen=True)
class VasersteinMatrix:
    source: RowWithSection
    matrix: AlternatingMatrix


def vaserstein_matrix(a, b, ring=None):
    """The alternating 4 x 4 matrix with upper triangle
    m12 = a1, m13 = a2, m14 = a3, m23 = b3, m24 = -b2, m34 = b1.
    Its Pfaffian is a1 b1 + a2 b2 + a3 b3.
    """
    if ring is None:
        ring = a[0].ring
    a1, a2, a3 = (ring(x) for x in a)
    b1, b2, b3 = (ring(x) for x in b)
    z = ring.zero()
    return AlternatingMatrix(ring, [
        [z, a1, a2, a3],
        [-a1, z, b3, -b2],
        [-a2, -b3, z, b1],
        [-a3, b2, -b1, z],
    ])


def vaserstein_symbol(rs):
    """V(a, b) for a length-3 row a with section b; the Pfaffian is checked to be 1."""
    if not isinstance(rs, RowWithSection):
        raise TypeError("vaserstein_symbol needs a RowWithSection")
    if len(rs) != 3:
        raise ValueError("the Vaserstein symbol is defined for rows of length 3")
    V = vaserstein_matrix(rs.v, rs.w, rs.ring)
    if pfaffian(V) != 1:
        raise ConstructionError("Vaserstein matrix has Pfaffian != 1")
    return VasersteinMatrix(rs, V)


def pushforward(h, m):
    """Apply a ring map entrywise to a matrix over its source ring."""
    if m.ring != h.source:
        raise MatrixError("matrix is not over the source ring of the map")
    out = m.map(h, ring=h.target)
    if isinstance(m, AlternatingMatrix):
        return AlternatingMatrix.of(out)
    return out
