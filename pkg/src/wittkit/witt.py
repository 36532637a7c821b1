"""Stabilized alternating-matrix equivalence, the hyperbolic map, and witness checks.

Two invertible alternating matrices M (rank 2m) and N (rank 2n) are
equivalent when, for some l >= 0 and some E in E_{2n+2m+2l}(R),

    M ⊥ psi_{2n+2l} = E^t (N ⊥ psi_{2m+2l}) E.

Equivalence is only ever *verified* from a supplied witness (l, E); a
rejected witness says nothing about inequivalence.
"""

from dataclasses import dataclass
from itertools import product

from .fields import Field
from .matrices import (AlternatingMatrix, ElementaryGenerator, ElementaryProduct, Matrix,
                       MatrixError, det, evaluate, orth_sum, pfaffian, verify_congruence)
from .rings import RingPresentation


class InvariantError(AssertionError):
    """An internal invariant failed (signals a bug, never bad input)."""


def psi(n, ring):
    """psi_{2n}: psi_2 = [[0, 1], [-1, 0]] and psi_{2n+2} = psi_{2n} ⊥ psi_2."""
    if n < 0:
        raise ValueError("rank parameter must be non-negative")
    psi2 = AlternatingMatrix(ring, [[0, 1], [-1, 0]])
    out = AlternatingMatrix(ring, [])
    for _ in range(n):
        out = orth_sum(out, psi2)
    return out


class WittRepresentative:
    """An invertible alternating matrix with a unit certificate: Pf(M) * unit == 1."""

    __slots__ = ("matrix", "pf", "unit")

    def __init__(self, matrix, unit=None):
        matrix = AlternatingMatrix.of(matrix)
        ring = matrix.ring
        pf = pfaffian(matrix)
        if unit is None:
            unit = ring.inverse(pf)
            if unit is None:
                raise MatrixError(f"Pfaffian {pf} is not a unit; matrix is not invertible")
        unit = ring(unit)
        if pf * unit != 1:
            raise MatrixError("unit certificate does not invert the Pfaffian")
        self.matrix = matrix
        self.pf = pf
        self.unit = unit

    @property
    def ring(self):
        return self.matrix.ring

    @property
    def rank(self):
        return self.matrix.nrows

    def in_WE(self):
        """Pfaffian one: the class lies in the subgroup W_E."""
        return self.pf == 1

    def __add__(self, other):
        """Orthogonal sum (the group law on classes)."""
        if not isinstance(other, WittRepresentative):
            other = WittRepresentative(other)
        return WittRepresentative(orth_sum(self.matrix, other.matrix), self.unit * other.unit)

    def __repr__(self):
        return f"WittRepresentative(rank={self.rank}, pf={self.pf})"


def _alt(x):
    if isinstance(x, WittRepresentative):
        return x.matrix
    return AlternatingMatrix.of(x)


@dataclass(frozen=True)
class WittWitness:
    """Stabilization level l and an elementary word E of rank 2n + 2m + 2l."""

    level: int
    word: ElementaryProduct

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("stabilization level must be >= 0")

    def inverse(self):
        """Witness for the reversed equivalence N ~ M."""
        return WittWitness(self.level, self.word.inverse())

    def stabilize(self, extra):
        """Same equivalence read at level + extra (word padded by the identity)."""
        return WittWitness(self.level + extra, self.word.embed(self.word.n + 2 * extra))


def compose_witnesses(first, second, ranks):
    """Witness for M ~ P from M ~ N (``first``) and N ~ P (``second``).

    ``ranks`` = (rank M, rank N, rank P).  Both words are padded to a common
    size 2m + 2k + 2t1 = 2k + 2p + 2t2 and multiplied; the result has level
    k + t1 - p.
    """
    m, k, p = (r // 2 for r in ranks)
    if any(r % 2 for r in ranks):
        raise ValueError("ranks must be even")
    for wit, a, b in ((first, m, k), (second, k, p)):
        if wit.word.n != 2 * (a + b + wit.level):
            raise MatrixError("witness rank does not match the given ranks")
    # need m + t1 == p + t2 with t1 >= l1, t2 >= l2, and k + t1 - p >= 0
    t1 = max(first.level, second.level + p - m, p - k)
    t2 = m + t1 - p
    a = first.stabilize(t1 - first.level)
    b = second.stabilize(t2 - second.level)
    return WittWitness(k + t1 - p, b.word * a.word)


@dataclass(frozen=True)
class SLWitness:
    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square():
            raise MatrixError("SL witness must be square")
        if det(self.matrix) != 1:
            raise MatrixError("SL witness does not have determinant 1")


def hyperbolic_matrix(phi):
    """phi^t psi_{2n} phi for any square phi of even size (no invertibility needed)."""
    if not phi.is_square():
        raise MatrixError("hyperbolic map needs a square matrix")
    if phi.nrows % 2:
        raise MatrixError(f"hyperbolic map needs even rank, got {phi.nrows}")
    return AlternatingMatrix.of(phi.T @ psi(phi.nrows // 2, phi.ring) @ phi)


def hyperbolic(phi):
    """H(phi) = phi^t psi_{2n} phi as a WittRepresentative; its Pfaffian is det(phi)."""
    H = hyperbolic_matrix(phi)
    d = det(phi)
    dinv = phi.ring.inverse(d)
    if dinv is None:
        raise MatrixError("det(phi) is not a unit")
    rep = WittRepresentative(H, dinv)
    if rep.pf != d:
        raise InvariantError("Pf(phi^t psi phi) != det(phi)")
    return rep


def verify_witt_equiv(M, N, wit):
    """Exact check of M ⊥ psi_{2n+2l} = E^t (N ⊥ psi_{2m+2l}) E."""
    A, B = _alt(M), _alt(N)
    if A.ring != B.ring:
        raise MatrixError("representatives over different rings")
    ring = A.ring
    m2, n2, l = A.nrows, B.nrows, wit.level
    if wit.word.n != m2 + n2 + 2 * l:
        raise MatrixError(f"witness rank {wit.word.n} != {m2} + {n2} + 2*{l}")
    if wit.word.ring != ring:
        raise MatrixError("witness word over a different ring")
    lhs = orth_sum(A, psi((n2 + 2 * l) // 2, ring))
    mid = orth_sum(B, psi((m2 + 2 * l) // 2, ring))
    ok = verify_congruence(mid, lhs, evaluate(wit.word))
    if ok and pfaffian(A) != pfaffian(B):
        raise InvariantError("certified equivalence changed the Pfaffian")
    return ok


def verify_wsl_equiv(M, N, wit, sigma):
    """Check M ~ sigma^t (N ⊥ psi) sigma via ``wit``, for sigma of determinant 1.

    Equality of classes in W_SL (the cokernel of H) up to the twist by sigma.
    """
    if not isinstance(sigma, SLWitness):
        sigma = SLWitness(sigma)
    B = _alt(N)
    s = sigma.matrix.nrows
    if s < B.nrows or (s - B.nrows) % 2:
        raise MatrixError(f"SL witness rank {s} incompatible with rank {B.nrows}")
    twisted = AlternatingMatrix.of(sigma.matrix.T @ orth_sum(B, psi((s - B.nrows) // 2, B.ring)) @ sigma.matrix)
    return verify_witt_equiv(M, twisted, wit)


def elementary_symplectic(i, j, lam, n, ring=None):
    """SE_ij(lam) in Sp(psi_{2n}) (1-based indices, i != j)."""
    if ring is not None:
        lam = ring(lam)
    g = ElementaryGenerator("SE", i, j, lam, 2 * n)
    M = g.matrix()
    if not verify_congruence(psi(n, g.ring), psi(n, g.ring), M):
        raise InvariantError(f"{g} is not symplectic")
    return g


def symplectic_generators(n, lams, ring):
    """All SE_ij(lam) of rank 2n for the given coefficients."""
    return [ElementaryGenerator("SE", i, j, ring(lam), 2 * n)
            for i in range(1, 2 * n + 1) for j in range(1, 2 * n + 1) if i != j for lam in lams]


def elementary_generators(n, lams, ring):
    return [ElementaryGenerator("E", i, j, ring(lam), n)
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j for lam in lams]


def verify_transitivity_certificate(v, chi, psi_matrix):
    """True iff psi^t chi psi == chi and the first row of psi is v."""
    X = _alt(chi)
    n = X.nrows
    if psi_matrix.shape != (n, n) or len(v) != n:
        raise MatrixError("dimension mismatch in transitivity certificate")
    entries = v.entries if hasattr(v, "entries") else [X.ring(x) for x in v]
    return tuple(psi_matrix.rows[0]) == tuple(entries) and verify_congruence(X, X, psi_matrix)


# -- finite-field orbit brute force ---------------------------------------------

MAX_ORBIT_PRIME = 7


@dataclass
class OrbitPartition:
    p: int
    n: int
    orbits: list

    @property
    def sizes(self):
        return [len(o) for o in self.orbits]

    @property
    def representatives(self):
        return [o[0] for o in self.orbits]

    def summary(self):
        return f"orbits={len(self.orbits)} sizes={','.join(map(str, self.sizes))}"


def _int_matrix(g, p):
    M = evaluate(ElementaryProduct(g.ring, g.n, [g]))
    return [[a.constant_value() % p for a in r] for r in M.rows]


def orbit_bruteforce(p, n=4, generators="SE"):
    """Orbits of the right action of a generated group on Um_n(GF(p)).

    ``generators`` is ``"E"``, ``"SE"``, ``"both"`` or an explicit list of
    ElementaryGenerators over a GF(p) ring with no variables.  Every
    generator kind uses all lam in GF(p).  Orbits are listed by their
    smallest vector (lexicographic), each orbit sorted.
    """
    if p > MAX_ORBIT_PRIME:
        raise ValueError(f"field too large for brute force (p={p} > {MAX_ORBIT_PRIME})")
    F = Field(p)
    ring = RingPresentation((), field=F)
    if isinstance(generators, str):
        lams = range(1, p)
        gens = []
        if generators in ("E", "both"):
            gens += elementary_generators(n, lams, ring)
        if generators in ("SE", "both"):
            if n % 2:
                raise ValueError("SE generators need even n")
            gens += symplectic_generators(n // 2, lams, ring)
        if not gens and generators not in ("E", "SE", "both"):
            raise ValueError(f"unknown generator family {generators!r}")
    else:
        gens = list(generators)
    mats = [_int_matrix(g, p) for g in gens]
    cols = [list(zip(*m)) for m in mats]

    def act(v, c):
        return tuple(sum(a * b for a, b in zip(v, col)) % p for col in c)

    seen = set()
    orbits = []
    zero = (0,) * n
    for v in product(range(p), repeat=n):
        if v == zero or v in seen:
            continue
        orbit = [v]
        seen.add(v)
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for c in cols:
                    w = act(u, c)
                    if w not in seen:
                        seen.add(w)
                        orbit.append(w)
                        nxt.append(w)
            frontier = nxt
        orbit.sort()
        orbits.append(orbit)
    return OrbitPartition(p, n, orbits)
