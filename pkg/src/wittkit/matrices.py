"""Dense matrices over presented rings.

Entry indices are 0-based in Python accessors; elementary generators use the
usual 1-based (i, j) labels, so ``E(1, 2, lam)`` adds ``lam`` at row 0, col 1.
"""

from dataclasses import dataclass
from fractions import Fraction

from .rings import RingElement, RingPresentation


class MatrixError(ValueError):
    pass


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring, rows, ncols=None):
        rows = tuple(tuple(ring(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise MatrixError("ragged matrix rows")
        self.ring = ring
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def _raw(cls, ring, rows, ncols):
        m = cls.__new__(cls)
        m.ring, m.rows, m.nrows, m.ncols = ring, rows, len(rows), ncols
        return m

    @classmethod
    def from_polys(cls, ring, prows, ncols=None):
        """Rows of ambient Polys; reduced to normal form."""
        rows = tuple(tuple(RingElement(ring, p) for p in r) for r in prows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls._raw(ring, rows, ncols)

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one(), ring.zero()
        return cls._raw(ring, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, ring, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        zero = ring.zero()
        return cls._raw(ring, tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def is_square(self):
        return self.nrows == self.ncols

    def transpose(self):
        return Matrix._raw(self.ring, tuple(zip(*self.rows)) if self.nrows else (), self.nrows) \
            if self.ncols else Matrix._raw(self.ring, (), self.nrows)

    @property
    def T(self):
        return self.transpose()

    def _check_ring(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.ring != self.ring:
            raise MatrixError("matrices over different rings")

    def __matmul__(self, other):
        self._check_ring(other)
        if self.ncols != other.nrows:
            raise MatrixError(f"cannot multiply {self.shape} by {other.shape}")
        ring = self.ring
        zero = ring.ambient.zero()
        cols = [[e.poly for e in c] for c in zip(*other.rows)] if other.nrows else [[] for _ in range(other.ncols)]
        out = []
        for r in self.rows:
            rp = [e.poly for e in r]
            new = []
            for c in cols:
                acc = zero
                for a, b in zip(rp, c):
                    if a.terms and b.terms:
                        acc = acc + a * b
                new.append(RingElement(ring, acc))
            out.append(tuple(new))
        return Matrix._raw(ring, tuple(out), other.ncols)

    def __add__(self, other):
        self._check_ring(other)
        if self.shape != other.shape:
            raise MatrixError("shape mismatch")
        return Matrix._raw(self.ring, tuple(tuple(a + b for a, b in zip(r, s))
                                            for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix._raw(self.ring, tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c):
        c = self.ring(c)
        return Matrix._raw(self.ring, tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def map(self, f, ring=None):
        ring = self.ring if ring is None else ring
        return Matrix._raw(ring, tuple(tuple(f(a) for a in r) for r in self.rows), self.ncols)

    def submatrix(self, rows, cols):
        return Matrix._raw(self.ring, tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def replace(self, i, j, value):
        rows = [list(r) for r in self.rows]
        rows[i][j] = self.ring(value)
        return Matrix._raw(self.ring, tuple(tuple(r) for r in rows), self.ncols)

    def is_alternating(self):
        if not self.is_square():
            return False
        n = self.nrows
        for i in range(n):
            if not self.rows[i][i].is_zero():
                return False
            for j in range(i + 1, n):
                if self.rows[i][j] != -self.rows[j][i]:
                    return False
        return True

    def is_identity(self):
        return self.is_square() and self == Matrix.identity(self.ring, self.nrows)

    def det(self):
        return det(self)

    def max_degree(self):
        return max((a.degree() for r in self.rows for a in r), default=-1)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {[[str(a) for a in r] for r in self.rows]})"

    def __str__(self):
        return format_matrix(self, pretty=True)


class AlternatingMatrix(Matrix):
    """A square matrix with M^t = -M and zero diagonal (checked).

    The zero diagonal is checked separately so the check is sound in
    characteristic 2.  Odd sizes are rejected: only even ranks carry a
    Pfaffian.
    """

    __slots__ = ()

    def __init__(self, ring, rows=None):
        if isinstance(ring, Matrix):
            m = ring
            ring, rows = m.ring, m.rows
        Matrix.__init__(self, ring, rows, ncols=len(rows))
        if not Matrix.is_alternating(self):
            raise MatrixError("matrix is not alternating")
        if self.nrows % 2:
            raise MatrixError(f"alternating matrix has odd rank {self.nrows}")

    @classmethod
    def of(cls, m):
        if isinstance(m, AlternatingMatrix):
            return m
        return cls(m)

    @property
    def rank(self):
        return self.nrows

    def pfaffian(self):
        return pfaffian(self)


def as_alternating(m):
    return AlternatingMatrix.of(m)


def block_diag(*blocks):
    ring = blocks[0].ring
    m = sum(b.ncols for b in blocks)
    zero = ring.zero()
    rows = []
    off = 0
    for b in blocks:
        if b.ring != ring:
            raise MatrixError("block_diag over different rings")
        for r in b.rows:
            rows.append((zero,) * off + r + (zero,) * (m - off - b.ncols))
        off += b.ncols
    return Matrix._raw(ring, tuple(rows), m)


def orth_sum(M, N):
    """Orthogonal sum M ⊥ N (block diagonal).  Alternating inputs give an AlternatingMatrix."""
    if M.ring != N.ring:
        raise MatrixError("orthogonal sum of matrices over different rings")
    out = block_diag(M, N)
    if isinstance(M, AlternatingMatrix) and isinstance(N, AlternatingMatrix):
        return AlternatingMatrix._wrap(out)
    return out


def _wrap_alt(m):
    a = AlternatingMatrix.__new__(AlternatingMatrix)
    a.ring, a.rows, a.nrows, a.ncols = m.ring, m.rows, m.nrows, m.ncols
    return a


AlternatingMatrix._wrap = staticmethod(_wrap_alt)


# -- determinants and Pfaffians ---------------------------------------------

def det(M):
    """Determinant, exact and division-free over quotient rings.

    Polynomial rings (no relations) use fraction-free Bareiss elimination;
    quotient rings use cofactor expansion memoized on column subsets.
    """
    if not M.is_square():
        raise MatrixError(f"determinant of non-square {M.shape} matrix")
    ring = M.ring
    n = M.nrows
    if n == 0:
        return ring.one()
    if ring.is_polynomial_ring():
        return ring(_bareiss([[e.poly for e in r] for r in M.rows], ring.ambient))
    return ring(_laplace([[e.poly for e in r] for r in M.rows], ring))


def _bareiss(A, amb):
    n = len(A)
    A = [list(r) for r in A]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not A[k][k].terms:
            for r in range(k + 1, n):
                if A[r][k].terms:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return amb.zero()
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                v = A[i][j] * akk
                if aik.terms and A[k][j].terms:
                    v = v - aik * A[k][j]
                if prev is not None and v.terms:
                    if prev.is_constant():
                        v = v.scale(amb.field.inv(prev.constant_value()))
                    else:
                        v = v.exact_div(prev)
                A[i][j] = v
        prev = akk
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def _laplace(A, ring):
    n = len(A)
    amb = ring.ambient
    memo = {}

    def minor(k, cols):
        # det of rows k.., columns given by the bitmask ``cols``
        if k == n:
            return amb.one()
        got = memo.get(cols)
        if got is not None:
            return got
        acc = amb.zero()
        t = 0
        for j in range(n):
            if cols >> j & 1:
                a = A[k][j]
                if a.terms:
                    sub = minor(k + 1, cols & ~(1 << j))
                    if sub.terms:
                        term = a * sub
                        acc = acc - term if t & 1 else acc + term
                t += 1
        acc = ring.reduce(acc)
        memo[cols] = acc
        return acc

    return minor(0, (1 << n) - 1)


def pfaffian(M):
    """Pfaffian by expansion along the first remaining index, memoized on index subsets.

    Pf(M) = sum_j (-1)^(j-1) m_{1j} Pf(M without rows/cols 1, j)  (1-based j >= 2).
    """
    if not isinstance(M, AlternatingMatrix):
        M = AlternatingMatrix(M)
    ring = M.ring
    amb = ring.ambient
    n = M.nrows
    A = [[e.poly for e in r] for r in M.rows]
    memo = {0: amb.one()}

    def pf(mask):
        got = memo.get(mask)
        if got is not None:
            return got
        i0 = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i0)
        acc = amb.zero()
        t = 0
        for j in range(i0 + 1, n):
            if rest >> j & 1:
                a = A[i0][j]
                if a.terms:
                    sub = pf(rest & ~(1 << j))
                    if sub.terms:
                        term = a * sub
                        acc = acc - term if t & 1 else acc + term
                t += 1
        acc = ring.reduce(acc)
        memo[mask] = acc
        return acc

    return ring(pf((1 << n) - 1) if n else amb.one())


# -- elementary generators ----------------------------------------------------

def partner(i):
    """Index paired with ``i`` by psi_{2n} (1-based): 1<->2, 3<->4, ..."""
    return i + 1 if i % 2 else i - 1


@dataclass(frozen=True)
class ElementaryGenerator:
    """``E`` is the elementary matrix I + lam*e_ij; ``SE`` is the symplectic
    elementary generator for psi_{2n}:

    * ``j == partner(i)``: I + lam*e_ij
    * otherwise: I + lam*e_ij - (-1)^(i+j) lam*e_{partner(j), partner(i)}
    """

    kind: str
    i: int
    j: int
    lam: RingElement
    n: int

    def __post_init__(self):
        if self.kind not in ("E", "SE"):
            raise MatrixError(f"unknown generator kind {self.kind!r}")
        if not (1 <= self.i <= self.n and 1 <= self.j <= self.n) or self.i == self.j:
            raise MatrixError(f"invalid generator indices ({self.i}, {self.j}) for rank {self.n}")
        if self.kind == "SE" and self.n % 2:
            raise MatrixError("SE generators need even rank")

    @property
    def ring(self):
        return self.lam.ring

    def entries(self):
        """Off-diagonal (row, col, value) triples, 1-based."""
        if self.kind == "E" or self.j == partner(self.i):
            return [(self.i, self.j, self.lam)]
        sign = -1 if (self.i + self.j) % 2 == 0 else 1
        return [(self.i, self.j, self.lam), (partner(self.j), partner(self.i), self.lam * sign)]

    def elementary_factors(self):
        """The same matrix as a word of at most two E generators (they commute)."""
        return [ElementaryGenerator("E", i, j, v, self.n) for i, j, v in self.entries()]

    def matrix(self):
        rows = [list(r) for r in Matrix.identity(self.ring, self.n).rows]
        for i, j, v in self.entries():
            rows[i - 1][j - 1] = v
        return Matrix._raw(self.ring, tuple(tuple(r) for r in rows), self.n)

    def inverse(self):
        return ElementaryGenerator(self.kind, self.i, self.j, -self.lam, self.n)

    def embed(self, n):
        return ElementaryGenerator(self.kind, self.i, self.j, self.lam, n)

    def map(self, f):
        return ElementaryGenerator(self.kind, self.i, self.j, f(self.lam), self.n)

    def __str__(self):
        return f"{self.kind} {self.i} {self.j} {self.lam}"


def E(i, j, lam, n, ring=None):
    if not isinstance(lam, RingElement):
        lam = ring(lam)
    return ElementaryGenerator("E", i, j, lam, n)


def SE(i, j, lam, n, ring=None):
    if not isinstance(lam, RingElement):
        lam = ring(lam)
    return ElementaryGenerator("SE", i, j, lam, n)


class ElementaryProduct:
    """A word g_1 g_2 ... g_k of generators; evaluates to the ordered product."""

    __slots__ = ("ring", "n", "word")

    def __init__(self, ring, n, word=()):
        word = tuple(word)
        for g in word:
            if g.n != n:
                raise MatrixError(f"generator {g} has rank {g.n}, word has rank {n}")
            if g.ring != ring:
                raise MatrixError("generator over a different ring")
        self.ring = ring
        self.n = n
        self.word = word

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __eq__(self, other):
        return isinstance(other, ElementaryProduct) and (self.ring, self.n, self.word) == (other.ring, other.n, other.word)

    def __hash__(self):
        return hash((self.n, self.word))

    def __repr__(self):
        return f"ElementaryProduct(n={self.n}, [{'; '.join(str(g) for g in self.word)}])"

    def evaluate(self):
        return evaluate(self)

    def inverse(self):
        return ElementaryProduct(self.ring, self.n, [g.inverse() for g in reversed(self.word)])

    def __mul__(self, other):
        if not isinstance(other, ElementaryProduct):
            return NotImplemented
        if other.n != self.n:
            raise MatrixError("rank mismatch in word product")
        return ElementaryProduct(self.ring, self.n, self.word + other.word)

    def embed(self, n):
        """The same word acting on the top-left block of an n x n identity."""
        if n < self.n:
            raise MatrixError("cannot embed into a smaller rank")
        return ElementaryProduct(self.ring, n, [g.embed(n) for g in self.word])

    def shift(self, offset, n):
        """Word acting on indices offset+1 .. offset+self.n inside rank n."""
        out = []
        for g in self.word:
            if g.kind == "SE" and offset % 2:
                raise MatrixError("SE generators can only be shifted by an even offset")
            out.append(ElementaryGenerator(g.kind, g.i + offset, g.j + offset, g.lam, n))
        return ElementaryProduct(self.ring, n, out)

    def map(self, f, ring):
        return ElementaryProduct(ring, self.n, [g.map(f) for g in self.word])

    def elementary(self):
        """Expand SE generators into plain E generators."""
        out = []
        for g in self.word:
            out.extend(g.elementary_factors())
        return ElementaryProduct(self.ring, self.n, out)


def evaluate(word):
    """Multiply out an ElementaryProduct by column operations on the identity."""
    ring = word.ring
    n = word.n
    amb = ring.ambient
    cols = [[amb.one() if i == j else amb.zero() for i in range(n)] for j in range(n)]
    for g in word.word:
        for i, j, v in g.entries():
            # right multiplication by I + v*e_ij adds v * (column i) to column j
            ci = cols[i - 1]
            vp = v.poly
            cols[j - 1] = [ring.reduce(b + a * vp) if a.terms else b for a, b in zip(ci, cols[j - 1])]
    rows = tuple(tuple(RingElement(ring, cols[j][i], _normal=True) for j in range(n)) for i in range(n))
    return Matrix._raw(ring, rows, n)


def verify_congruence(M, N, phi):
    """True iff phi^t M phi == N.  With N = M this tests phi in Sp(M)."""
    for X in (M, N, phi):
        if not X.is_square():
            raise MatrixError("congruence check needs square matrices")
    if not (M.nrows == N.nrows == phi.nrows):
        raise MatrixError(f"dimension mismatch: {M.nrows}, {N.nrows}, {phi.nrows}")
    return phi.T @ M @ phi == N


def is_symplectic(phi, chi):
    return verify_congruence(chi, chi, phi)


# -- integer SL factorization ---------------------------------------------------

def _int_det(M):
    n = len(M)
    A = [[Fraction(x) for x in r] for r in M]
    d = Fraction(1)
    for k in range(n):
        p = next((r for r in range(k, n) if A[r][k]), None)
        if p is None:
            return 0
        if p != k:
            A[k], A[p] = A[p], A[k]
            d = -d
        d *= A[k][k]
        for r in range(k + 1, n):
            f = A[r][k] / A[k][k]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[k])]
    return int(d)


def factor_integer_sl(M, ring=None):
    """Write an integer matrix of determinant 1 as a word in E_ij(lam), lam in Z.

    Row-reduces M to the identity with integer row operations (Euclid on each
    column); the word is the reversed list of inverse operations.  The word's
    coefficients are mapped into ``ring`` (default: QQ with no variables).
    """
    M = [[int(x) for x in r] for r in M]
    n = len(M)
    if any(len(r) != n for r in M):
        raise MatrixError("factor_integer_sl needs a square matrix")
    if _int_det(M) != 1:
        raise MatrixError("matrix does not have determinant 1")
    if ring is None:
        ring = RingPresentation()
    A = [list(r) for r in M]
    ops = []

    def addrow(i, j, lam):
        # row_i += lam * row_j  ==  left multiplication by E_{i+1, j+1}(lam)
        if lam:
            A[i] = [a + lam * b for a, b in zip(A[i], A[j])]
            ops.append((i + 1, j + 1, lam))

    for c in range(n):
        while True:
            nz = [r for r in range(c, n) if A[r][c]]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda r: abs(A[r][c]))
            for r in nz:
                if r != p:
                    addrow(r, p, -(A[r][c] // A[p][c]))
        p = next(r for r in range(c, n) if A[r][c])
        if p != c:
            # row c is zero in column c here; move the pivot up
            addrow(c, p, 1)
            addrow(p, c, -1)
        if A[c][c] == -1:
            if c == n - 1:
                raise MatrixError("internal error: negative final pivot")
            addrow(c + 1, c, 1)
            addrow(c, c + 1, -2)
            addrow(c + 1, c, 1)
        if A[c][c] != 1:
            raise MatrixError("internal error: pivot is not a unit")
        for r in range(n):
            if r != c and A[r][c]:
                addrow(r, c, -A[r][c])
    if any(A[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
        raise MatrixError("internal error: reduction did not reach the identity")
    merged = []
    for i, j, lam in ops:
        if merged and merged[-1][:2] == (i, j):
            lam += merged.pop()[2]
        if lam:
            merged.append((i, j, lam))
    word = [ElementaryGenerator("E", i, j, ring(-lam), n) for i, j, lam in merged]
    return ElementaryProduct(ring, n, word)


# -- text format --------------------------------------------------------------

def format_matrix(M, pretty=False):
    """One row per line, entries separated by commas."""
    cells = [[str(a) for a in r] for r in M.rows]
    if not pretty or not cells:
        return "\n".join(", ".join(r) for r in cells)
    widths = [max(len(cells[i][j]) for i in range(M.nrows)) for j in range(M.ncols)]
    return "\n".join(", ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def format_word(word):
    lines = [f"rank: {word.n}"]
    lines += [str(g) for g in word.word]
    return "\n".join(lines)


def adjugate(M):
    n = M.nrows
    if not M.is_square():
        raise MatrixError("adjugate of a non-square matrix")
    if n == 1:
        return Matrix.identity(M.ring, 1)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = M.submatrix([r for r in range(n) if r != j], [c for c in range(n) if c != i])
            d = det(minor)
            row.append(-d if (i + j) % 2 else d)
        rows.append(tuple(row))
    return Matrix._raw(M.ring, tuple(rows), n)


def inverse(M):
    """Inverse via adjugate / det, or None if the determinant is not a unit."""
    if isinstance(M, ElementaryProduct):
        return M.inverse().evaluate()
    d = det(M)
    dinv = M.ring.inverse(d)
    if dinv is None:
        return None
    return adjugate(M).scale(dinv)
