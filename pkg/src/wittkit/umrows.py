"""Unimodular rows and columns with cofactor certificates, and group actions on them."""

from .matrices import ElementaryGenerator, ElementaryProduct, Matrix, MatrixError, evaluate, inverse


class NotUnimodularError(ValueError):
    pass


class _UnimodularVector:
    __slots__ = ("ring", "entries", "cofactors")

    def __init__(self, ring, entries, cofactors):
        entries = tuple(ring(x) for x in entries)
        cofactors = tuple(ring(x) for x in cofactors)
        if not entries:
            raise NotUnimodularError("empty vector")
        if len(entries) != len(cofactors):
            raise NotUnimodularError("certificate length differs from vector length")
        total = ring.zero()
        for a, b in zip(entries, cofactors):
            total = total + a * b
        if total != 1:
            raise NotUnimodularError(f"certificate sums to {total}, not 1")
        self.ring = ring
        self.entries = entries
        self.cofactors = cofactors

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        # equality is of the vectors; certificates are not part of the value
        return type(other) is type(self) and self.ring == other.ring and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(a) for a in self.entries)})"


class UnimodularRow(_UnimodularVector):
    """A row (v_1..v_n) generating the unit ideal; ``cofactors`` c has sum c_i v_i = 1."""

    __slots__ = ()

    def as_matrix(self):
        return Matrix(self.ring, [self.entries])

    def transpose(self):
        return UnimodularColumn(self.ring, self.entries, self.cofactors)


class UnimodularColumn(_UnimodularVector):
    __slots__ = ()

    def as_matrix(self):
        return Matrix(self.ring, [[a] for a in self.entries])

    def transpose(self):
        return UnimodularRow(self.ring, self.entries, self.cofactors)


class RowWithSection:
    """A unimodular row v with a column w such that v.w = 1."""

    __slots__ = ("row", "section")

    def __init__(self, row, section):
        if len(row) != len(section):
            raise NotUnimodularError("row and section have different lengths")
        total = row.ring.zero()
        for a, b in zip(row.entries, section.entries):
            total = total + a * b
        if total != 1:
            raise NotUnimodularError(f"v.w = {total}, not 1")
        self.row = row
        self.section = section

    @classmethod
    def from_lists(cls, ring, v, w):
        return cls(UnimodularRow(ring, v, w), UnimodularColumn(ring, w, v))

    @property
    def ring(self):
        return self.row.ring

    @property
    def v(self):
        return self.row.entries

    @property
    def w(self):
        return self.section.entries

    def __len__(self):
        return len(self.row)

    def __repr__(self):
        return f"RowWithSection(v={list(map(str, self.v))}, w={list(map(str, self.w))})"


def check_unimodular(v, ring=None):
    """Return a certified UnimodularRow if <v_1..v_n> = R, else None."""
    v = list(v)
    if not v:
        raise ValueError("empty row")
    if ring is None:
        ring = v[0].ring
    v = [ring(x) for x in v]
    cof = ring.ideal_membership(1, v)
    if cof is None:
        return None
    return UnimodularRow(ring, v, cof)


def check_unimodular_column(w, ring=None):
    row = check_unimodular(w, ring)
    return None if row is None else row.transpose()


def section(v, ring=None):
    """RowWithSection for a unimodular row, or None."""
    row = v if isinstance(v, UnimodularRow) else check_unimodular(v, ring)
    if row is None:
        return None
    return RowWithSection(row, UnimodularColumn(row.ring, row.cofactors, row.entries))


def standard_row(i, n, ring):
    """pi_{i,n}: 1 in slot i (1-based), zeros elsewhere."""
    if not 1 <= i <= n:
        raise IndexError(f"standard row index {i} out of range 1..{n}")
    e = [1 if k == i else 0 for k in range(1, n + 1)]
    return UnimodularRow(ring, e, e)


def standard_column(i, n, ring):
    """e_{i,n} = pi_{i,n}^t."""
    return standard_row(i, n, ring).transpose()


def _matrix_and_inverse(g, inv, n):
    if isinstance(g, ElementaryGenerator):
        g = ElementaryProduct(g.ring, g.n, [g])
    if isinstance(g, ElementaryProduct):
        return evaluate(g), evaluate(g.inverse())
    if not isinstance(g, Matrix) or not g.is_square():
        raise MatrixError("group element must be a square matrix or an elementary word")
    if g.nrows != n:
        raise MatrixError(f"dimension mismatch: vector length {n}, matrix {g.shape}")
    if inv is None:
        inv = inverse(g)
        if inv is None:
            raise MatrixError("matrix is not invertible (and no inverse certificate was given)")
    elif not (g @ inv).is_identity():
        raise MatrixError("supplied inverse certificate is wrong")
    return g, inv


def act_right(v, g, inverse=None):
    """v . g, with the certificate transported as g^{-1} c."""
    g, ginv = _matrix_and_inverse(g, inverse, len(v))
    if g.nrows != len(v):
        raise MatrixError(f"dimension mismatch: vector length {len(v)}, matrix {g.shape}")
    new = (v.as_matrix() @ g).rows[0]
    cof = (ginv @ Matrix(v.ring, [[c] for c in v.cofactors])).col(0)
    return UnimodularRow(v.ring, new, cof)


def act_left(w, g, inverse=None):
    """g . w, with the certificate transported as c g^{-1}."""
    g, ginv = _matrix_and_inverse(g, inverse, len(w))
    if g.nrows != len(w):
        raise MatrixError(f"dimension mismatch: vector length {len(w)}, matrix {g.shape}")
    new = (g @ w.as_matrix()).col(0)
    cof = (Matrix(w.ring, [w.cofactors]) @ ginv).rows[0]
    return UnimodularColumn(w.ring, new, cof)


def power_last(rs, exponent):
    """(v_1, ..., v_{n-1}, v_n^e) with a freshly computed section."""
    if not isinstance(exponent, int) or exponent < 1:
        raise ValueError("exponent must be a positive integer")
    row = rs.row if isinstance(rs, RowWithSection) else rs
    v = list(row.entries)
    v[-1] = v[-1] ** exponent
    out = section(v, row.ring)
    if out is None:
        raise ArithmeticError("section recomputation failed for a row that must be unimodular")
    return out


def verify_elementary_reduction(v, word, target):
    """True iff v . evaluate(word) == target."""
    if len(v) != word.n or len(target) != word.n:
        return False
    got = (Matrix(v.ring, [list(v.entries)]) @ evaluate(word)).rows[0]
    return tuple(got) == tuple(v.ring(x) for x in target.entries)


def find_elementary_reduction(v, exponent, *, best_effort):
    """Greedy search for E with v.E = (w_1, ..., w_{n-1}, w_n^exponent).

    Heuristic only: tries to turn some entry into 1 using the other entries,
    then moves that 1 into the last slot (1 = 1^e).  Returns
    ``(word, target_row)`` or None; a None says nothing about existence.
    """
    if not best_effort:
        raise ValueError("find_elementary_reduction is a heuristic; call with best_effort=True")
    ring = v.ring
    n = len(v)
    if n < 2:
        return None
    ents = list(v.entries)
    for k in range(n - 1, -1, -1):
        others = [i for i in range(n) if i != k]
        cof = ring.ideal_membership(1 - ents[k], [ents[i] for i in others])
        if cof is None:
            continue
        word = [ElementaryGenerator("E", i + 1, k + 1, c, n) for i, c in zip(others, cof) if not c.is_zero()]
        if k != n - 1:
            # entry k is now 1; add (1 - v_n) times it to the last slot
            fix = 1 - ents[n - 1]
            if not fix.is_zero():
                word.append(ElementaryGenerator("E", k + 1, n, fix, n))
        word = ElementaryProduct(ring, n, word)
        target = act_right(v, word)
        if target.entries[-1] != 1:
            raise ArithmeticError("greedy reduction produced an unexpected row")
        if not verify_elementary_reduction(v, word, target):
            raise ArithmeticError("greedy reduction failed verification")
        return word, target
    return None
