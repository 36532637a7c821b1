"""Builders shared by several test modules."""

from wittkit import AlternatingMatrix, ElementaryGenerator, ElementaryProduct, Matrix, RingPresentation


def generic_alternating(n, field="Q"):
    """Alternating n x n matrix whose upper entries are independent variables."""
    names = [f"m{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    kw = {} if field == "Q" else {"field": field}
    R = RingPresentation(" ".join(names), **kw)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = R.gen(f"m{i + 1}_{j + 1}")
            rows[i][j] = v
            rows[j][i] = -v
    return R, AlternatingMatrix(R, rows)


def generic_square(n, prefix="f"):
    names = [f"{prefix}{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    R = RingPresentation(" ".join(names))
    return R, Matrix(R, [[R.gen(f"{prefix}{i}{j}") for j in range(1, n + 1)] for i in range(1, n + 1)])


def random_element(rng, ring, nterms=2, deg=1, coeff=3):
    amb = ring.ambient
    out = amb.zero()
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in range(amb.nvars))
        out = out + amb.monomial(e, rng.randint(-coeff, coeff))
    return ring(out)


def random_alternating(rng, ring, n, **kw):
    rows = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = random_element(rng, ring, **kw)
            rows[i][j] = v
            rows[j][i] = -v
    return AlternatingMatrix(ring, rows)


def random_word(rng, ring, n, length, kinds=("E",), coeff=None):
    """Random elementary word; coefficients from ``coeff(rng)`` or small integers."""
    word = []
    for _ in range(length):
        kind = rng.choice(kinds)
        i, j = rng.sample(range(1, n + 1), 2)
        lam = coeff(rng) if coeff else ring(rng.randint(-2, 2))
        word.append(ElementaryGenerator(kind, i, j, ring(lam), n))
    return ElementaryProduct(ring, n, word)


def int_det(M):
    """Integer Bareiss determinant (independent of the library)."""
    A = [list(r) for r in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((r for r in range(k + 1, n) if A[r][k]), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1]


def random_sl_int(rng, n, bound=5, tries=100000):
    """Uniform over integer matrices with entries in [-bound, bound] and det 1 (rejection)."""
    for _ in range(tries):
        M = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if int_det(M) == 1:
            return M
    raise RuntimeError("no SL matrix found")
