"""The ten acceptance criteria, each reported as one pass/fail line."""

import random
from itertools import product

from helpers import generic_alternating, generic_square, random_alternating, random_element, random_sl_int, random_word
from oracles import pfaffian_matching_sum
from wittkit import (GF, AlternatingMatrix, Matrix, RingHom, RingPresentation, RowWithSection, WittWitness,
                     compose_witnesses, det, evaluate, factor_integer_sl, factorial_completion_3, hyperbolic,
                     hyperbolic_matrix, orbit_bruteforce, orth_sum, pfaffian, psi, pushforward, suslin_matrix,
                     vaserstein_matrix, vaserstein_symbol, verify_witt_equiv)
from wittkit.matrices import ElementaryProduct


def test_c01_pfaffian(criterion):
    def check():
        for n in (4, 6):
            _, M = generic_alternating(n)
            assert pfaffian(M) == pfaffian_matching_sum(M), f"rank {n} symbolic"
        rng = random.Random(101)
        F = RingPresentation("s t", field=GF(5))
        for k in range(50):
            n = 2 * (1 + k % 4)
            M = random_alternating(rng, F, n)
            assert pfaffian(M) ** 2 == det(M), f"sample {k}"
        return "rank 4,6 symbolic; 50 random over F5[s,t]"
    criterion(1, "Pfaffian vs matching sum; Pf^2 = det", 10, check)


def test_c02_psi_tower(criterion):
    def check():
        Q = RingPresentation()
        psi2 = AlternatingMatrix(Q, [[0, 1], [-1, 0]])
        for n in range(1, 7):
            # written out entry by entry: +1 at (2k-1, 2k), -1 at (2k, 2k-1)
            size = 2 * n + 2
            rows = [[0] * size for _ in range(size)]
            for k in range(0, size, 2):
                rows[k][k + 1], rows[k + 1][k] = 1, -1
            expected = Matrix(Q, rows)
            assert psi(n + 1, Q).rows == expected.rows == orth_sum(psi(n, Q), psi2).rows, f"n={n}"
            assert pfaffian(psi(n, Q)) == 1
        return "n <= 6"
    criterion(2, "psi_{2n+2} = psi_{2n} ⊥ psi_2, Pf = 1", 1, check)


def test_c03_vaserstein(criterion, sphere):
    def check():
        R = RingPresentation("a1 a2 a3 b1 b2 b3")
        V = vaserstein_matrix(R.gens[:3], R.gens[3:], R)
        assert pfaffian(V) == R("a1*b1 + a2*b2 + a3*b3")
        Q = RingPresentation()
        assert vaserstein_symbol(RowWithSection.from_lists(Q, [1, 0, 0], [1, 0, 0])).matrix.rows == psi(2, Q).rows
        x, y, z = sphere.gens
        assert pfaffian(vaserstein_matrix([x, y, z], [x, y, z], sphere)) == 1
    criterion(3, "Vaserstein symbol: Pf = a.b, V(pi1,e1) = psi4, sphere Pf = 1", 5, check)


def _pair(r, relation=False, field=None):
    xs = [f"v{i}" for i in range(r + 1)]
    ys = [f"w{i}" for i in range(r + 1)]
    rels = [" + ".join(f"{a}*{b}" for a, b in zip(xs, ys)) + " - 1"] if relation else []
    R = RingPresentation(" ".join(xs + ys), rels, **({"field": field} if field else {}))
    return R, R.gens[:r + 1], R.gens[r + 1:]


def test_c04_suslin(criterion):
    def check():
        for r in (1, 2, 3):
            R, v, w = _pair(r)
            vw = sum((a * b for a, b in zip(v, w)), R.zero())
            S, Sb = suslin_matrix(v, w).matrix, suslin_matrix(w, v).matrix
            assert S @ Sb.T == Matrix.identity(R, 2 ** r).scale(vw), f"identity r={r}"
            if r <= 2:
                assert det(S) == vw ** (2 ** (r - 1)), f"det r={r}"
        rng = random.Random(104)
        F = RingPresentation(field=GF(5))
        for _ in range(200):
            v = [rng.randrange(5) for _ in range(4)]
            w = [rng.randrange(5) for _ in range(4)]
            assert det(suslin_matrix(v, w, F).matrix) == F(sum(a * b for a, b in zip(v, w))) ** 4
        for r in (1, 2, 3):
            R, v, w = _pair(r, relation=True)
            assert det(suslin_matrix(v, w).matrix) == 1, f"det 1 in S_{2 * r + 1}"
        return "r = 1,2,3; 200 F5 points at r = 3"
    criterion(4, "Suslin identities and determinants", 60, check)


def test_c05_hyperbolic(criterion, sphere):
    def check():
        R, phi = generic_square(4)
        assert pfaffian(hyperbolic_matrix(phi)) == det(phi)
        rng = random.Random(105)
        count = 0
        for ring in (sphere, RingPresentation("s t"), RingPresentation(field=GF(7))):
            for n in (1, 2, 3):
                word = random_word(rng, ring, 2 * n, 6, coeff=lambda r: random_element(r, ring, 2, 1))
                H = hyperbolic(evaluate(word))
                assert verify_witt_equiv(H, psi(n, ring), WittWitness(0, word.embed(4 * n)))
                count += 1
        return f"symbolic rank 4; {count} elementary words certified"
    criterion(5, "Pf(phi^t psi phi) = det(phi); H(E) ~ psi via E", 30, check)


def test_c06_functoriality(criterion, S5, sphere):
    def check():
        x, y, z = sphere.gens
        h = RingHom(S5, sphere, [x, y, z, x, y, z])
        a, b = S5.gens[:3], S5.gens[3:]
        ha, hb = [h(t) for t in a], [h(t) for t in b]
        assert pushforward(h, suslin_matrix(a, b).matrix) == suslin_matrix(ha, hb).matrix
        rs = RowWithSection.from_lists(S5, a, b)
        img = RowWithSection.from_lists(sphere, ha, hb)
        assert pushforward(h, vaserstein_symbol(rs).matrix) == vaserstein_symbol(img).matrix
    criterion(6, "pushforward commutes with Suslin (r=2) and Vaserstein", 10, check)


def test_c07_orbits(criterion):
    def check():
        out = []
        for p, size in ((2, 15), (3, 80)):
            direct = sum(1 for v in product(range(p), repeat=4) if any(v))
            part = orbit_bruteforce(p, 4, "SE")
            assert part.sizes == [size] == [direct], f"p={p}: {part.summary()}, direct {direct}"
            out.append(f"p={p} {part.summary()}")
        return "; ".join(out)
    criterion(7, "SE orbits on Um_4(F_p): one orbit", 30, check)


# -- criterion 8: witness fuzzing ----------------------------------------------

def _fuzz_rings():
    return [
        RingPresentation(),
        RingPresentation(field=GF(5)),
        RingPresentation(field=GF(7)),
        RingPresentation("s"),
        RingPresentation("s t", field=GF(3)),
        RingPresentation("x y z", ["x^2 + y^2 + z^2 - 1"]),
    ]


def _base_form(rng, ring, n2):
    """An invertible alternating matrix of rank n2 with unit Pfaffian."""
    kind = rng.randrange(3)
    if kind == 0 or n2 != 4:
        B = psi(n2 // 2, ring)
    elif kind == 1:
        B = vaserstein_matrix([1, 0, 0], [1, 0, 0], ring)
    else:
        B = hyperbolic_matrix(evaluate(random_word(rng, ring, 4, 3)))
    if rng.random() < 0.5:
        # scale the first pairing by a unit
        u = ring(rng.choice([2, 3, -1]))
        D = Matrix.identity(ring, n2).replace(0, 0, u)
        B = AlternatingMatrix.of(D.T @ B @ D)
    return B


def _passing_case(rng, ring):
    coeff = lambda r: random_element(r, ring, 2, 1)
    n2 = rng.choice([2, 4])
    level = rng.randint(0, 1)
    N = _base_form(rng, ring, n2)
    phi = random_word(rng, ring, n2, rng.randint(1, 5), coeff=coeff)
    Pm = evaluate(phi)
    M = AlternatingMatrix.of(Pm.T @ N @ Pm)
    total = 2 * n2 + 2 * level
    sp = random_word(rng, ring, n2 + 2 * level, rng.randint(0, 4), kinds=("SE",), coeff=coeff)
    wit = WittWitness(level, phi.embed(total) * sp.shift(n2, total))
    if rng.random() < 0.3:
        # extend to a rank-changing chain N ~ psi via the identity stabilization
        step = WittWitness(0, ElementaryProduct(ring, n2 + 2))
        if verify_witt_equiv(N, psi(1, ring), step):
            wit = compose_witnesses(wit, step, (n2, n2, 2))
            N = psi(1, ring)
    return M, N, wit


def _perturb(rng, A):
    """Add delta to one upper entry and -delta to its mirror (stays alternating)."""
    ring = A.ring
    i, j = sorted(rng.sample(range(A.nrows), 2))
    delta = ring(rng.choice([1, 2, -1]))
    if ring.variables and rng.random() < 0.5:
        delta = delta + ring.gens[0]
    rows = [list(r) for r in A.rows]
    rows[i][j] = rows[i][j] + delta
    rows[j][i] = rows[j][i] - delta
    return AlternatingMatrix(ring, rows)


def test_c08_certificate_fuzzing(criterion):
    def check():
        rng = random.Random(108)
        rings = _fuzz_rings()
        passed = rejected = mixed = 0
        for k in range(500):
            ring = rings[k % len(rings)]
            M, N, wit = _passing_case(rng, ring)
            mixed += M.nrows != N.nrows
            assert verify_witt_equiv(M, N, wit), f"passing case {k} rejected"
            passed += 1
            if rng.random() < 0.5:
                bad = verify_witt_equiv(_perturb(rng, M), N, wit)
            else:
                bad = verify_witt_equiv(M, _perturb(rng, N), wit)
            assert not bad, f"corrupted case {k} accepted"
            rejected += 1
        return f"{passed} verified ({mixed} across ranks), {rejected} corrupted rejected"
    criterion(8, "witness fuzzing: 500 pass, 500 corrupted reject", 60, check)


def test_c09_factorial_completion(criterion, generic3):
    def check():
        a, b, c, p, q, r = generic3.gens
        M = factorial_completion_3(RowWithSection.from_lists(generic3, [a, b, c], [p, q, r]))
        assert list(M.row(0)) == [a, b, c * c]
        assert det(M) == 1
    criterion(9, "factorial_completion_3 on the generic ring", 30, check)


def test_c10_integer_sl(criterion):
    rng = random.Random(110)
    mats = [random_sl_int(rng, 2 + k % 3) for k in range(100)]
    Q = RingPresentation()

    def check():
        for M in mats:
            assert evaluate(factor_integer_sl(M)) == Matrix(Q, M), f"{M}"
        return "100 matrices, sizes 2..4"
    criterion(10, "evaluate(factor_integer_sl(M)) = M", 5, check)
