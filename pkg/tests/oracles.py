"""Independent reference computations used only by the tests."""

from itertools import permutations, product

import sympy as sp



def perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def perfect_matchings(idx):
    if not idx:
        yield []
        return
    a = idx[0]
    for k in range(1, len(idx)):
        b = idx[k]
        rest = idx[1:k] + idx[k + 1:]
        for m in perfect_matchings(rest):
            yield [(a, b)] + m


def pfaffian_matching_sum(M):
    """Sum over perfect matchings with the sign of the permutation (i1 j1 i2 j2 ...)."""
    ring = M.ring
    total = ring.zero()
    for m in perfect_matchings(list(range(M.nrows))):
        flat = [x for pair in m for x in pair]
        term = ring(perm_sign(flat))
        for i, j in m:
            term = term * M[i, j]
        total = total + term
    return total


def leibniz_det(M):
    ring = M.ring
    n = M.nrows
    total = ring.zero()
    for perm in permutations(range(n)):
        term = ring(perm_sign(perm))
        for i in range(n):
            term = term * M[i, perm[i]]
            if term.is_zero():
                break
        total = total + term
    return total


def to_sympy(p, syms):
    expr = sp.Integer(0)
    for e, c in p.terms.items():
        t = sp.Rational(c)
        for s, a in zip(syms, e):
            t *= s ** a
        expr += t
    return expr


def sympy_reduced_gb(polys, ring):
    """Reduced Groebner basis via sympy, as a set of sympy Poly objects."""
    syms = sp.symbols(ring.variables)
    kw = {"order": ring.order}
    if ring.field.characteristic:
        kw["modulus"] = ring.field.characteristic
    exprs = [to_sympy(p, syms) for p in polys if p.terms]
    if not exprs:
        return set()
    G = sp.groebner(exprs, *syms, **kw)
    return {sp.Poly(g, *syms, **({"modulus": kw["modulus"]} if "modulus" in kw else {})).monic() for g in G.exprs}


def wk_as_sympy_set(basis, ring):
    syms = sp.symbols(ring.variables)
    mod = ring.field.characteristic
    out = set()
    for g in basis:
        out.add(sp.Poly(to_sympy(g, syms), *syms, **({"modulus": mod} if mod else {})).monic())
    return out


def span_membership_fp(target, gens, degree_bound):
    """Is ``target`` in the F_p-span of {m * g : g in gens, deg m <= bound}?

    Plain Gaussian elimination over F_p on coefficient vectors; never looks
    at leading terms or Groebner bases.
    """
    ring = target.ring
    p = ring.field.characteristic
    nv = ring.nvars
    mons = [e for e in product(range(degree_bound + 1), repeat=nv) if sum(e) <= degree_bound]
    vectors = []
    for g in gens:
        for e in mons:
            vectors.append(g.mul_term(e, 1).terms)
    support = sorted({m for v in vectors for m in v} | set(target.terms))
    col = {m: k for k, m in enumerate(support)}

    def dense(t):
        row = [0] * len(support)
        for m, c in t.items():
            row[col[m]] = c % p
        return row

    basis = {}  # pivot column -> row
    def reduce_row(row):
        row = list(row)
        for k in range(len(row)):
            if row[k] and k in basis:
                f = row[k]
                b = basis[k]
                row = [(x - f * y) % p for x, y in zip(row, b)]
        return row

    for v in vectors:
        row = reduce_row(dense(v))
        piv = next((k for k, x in enumerate(row) if x), None)
        if piv is None:
            continue
        inv = pow(row[piv], -1, p)
        row = [x * inv % p for x in row]
        # keep the basis fully reduced so a single pass in reduce_row suffices
        for k, b in list(basis.items()):
            if b[piv]:
                f = b[piv]
                basis[k] = [(x - f * y) % p for x, y in zip(b, row)]
        basis[piv] = row
    return not any(reduce_row(dense(target.terms)))
