"""Buchberger's algorithm, multivariate division, and ideal membership with cofactors."""

from heapq import heapify, heappop, heappush

from .poly import Poly


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _pair_key(a, b, nkey):
    m = _lcm(a, b)
    return (sum(m), tuple(-x for x in nkey(m)))


def reduce_terms(terms, divisors, ring, track=False):
    """Fully reduce ``terms`` by ``divisors``.

    Returns ``(quotients, remainder)`` where ``quotients`` is a list of term
    dicts (one per divisor, ``None`` unless ``track``) and ``remainder`` is a
    term dict with no monomial divisible by any leading monomial.
    """
    F = ring.field
    nkey = ring.nkey
    divs = []
    for d in divisors:
        lm = d.lm()
        divs.append((lm, d.terms[lm], [(e, c) for e, c in d.terms.items() if e != lm]))
    work = dict(terms)
    heap = [(nkey(e), e) for e in work]
    heapify(heap)
    rem = {}
    quots = [{} for _ in divisors] if track else None
    while heap:
        m = heappop(heap)[1]
        c = work.pop(m, None)
        if c is None:
            continue
        for k, (lm, lc, tail) in enumerate(divs):
            if _divides(lm, m):
                break
        else:
            rem[m] = c
            continue
        qe = _sub(m, lm)
        qc = c if lc == 1 else F.div(c, lc)
        if track:
            quots[k][qe] = F.add(quots[k].get(qe, 0), qc)
        for e, tc in tail:
            ne = tuple(x + y for x, y in zip(e, qe))
            old = work.get(ne)
            if old is None:
                val = F.neg(F.mul(qc, tc))
                if val:
                    work[ne] = val
                    heappush(heap, (nkey(ne), ne))
            else:
                val = F.sub(old, F.mul(qc, tc))
                if val:
                    work[ne] = val
                else:
                    del work[ne]
    if track:
        quots = [{e: c for e, c in q.items() if c} for q in quots]
    return quots, rem


def reduce(p, divisors):
    """Remainder of ``p`` on full division by ``divisors`` (a Poly)."""
    if not divisors or not p.terms:
        return p
    return Poly(p.ring, reduce_terms(p.terms, divisors, p.ring)[1])


def _combine(cofs, quots, basis_cofs, ring, modulus):
    out = list(cofs)
    for q, bc in zip(quots, basis_cofs):
        if not q or bc is None:
            continue
        qp = Poly(ring, q)
        for i, c in enumerate(bc):
            if c:
                out[i] = out[i] - qp * c
    if modulus:
        out = [reduce(c, modulus) for c in out]
    return out


def buchberger(polys, ring, cofactors=None, modulus=()):
    """Run Buchberger's algorithm with the product and chain criteria.

    ``cofactors`` (optional) gives, for each input polynomial, a list of Polys
    expressing it in terms of some fixed tracked generators (``None`` for an
    untracked input, meaning cofactor vector zero).  Tracked cofactors are kept
    reduced modulo ``modulus``.  Returns ``(basis, basis_cofactors)``; the
    basis is a (non-reduced) Groebner basis of the input ideal.
    """
    nkey = ring.nkey
    F = ring.field
    track = cofactors is not None
    width = 0
    if track:
        width = max((len(c) for c in cofactors if c is not None), default=0)
    G = []
    C = []
    for i, p in enumerate(polys):
        if not p.terms:
            continue
        inv = F.inv(p.lc())
        G.append(p.scale(inv))
        if track:
            c = cofactors[i]
            C.append([x.scale(inv) for x in c] if c is not None else [ring.zero()] * width)
    for g, c in zip(G, C if track else G):
        if g.is_constant():
            return [g], [c] if track else None
    lms = [g.lm() for g in G]
    pairs = set()
    queue = []

    def add_pair(i, j):
        # normal strategy: smallest lcm first (total degree, then the order)
        pairs.add((i, j))
        heappush(queue, (_pair_key(lms[i], lms[j], nkey), j, i))

    for j in range(len(G)):
        for i in range(j):
            add_pair(i, j)
    while queue:
        _, j, i = heappop(queue)
        pairs.discard((i, j))
        lcm = _lcm(lms[i], lms[j])
        if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
            continue
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _divides(lms[k], lcm) and (min(i, k), max(i, k)) not in pairs \
                    and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        mi, mj = _sub(lcm, lms[i]), _sub(lcm, lms[j])
        s = G[i].mul_term(mi, 1) - G[j].mul_term(mj, 1)
        if not s.terms:
            continue
        if track:
            ti, tj = ring.monomial(mi), ring.monomial(mj)
            scof = [a * ti - b * tj for a, b in zip(C[i], C[j])]
            quots, rem = reduce_terms(s.terms, G, ring, track=True)
        else:
            quots, rem = reduce_terms(s.terms, G, ring)
        if not rem:
            continue
        r = Poly(ring, rem)
        inv = F.inv(r.lc())
        r = r.scale(inv)
        if track:
            rc = _combine(scof, quots, C, ring, modulus)
            rc = [x.scale(inv) for x in rc]
            C.append(rc)
        G.append(r)
        lms.append(r.lm())
        if r.is_constant():
            return [r], [C[-1]] if track else None
        n = len(G) - 1
        for k in range(n):
            add_pair(k, n)
    return G, (C if track else None)


def reduced_basis(G):
    """Minimalize, interreduce, make monic and sort (ascending leading monomial)."""
    G = [g.monic() for g in G if g.terms]
    if not G:
        return []
    ring = G[0].ring
    nkey = ring.nkey
    for g in G:
        if g.is_constant():
            return [ring.one()]
    G.sort(key=lambda g: nkey(g.lm()), reverse=True)
    minimal = []
    for g in G:
        if not any(_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lm = g.lm()
        tail = {e: c for e, c in g.terms.items() if e != lm}
        rem = reduce_terms(tail, others, ring)[1] if others else tail
        rem[lm] = g.terms[lm]
        out.append(Poly(ring, rem))
    return out


def groebner_basis(gens, ring=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The output is canonical for the ideal and the ring's monomial order;
    the unit ideal gives ``[1]`` and the zero ideal gives ``[]``.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            return []
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different polynomial rings")
    G, _ = buchberger(gens, ring)
    return reduced_basis(G)


def ideal_membership(target, gens, modulus=()):
    """Cofactors ``c`` with ``sum(c_i * gens_i) == target`` modulo ``<modulus>``.

    ``modulus`` must be a Groebner basis of the relation ideal.  Returns a list
    of Polys reduced modulo ``modulus``, or ``None`` if the target is not in
    the ideal.  The cofactors are re-expanded and checked before returning.
    """
    ring = target.ring
    modulus = list(modulus)
    k = len(gens)
    polys = list(gens) + modulus
    unit = [[ring.one() if a == b else ring.zero() for b in range(k)] for a in range(k)]
    cofs = unit + [None] * len(modulus)
    G, C = buchberger(polys, ring, cofactors=cofs, modulus=modulus)
    if not target.terms:
        return [ring.zero()] * k
    quots, rem = reduce_terms(target.terms, G, ring, track=True)
    if rem:
        return None
    result = _combine([ring.zero()] * k, quots, C, ring, modulus)
    result = [-c for c in result]
    check = -target
    for c, g in zip(result, gens):
        check = check + c * g
    if reduce(check, modulus).terms:
        raise ArithmeticError("cofactor re-expansion failed")
    return result
