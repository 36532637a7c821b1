"""Sparse multivariate polynomials over QQ or GF(p).

A polynomial is a dict mapping exponent tuples to nonzero coefficients.
Terms are listed in the ring's monomial order (grevlex by default).
"""

import re
from fractions import Fraction

from .fields import QQ, Field

ORDERS = ("grevlex", "lex")


class PolyRing:
    """The ambient ring k[x_1, ..., x_s] with a fixed monomial order."""

    __slots__ = ("field", "variables", "order", "nvars", "_nkey", "_index")

    def __init__(self, variables, field=QQ, order="grevlex"):
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ValueError(f"invalid variable name {v!r}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        if not isinstance(field, Field):
            field = Field(field)
        self.field = field
        self.variables = variables
        self.order = order
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}
        if order == "grevlex":
            self._nkey = lambda e: (-sum(e),) + e[::-1]
        else:
            self._nkey = lambda e: tuple(-a for a in e)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.variables == other.variables and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f"PolyRing({' '.join(self.variables)!r}, field={self.field!r}, order={self.order!r})"

    def nkey(self, exp):
        """Sort key: smaller key means larger monomial."""
        return self._nkey(exp)

    @property
    def zero_exp(self):
        return (0,) * self.nvars

    @property
    def gens(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Poly(self, {tuple(e): 1}))
        return tuple(out)

    def gen(self, name):
        return self.gens[self._index[name]]

    def var_index(self, name):
        return self._index[name]

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field(c)
        return Poly(self, {self.zero_exp: c} if c != 0 else {})

    def monomial(self, exp, c=1):
        c = self.field(c)
        return Poly(self, {tuple(exp): c} if c != 0 else {})

    def __call__(self, value):
        """Coerce ints, Fractions, strings and compatible polys into this ring."""
        if isinstance(value, Poly):
            if value.ring == self:
                return value
            return self.convert(value)
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.constant(value)

    def convert(self, p):
        """Map a polynomial over another variable list by variable name."""
        idx = []
        for v in p.ring.variables:
            if v not in self._index:
                raise ValueError(f"variable {v} not in {self.variables}")
            idx.append(self._index[v])
        terms = {}
        F = self.field
        for e, c in p.terms.items():
            ne = [0] * self.nvars
            for i, a in zip(idx, e):
                ne[i] = a
            c = F(c)
            if c:
                terms[tuple(ne)] = c
        return Poly(self, terms)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class Poly:
    """An element of a :class:`PolyRing`.

    Treat instances as immutable: ``terms`` is shared freely between results.
    """

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- inspection ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.ring.zero_exp, 0)

    def lm(self):
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = min(self.terms, key=self.ring.nkey)
        return self._lm

    def lc(self):
        return self.terms[self.lm()]

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        """Terms as (exponent, coefficient) pairs, largest monomial first."""
        nkey = self.ring.nkey
        return sorted(self.terms.items(), key=lambda t: nkey(t[0]))

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return used

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(terms.get(e, 0), c)
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        p = F.characteristic
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        terms = {}
        get = terms.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = get(e, 0) + ca * cb
        if p:
            terms = {e: c % p for e, c in terms.items() if c % p}
        else:
            terms = {e: F.add(c, 0) for e, c in terms.items() if c}
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def mul_term(self, exp, c):
        F = self.ring.field
        return Poly(self.ring, {_add_exp(e, exp): F.mul(v, c) for e, v in self.terms.items()})

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def exact_div(self, d):
        """Quotient of an exact division by ``d``; raises if not exact."""
        from .groebner import reduce_terms
        q, r = reduce_terms(self.terms, [d], self.ring, track=True)
        if r:
            raise ArithmeticError(f"{d} does not divide {self}")
        return Poly(self.ring, q[0])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of field elements."""
        F = self.ring.field
        total = 0
        point = [F(x) for x in point]
        for e, c in self.terms.items():
            t = c
            for x, a in zip(point, e):
                for _ in range(a):
                    t = F.mul(t, x)
            total = F.add(total, t)
        return total

    # -- printing -----------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def format_monomial(exp, variables):
    parts = []
    for v, a in zip(variables, exp):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def format_poly(p):
    """Render in the round-trippable text syntax (``3/2*x^2*y - z + 1``)."""
    if not p.terms:
        return "0"
    out = []
    for k, (e, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        mag = -c if neg else c
        mono = format_monomial(e, p.ring.variables)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class PolySyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("var", name))
        else:
            if op not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {op!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise PolySyntaxError(f"expected {op!r}, got {t[1]!r}")

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise PolySyntaxError("exponent must be a non-negative integer")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            if self.peek() == ("op", "/"):
                self.take()
                k2, den = self.take()
                if k2 != "num" or den == 0:
                    raise PolySyntaxError("bad rational literal")
                return self.ring.constant(Fraction(val, den))
            return self.ring.constant(val)
        if kind == "var":
            if val not in self.ring.variables:
                raise PolySyntaxError(f"unknown variable {val!r}")
            return self.ring.gen(val)
        if (kind, val) == ("op", "("):
            e = self.expr()
            self.expect(")")
            return e
        raise PolySyntaxError(f"unexpected token {val!r}" if kind else "unexpected end of input")


def parse_poly(text, ring):
    """Parse the polynomial syntax: ints, ``a/b``, ``*``, ``^``, ``+``, ``-``, parentheses."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolySyntaxError("empty polynomial")
    parser = _Parser(tokens, ring)
    result = parser.expr()
    if parser.i != len(tokens):
        raise PolySyntaxError(f"trailing input at token {parser.peek()[1]!r}")
    return result
