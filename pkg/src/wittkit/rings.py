"""Quotient rings R = k[x_1..x_s]/I, their elements in normal form, and ring maps."""

from fractions import Fraction

from .fields import QQ, Field
from .groebner import groebner_basis, ideal_membership, reduce
from .poly import Poly, PolyRing, format_poly, parse_poly


class ZeroRingError(ValueError):
    """The relations generate the unit ideal, so the presented ring is zero."""


class RingPresentation:
    """A finitely presented commutative k-algebra.

    The reduced Groebner basis of the relation ideal is computed once at
    construction and used for all normal forms.
    """

    def __init__(self, variables=(), relations=(), field=QQ, order="grevlex"):
        if isinstance(variables, PolyRing):
            ambient = variables
        else:
            if not isinstance(field, Field):
                field = Field(field)
            ambient = PolyRing(variables, field=field, order=order)
        self.ambient = ambient
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = parse_poly(r, ambient)
            elif not isinstance(r, Poly):
                r = ambient(r)
            rels.append(ambient(r))
        self.relations = tuple(rels)
        self.basis = tuple(groebner_basis(rels, ambient))
        if self.basis and self.basis[0].is_constant():
            raise ZeroRingError(f"relations {[str(r) for r in rels]} generate the unit ideal")
        self._gens = None

    field = property(lambda self: self.ambient.field)
    variables = property(lambda self: self.ambient.variables)
    order = property(lambda self: self.ambient.order)

    def __eq__(self, other):
        return (isinstance(other, RingPresentation) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        rels = ", ".join(str(g) for g in self.basis)
        return f"<{self.field!r}[{', '.join(self.variables)}]/({rels})>"

    def is_polynomial_ring(self):
        return not self.basis

    def reduce(self, p):
        """Normal form of an ambient polynomial (a Poly)."""
        return reduce(p, self.basis)

    def __call__(self, value):
        """Build a RingElement from an int, Fraction, string, Poly or RingElement."""
        if isinstance(value, RingElement):
            if value.ring == self:
                return value
            value = value.poly
        if isinstance(value, Poly):
            p = value if value.ring == self.ambient else self.ambient.convert(value)
        elif isinstance(value, str):
            p = parse_poly(value, self.ambient)
        else:
            p = self.ambient.constant(value)
        return RingElement(self, self.reduce(p), _normal=True)

    def normal_form(self, p):
        return self(p)

    @property
    def gens(self):
        if self._gens is None:
            self._gens = tuple(self(g) for g in self.ambient.gens)
        return self._gens

    def gen(self, name):
        return self.gens[self.ambient.var_index(name)]

    def zero(self):
        return RingElement(self, self.ambient.zero(), _normal=True)

    def one(self):
        return self(1)

    def ideal_membership(self, target, gens):
        """Cofactors c with sum(c_i g_i) == target in R, or None."""
        target = self(target)
        gens = [self(g) for g in gens]
        cof = ideal_membership(target.poly, [g.poly for g in gens], self.basis)
        if cof is None:
            return None
        result = [RingElement(self, c, _normal=True) for c in cof]
        check = self.zero()
        for c, g in zip(result, gens):
            check = check + c * g
        if check != target:
            raise ArithmeticError("cofactor verification failed")
        return result

    def inverse(self, a):
        """Inverse of a unit, or None when ``a`` is not a unit."""
        a = self(a)
        if a.is_constant():
            c = a.constant_value()
            return self(self.field.inv(c)) if c else None
        cof = self.ideal_membership(1, [a])
        return None if cof is None else cof[0]

    def is_unit(self, a):
        return self.inverse(a) is not None

    # -- text format ----------------------------------------------------
    def to_text(self):
        lines = [f"vars: {' '.join(self.variables)}", f"order: {self.order}", f"field: {self.field}"]
        lines += [f"rel: {format_poly(r)}" for r in self.relations]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text, field=None):
        """Parse the ``vars:/order:/rel:/field:`` line format; see :func:`parse_ring_text`."""
        return parse_ring_text(text, field=field)


class RingError(ValueError):
    pass


def parse_field(spec):
    """``Q`` or ``Fp 7`` (also accepts ``Fp:7``)."""
    s = spec.strip().replace(":", " ").split()
    if s == ["Q"] or s == ["QQ"]:
        return QQ
    if len(s) == 2 and s[0] in ("Fp", "GF"):
        return Field(int(s[1]))
    raise ValueError(f"unknown field {spec!r}")


def parse_ring_text(text, field=None, source="<ring>"):
    """Parse a ring presentation; errors carry ``source:line``."""
    variables = None
    order = "grevlex"
    rels = []
    fld = QQ
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition(":")
        key = key.strip()
        if not sep:
            raise RingError(f"{source}:{lineno}: expected 'key: value'")
        try:
            if key == "vars":
                variables = val.split()
            elif key == "order":
                order = val.strip()
                if order not in ("grevlex", "lex"):
                    raise ValueError(f"unknown monomial order {order!r}")
            elif key == "field":
                fld = parse_field(val)
            elif key == "rel":
                rels.append((lineno, val.strip()))
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise RingError(f"{source}:{lineno}: {exc}") from None
    if variables is None:
        variables = []
    if field is not None:
        fld = field
    ambient = PolyRing(variables, field=fld, order=order)
    polys = []
    for lineno, r in rels:
        try:
            polys.append(parse_poly(r, ambient))
        except (ValueError, ZeroDivisionError) as exc:
            raise RingError(f"{source}:{lineno}: {exc}") from None
    return RingPresentation(ambient, polys)


class RingElement:
    """An element of a RingPresentation, stored as its normal form."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring, poly, _normal=False):
        self.ring = ring
        self.poly = poly if _normal else ring.reduce(poly)

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly + other.poly, _normal=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly - other.poly, _normal=True)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return RingElement(self.ring, -self.poly, _normal=True)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly * other.poly)

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

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.poly.terms == other.poly.terms

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly.terms)

    def is_zero(self):
        return not self.poly.terms

    def is_constant(self):
        return self.poly.is_constant()

    def constant_value(self):
        return self.poly.constant_value()

    def degree(self):
        return self.poly.degree()

    def __str__(self):
        return format_poly(self.poly)

    def __repr__(self):
        return f"RingElement({format_poly(self.poly)!r})"


class RingHom:
    """A k-algebra map given by images of the source variables.

    Construction checks that every source relation maps to zero.
    """

    def __init__(self, source, target, images):
        if isinstance(images, dict):
            images = [images[v] for v in source.variables]
        images = tuple(target(x) for x in images)
        if len(images) != len(source.variables):
            raise ValueError("need one image per source variable")
        if source.field != target.field:
            raise ValueError("source and target fields differ")
        self.source = source
        self.target = target
        self.images = images
        for g in source.basis:
            if not self._subst(g).is_zero():
                raise ValueError(f"relation {g} does not map to zero in the target")

    def _subst(self, p):
        T = self.target
        total = T.ambient.zero()
        powers = {}
        for e, c in p.terms.items():
            term = T.ambient.constant(c)
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    if key not in powers:
                        powers[key] = (self.images[i] ** a).poly
                    term = term * powers[key]
            total = total + term
        return T(total)

    def __call__(self, x):
        if isinstance(x, RingElement):
            if x.ring != self.source:
                raise ValueError("element not in the source ring")
            return self._subst(x.poly)
        return self._subst(self.source(x).poly)

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, ring.gens)

    def compose(self, other):
        """``self`` after ``other``."""
        return RingHom(other.source, self.target, [self(x) for x in other.images])


def apply_hom(h, p):
    return h(p)


def normal_form(p, ring):
    return ring(p)
