"""Coefficient fields: the rationals and prime fields GF(p)."""

from fractions import Fraction

MAX_PRIME = 2**31


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _q(x):
    # keep integral rationals as plain ints (cheaper arithmetic, same hash/eq)
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class Field:
    """Exact coefficient field.

    ``characteristic == 0`` is the field of rationals (values are ``int`` or
    ``Fraction`` in lowest terms); otherwise values are ints in ``[0, p)``.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic=0):
        p = int(characteristic)
        if p != 0:
            if p >= MAX_PRIME or not _is_prime(p):
                raise ValueError(f"prime field characteristic must be a prime < 2^31, got {p}")
        self.characteristic = p

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"Fp {self.characteristic}"

    @property
    def is_rational(self):
        return self.characteristic == 0

    def __call__(self, value):
        """Coerce an int, Fraction or string like ``"3/4"`` into the field."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            value = int(value)
        if p == 0:
            if isinstance(value, (int, Fraction)):
                return _q(Fraction(value))
            raise TypeError(f"cannot coerce {value!r} into QQ")
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            num = value.numerator % p
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        raise TypeError(f"cannot coerce {value!r} into GF({p})")

    def add(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else _q(a + b)

    def sub(self, a, b):
        p = self.characteristic
        return (a - b) % p if p else _q(a - b)

    def mul(self, a, b):
        p = self.characteristic
        return a * b % p if p else _q(a * b)

    def neg(self, a):
        p = self.characteristic
        return -a % p if p else -a

    def inv(self, a):
        p = self.characteristic
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if p:
            return pow(a, -1, p)
        return _q(1 / Fraction(a))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        """Iterate the elements of a prime field in canonical order."""
        if not self.characteristic:
            raise ValueError("QQ is infinite")
        return range(self.characteristic)

    def format(self, c):
        return str(c)


QQ = Field(0)


def GF(p):
    return Field(p)
