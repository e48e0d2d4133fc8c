"""Exact scalar fields: the rationals and prime fields GF(p).

Rationals are plain ``fractions.Fraction`` values.  Prime-field elements are
``Fp`` instances supporting the same arithmetic operators, so the rest of the
library can be written once against ordinary ``+ - * /``.
"""

from fractions import Fraction


class Fp:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            return other.v
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return other

    def __add__(self, other):
        return Fp(self.v + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other) % self.p
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return Fp(self._coerce(other), self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pow__(self, n):
        if n < 0:
            return Fp(pow(self.v, -1, self.p), self.p) ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.v == other.v
        return self.v == self._coerce(other) % self.p

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)


class Field:
    """A prime field (``char`` > 0) or the rationals (``char`` == 0)."""

    def __init__(self, char=0):
        if char < 0 or (char > 0 and not _is_prime(char)):
            raise ValueError("characteristic must be 0 or a prime, got %r" % char)
        self.char = char
        self.zero = self(0)
        self.one = self(1)

    def __call__(self, x):
        if self.char == 0:
            if isinstance(x, Fp):
                raise TypeError("cannot map a GF(p) element to the rationals")
            return Fraction(x)
        if isinstance(x, Fp):
            return Fp(x.v, self.char)
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.char) / Fp(x.denominator, self.char)
        return Fp(int(x), self.char)

    def size(self):
        """Number of elements, or None for the rationals."""
        return self.char or None

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else "GF(%d)" % self.char


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


QQ = Field(0)


def GF(p):
    return Field(p)


def scalar_to_json(x):
    """Serialize a scalar as an int when integral, else as a 'p/q' string."""
    if isinstance(x, Fp):
        return x.v
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)
