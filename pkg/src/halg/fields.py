"""Exact scalar arithmetic: the rationals and prime fields GF(p).

Every computation in this package happens over one of these two kinds of
field.  Rational scalars are plain ``fractions.Fraction`` objects; prime
field scalars are small interned wrapper objects supporting the same
operator protocol, so the linear algebra layer never needs to know which
field it is working over.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class FpElement:
    """An element of GF(p), stored as a residue in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError("mixed characteristics %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes in GF(%d)" % self.p)
            return FpElement(other.numerator, self.p) / FpElement(other.denominator, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpElement(self.v * pow(o.v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Rationals:
    """The field of rational numbers."""

    name = "QQ"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x) -> Fraction:
        """Coerce an int, string like ``-3/4``, or Fraction into the field."""
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError("bad rational literal %r: %s" % (text, exc))

    def format(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The finite field GF(p) for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError("%r is not prime" % (p,))
        self.p = p
        self.name = "GF(%d)" % p
        self.characteristic = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def of(self, x) -> FpElement:
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldError("element of GF(%d) used in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError("denominator of %s vanishes in GF(%d)" % (x, self.p))
            return FpElement(x.numerator, self.p) / FpElement(x.denominator, self.p)
        return FpElement(int(x), self.p)

    def parse(self, text: str) -> FpElement:
        try:
            return self.of(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError("bad scalar literal %r: %s" % (text, exc))

    def format(self, x) -> str:
        return str(x.v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    """Parse a field declaration such as ``rational`` or ``prime 5``."""
    parts = name.split()
    if parts == ["rational"]:
        return QQ
    if len(parts) == 2 and parts[0] == "prime":
        try:
            p = int(parts[1])
        except ValueError:
            raise FieldError("bad prime %r" % parts[1])
        return GF(p)
    raise FieldError("unknown field %r (expected 'rational' or 'prime p')" % name)
