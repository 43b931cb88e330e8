"""Exact scalar arithmetic over the rationals or a prime field GF(p).

Field elements are plain Python values: ``fractions.Fraction`` over the
rationals, canonical ints ``0..p-1`` over GF(p).  Both kinds stay exact
under the native ``+``, ``-``, ``*`` operators, so inner loops may
accumulate with plain arithmetic and call :meth:`Field.normalize` once
per result to reduce back to canonical form.  Division always goes
through :meth:`Field.inv`.

No floating point is used anywhere in this package.
"""

import re
from fractions import Fraction

from .errors import FieldMismatch, ParseError

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of the two scalar domains."""

    def normalize(self, x):
        raise NotImplementedError

    def neg(self, x):
        return self.normalize(-x)

    def inv(self, x):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, x):
        raise NotImplementedError

    def elements(self):
        """Iterate all elements; only finite fields support this."""
        raise NotImplementedError(f"{self!r} is not finite")

    @property
    def is_finite(self):
        return False

    def check_same(self, other):
        if self != other:
            raise FieldMismatch(f"field mismatch: {self!r} vs {other!r}")


class Rationals(Field):
    """Arbitrary-precision exact fractions."""

    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(x)

    def parse(self, text):
        if not _RATIONAL_RE.match(text):
            raise ParseError(f"bad rational {text!r}: expected a or a/b")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"bad rational {text!r}: zero denominator") from None

    def format(self, x):
        return str(Fraction(x))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Rationals()"


class PrimeField(Field):
    """Integers mod a prime p, with canonical representatives 0..p-1."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def normalize(self, x):
        return x % self.p

    def inv(self, x):
        x = x % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(x, self.p - 2, self.p)

    def parse(self, text):
        try:
            v = int(text)
        except ValueError:
            raise ParseError(f"bad element {text!r} of GF({self.p})") from None
        if not 0 <= v < self.p:
            raise ParseError(f"{text!r} is not a canonical representative 0..{self.p - 1}")
        return v

    def format(self, x):
        return str(x % self.p)

    def elements(self):
        return range(self.p)

    @property
    def is_finite(self):
        return True

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()
GF2 = PrimeField(2)
GF3 = PrimeField(3)
