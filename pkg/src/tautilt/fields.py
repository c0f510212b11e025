"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Elements are plain Python values (Fraction, or int in [0, p)); the field
object supplies the arithmetic.  Everything downstream (matrices, algebras,
modules) is generic over a field instance.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TauTiltError


class FieldError(TauTiltError):
    pass


class RationalField:
    """The field of rationals, elements are Fraction."""

    kind = "rational"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def parse(self, s):
        return Fraction(str(s))

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """Integers mod p, elements are ints in [0, p)."""

    kind = "prime"

    def __init__(self, p):
        if p <= 2 or not _is_prime(p):
            raise FieldError(f"characteristic must be a prime > 2, got {p}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, s):
        s = str(s)
        if "/" in s:
            num, den = s.split("/")
            return self.mul(int(num) % self.p, self.inv(int(den) % self.p))
        return int(s) % self.p

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


QQ = RationalField()


def field_from_config(cfg):
    """Build a field from {"kind": "rational"} or {"kind": "prime", "p": q}."""
    kind = cfg.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return PrimeField(int(cfg["p"]))
    raise FieldError(f"unknown field kind: {kind!r}")
