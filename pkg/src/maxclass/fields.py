"""Exact field arithmetic over Q and prime fields F_p.

Scalars are plain Python values: ``fractions.Fraction`` for Q and an
integer residue in [0, p) for F_p.  A ``Field`` object carries the
operations, so all other modules stay field-agnostic.
"""
from __future__ import annotations

from fractions import Fraction


class DivisionByZero(ZeroDivisionError):
    """Inversion of zero (or of a residue that is zero mod p)."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Base class; concrete fields are Rationals and PrimeField."""

    kind: str
    characteristic: int

    def of(self, n, d=1):
        raise NotImplementedError

    def from_rational(self, fr: Fraction):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("field", self.characteristic))


class Rationals(Field):
    kind = "Rationals"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, n, d=1):
        if d == 0:
            raise DivisionByZero("denominator is zero")
        return Fraction(n, d)

    def from_rational(self, fr):
        return Fraction(fr)

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
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def format(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "PrimeField"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def of(self, n, d=1):
        p = self.p
        if d % p == 0:
            raise DivisionByZero(f"denominator {d} is zero mod {p}")
        return n * pow(d % p, -1, p) % p

    def from_rational(self, fr):
        fr = Fraction(fr)
        return self.of(fr.numerator, fr.denominator)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def format(self, a) -> str:
        return f"{a % self.p} mod {self.p}"

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def make_scalar(field: Field, n: int, d: int = 1):
    """Canonical representative of n/d in the field."""
    return field.of(n, d)


def arith(field: Field, op: str, a, b=None):
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "neg":
        return field.neg(a)
    if op == "inv":
        return field.inv(a)
    raise ValueError(f"unknown op {op!r}")


def parse_field(spec: str) -> Field:
    """Parse a field selection string: "q" or "fp:<prime>"."""
    spec = spec.strip().lower()
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"bad field spec {spec!r} (expected 'q' or 'fp:<prime>')")
