"""Exact field arithmetic over the rationals and over prime fields GF(p).

Scalars are immutable and carry their field; mixing fields raises
FieldMismatch.  Rationals are stored as reduced ``fractions.Fraction``
values, prime-field elements as residues in ``[0, p)``, so equality of
values is equality of representations.
"""

from __future__ import annotations

import math
from fractions import Fraction


class FieldMismatch(TypeError):
    """Operands live over different fields."""


class DivisionByZero(ZeroDivisionError):
    """Division or inversion of a zero field element."""


class CharTwo(ValueError):
    """The operation assumes characteristic different from 2."""


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


class Field:
    """The field of rationals (``Field()``) or GF(p) (``Field(p)``).

    Instances are interned, so fields compare by identity.
    """

    __slots__ = ("p",)
    _cache: dict = {}

    def __new__(cls, p=None):
        if p in cls._cache:
            return cls._cache[p]
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p):
                raise ValueError(f"modulus must be prime, got {p!r}")
        self = object.__new__(cls)
        self.p = p
        cls._cache[p] = self
        return self

    @property
    def is_rationals(self):
        return self.p is None

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    def require_odd_char(self):
        """Reject GF(2); the bracket-level theory assumes char != 2."""
        if self.p == 2:
            raise CharTwo("operation requires characteristic != 2")

    def __call__(self, value) -> "Scalar":
        """Coerce an int, Fraction, or same-field Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatch(f"{value!r} is not over {self!r}")
            return value
        if self.p is None:
            if isinstance(value, (int, Fraction)):
                return Scalar(self, Fraction(value))
            raise TypeError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return Scalar(self, value % self.p)
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        """Iterate all elements; only available for prime fields."""
        if self.p is None:
            raise ValueError("cannot enumerate the rationals")
        for r in range(self.p):
            yield Scalar(self, r)

    def __repr__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    def __reduce__(self):
        return (Field, (self.p,))


#: The rational field, shared singleton.
QQ = Field()


def GF(p):
    """The prime field with p elements."""
    return Field(p)


class Scalar:
    """An exact element of Q or GF(p) in canonical form."""

    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldMismatch(
                    f"operands over {self.field!r} and {other.field!r}"
                )
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return Scalar(self.field, self.v + o.v if p is None else (self.v + o.v) % p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return Scalar(self.field, self.v - o.v if p is None else (self.v - o.v) % p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return Scalar(self.field, self.v * o.v if p is None else (self.v * o.v) % p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        p = self.field.p
        return Scalar(self.field, -self.v if p is None else (-self.v) % p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        p = self.field.p
        if p is None:
            return Scalar(self.field, self.v**n)
        return Scalar(self.field, pow(self.v, n, p))

    def inverse(self):
        if not self.v:
            raise DivisionByZero("inverse of zero")
        p = self.field.p
        if p is None:
            return Scalar(self.field, 1 / self.v)
        return Scalar(self.field, pow(self.v, -1, p))

    def __bool__(self):
        return bool(self.v)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field is other.field and self.v == other.v

    def __hash__(self):
        return hash((id(self.field), self.v))

    def is_square(self):
        """True iff the element is a square in its field.

        Over Q: numerator and denominator of the reduced fraction are both
        perfect squares (negative values are never squares).  Over GF(p):
        Euler's criterion, with 0 counted as a square.
        """
        p = self.field.p
        if p is None:
            f = self.v
            if f < 0:
                return False
            num, den = f.numerator, f.denominator
            return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den
        if self.v == 0 or p == 2:
            return True
        return pow(self.v, (p - 1) // 2, p) == 1

    def sqrt(self):
        """An exact square root, or None when the element is not a square."""
        p = self.field.p
        if p is None:
            if not self.is_square():
                return None
            f = self.v
            return Scalar(self.field, Fraction(math.isqrt(f.numerator), math.isqrt(f.denominator)))
        # Desk-scale moduli: a direct scan is simplest and deterministic.
        for s in range(0, p // 2 + 1):
            if s * s % p == self.v:
                return Scalar(self.field, s)
        return None

    def __repr__(self):
        return f"{self}"

    def __str__(self):
        if self.field.p is None and self.v.denominator != 1:
            return f"{self.v.numerator}/{self.v.denominator}"
        return str(int(self.v) if self.field.p is not None else self.v.numerator)


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact field arithmetic dispatch: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")
