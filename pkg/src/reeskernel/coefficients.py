"""Exact coefficient fields: prime fields GF(p) and the rationals.

Polynomials store raw coefficient values for speed (``int`` residues in
``[0, p)`` for GF(p), :class:`fractions.Fraction` for QQ).  A
:class:`Field` knows how to combine those raw values; :class:`FieldElement`
is the checked, operator-friendly wrapper for code outside the hot loops.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

PRIME_BOUND = 2**31

Number = Union[int, Fraction]


class FieldError(ArithmeticError):
    """Raised for invalid field construction or arithmetic."""


def is_prime(n: int) -> bool:
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


def inverse_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise FieldError(f"{a} is not invertible modulo {p}")
    return s0 % p


@dataclass(frozen=True)
class Field:
    """A coefficient field, either ``Field.gf(p)`` or ``Field.qq()``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == "prime":
            if not 1 < self.p < PRIME_BOUND:
                raise FieldError(f"prime must satisfy 1 < p < 2^31, got {self.p}")
            if not is_prime(self.p):
                raise FieldError(f"{self.p} is not prime")
        elif self.kind == "rational":
            if self.p != 0:
                raise FieldError("the rationals carry no modulus")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls("prime", p)

    @classmethod
    def qq(cls) -> "Field":
        return cls("rational")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    def __str__(self):
        return f"GF({self.p})" if self.kind == "prime" else "QQ"

    # raw-value arithmetic ------------------------------------------------
    def coerce(self, value) -> Number:
        """Bring an int, Fraction or FieldElement into canonical raw form."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if self.kind == "prime":
            if isinstance(value, Fraction):
                return value.numerator % self.p * inverse_mod(value.denominator, self.p) % self.p
            if isinstance(value, int):
                return value % self.p
        else:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        raise FieldError(f"cannot interpret {value!r} in {self}")

    def zero(self) -> Number:
        return 0 if self.kind == "prime" else Fraction(0)

    def one(self) -> Number:
        return 1 if self.kind == "prime" else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"division by zero in {self}")
        return inverse_mod(a, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: Number

    def _other(self, other) -> Number:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields: {self.field} and {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return FieldElement(self.field, self.field.inv(self.value)) ** (-n)
        if self.field.p:
            return FieldElement(self.field, pow(self.value, n, self.field.p))
        return FieldElement(self.field, self.value**n)

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return str(self.value)


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two elements of one field."""
    if a.field != b.field:
        raise FieldError(f"mixed fields: {a.field} and {b.field}")
    ops = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return FieldElement(a.field, fn(a.value, b.value))
