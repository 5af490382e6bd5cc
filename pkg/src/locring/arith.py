"""Exact coefficient arithmetic: integers, rationals and prime fields.

Integers are Python ints and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and canonical.  Prime fields are provided by
:class:`PrimeField`, whose elements are :class:`PrimeFieldElement`.
"""

from __future__ import annotations

import math
from fractions import Fraction


class DivisionByZeroError(ZeroDivisionError, ArithmeticError):
    """Raised when dividing by the zero element of a field."""


class CoefficientError(ValueError):
    """A value cannot be represented in the requested coefficient field."""


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(a, b) >= 0`` and ``u*a + v*b == g``."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def gcd_combination(values: list[int]) -> tuple[int, list[int]]:
    """Return ``(g, coeffs)`` with ``sum(c*v) == g == gcd(values)``."""
    g = 0
    coeffs: list[int] = []
    for value in values:
        g, u, v = extended_gcd(g, value)
        coeffs = [u * c for c in coeffs] + [v]
    return g, coeffs


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class RationalField:
    """The field of rational numbers; elements are ``Fraction`` instances."""

    name = "QQ"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def from_ratio(self, num: int, den: int) -> Fraction:
        if den == 0:
            raise DivisionByZeroError("zero denominator")
        return Fraction(num, den)

    def format(self, c: Fraction) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise CoefficientError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise DivisionByZeroError(f"division by zero in GF({self.p})")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * PrimeFieldElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    """The field GF(p).  ``p`` is checked for primality on construction."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"GF({p}): modulus is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise CoefficientError(f"element of GF({value.p}) is not in {self.name}")
            return value
        if isinstance(value, Fraction):
            return self.from_ratio(value.numerator, value.denominator)
        return PrimeFieldElement(int(value), self.p)

    def from_ratio(self, num: int, den: int) -> PrimeFieldElement:
        if den % self.p == 0:
            raise CoefficientError(f"{num}/{den} is not defined in {self.name}")
        return PrimeFieldElement(num, self.p) / PrimeFieldElement(den, self.p)

    def format(self, c: PrimeFieldElement) -> str:
        return str(c.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    """Parse ``"QQ"`` or ``"GF(p)"``."""
    text = name.strip()
    if text in ("QQ", "Q"):
        return QQ
    if text.startswith("GF(") and text.endswith(")"):
        try:
            p = int(text[3:-1])
        except ValueError:
            raise ValueError(f"bad field name {name!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {name!r}")


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}


def field_arithmetic(a, b, op: str):
    """Apply ``op`` (add, sub, mul, div) to two elements of one field."""
    if isinstance(a, PrimeFieldElement) != isinstance(b, PrimeFieldElement):
        raise CoefficientError("operands live in different fields")
    if op == "div":
        if not b:
            raise DivisionByZeroError("division by zero")
        return a / b
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
