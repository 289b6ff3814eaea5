"""Exact scalar fields: rationals by default, prime fields on request.

Algebra code never does float arithmetic; is_zero/equals decisions rely on
exact scalar equality, so every field here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RationalField:
    """The field of exact rationals (wraps fractions.Fraction)."""

    name = "QQ"

    def coerce(self, x):
        if isinstance(x, GFElement):
            raise TypeError("cannot coerce a prime-field element to QQ")
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class GFElement:
    """Element of GF(p), liberal about mixing with ints."""

    value: int
    p: int

    def _lift(self, other) -> "GFElement":
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise TypeError("mixed prime fields")
            return other
        if isinstance(other, int):
            return GFElement(other % self.p, self.p)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return GFElement((self.value + o.value) % self.p, self.p)

    __radd__ = __add__

    def __neg__(self):
        return GFElement(-self.value % self.p, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return GFElement((self.value * o.value) % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return self * GFElement(pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __str__(self):
        return str(self.value)


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise TypeError("mixed prime fields")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return GFElement(x.numerator, self.p) / GFElement(x.denominator, self.p)
        return GFElement(int(x) % self.p, self.p)

    @property
    def zero(self):
        return GFElement(0, self.p)

    @property
    def one(self):
        return GFElement(1, self.p)

    def __repr__(self):
        return self.name


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]
