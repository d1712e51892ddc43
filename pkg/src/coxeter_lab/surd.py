"""Quadratic surds a + b*sqrt(D) compared without floating point."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt


def _square_free_split(n: int) -> tuple[int, int]:
    """n = c**2 * d with d square-free; returns (c, d)."""
    c, d = 1, n
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            c *= f
        f += 1
    return c, d


def _sign_of(a: Fraction, b: Fraction, d: int) -> int:
    """Sign of a + b*sqrt(d), d >= 0."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0) if d else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 d
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


@total_ordering
@dataclass(frozen=True)
class Surd:
    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.d)
        if d < 0:
            raise ValueError("negative radicand")
        c, d = _square_free_split(d) if d else (0, 0)
        b = b * c
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, q) -> Surd:
        """sqrt of a nonnegative rational q."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("sqrt of a negative rational")
        # sqrt(p/r) = sqrt(p*r) / r
        return cls(Fraction(0), Fraction(1, q.denominator), q.numerator * q.denominator)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _coerce(self, other) -> Surd:
        if isinstance(other, Surd):
            if other.d and self.d and other.d != self.d:
                raise ValueError("surds with different radicands")
            return other
        return Surd(Fraction(other))

    def _radicand(self, other: Surd) -> int:
        return self.d or other.d

    def __add__(self, other):
        o = self._coerce(other)
        return Surd(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Surd):
            o = self._coerce(other)
            d = self._radicand(o)
            return Surd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)
        c = Fraction(other)
        return Surd(self.a * c, self.b * c, self.d)

    __rmul__ = __mul__

    def sign(self) -> int:
        return _sign_of(self.a, self.b, self.d)

    def __eq__(self, other):
        try:
            return (self - other).sign() == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __str__(self):
        if self.is_rational:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"

    def __repr__(self):
        return f"Surd({self})"


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
