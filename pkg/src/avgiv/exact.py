"""Exact arithmetic in a real quadratic field Q(sqrt(d)).

Every value is stored canonically as ``rat + coef * sqrt(rad)`` with ``rad``
square-free (and ``rad == 0`` for rationals), so equality is fieldwise and
hashing is cheap. Operands from two different irrational fields are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction

Number = Union["ExactReal", Fraction, int]

_ZERO = Fraction(0)


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def normalize_rational(num: int, den: int) -> Fraction:
    """Reduced fraction ``num/den`` with a positive denominator."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


@lru_cache(maxsize=1024)
def _square_free(n: int) -> tuple[int, int]:
    """Split ``n >= 1`` as ``m**2 * d`` with ``d`` square-free; return (m, d)."""
    m, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return m, d * n


def _sign(a: Fraction, b: Fraction, d: int) -> int:
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or sa == sb:
        return sa or sb
    if sa == 0:
        return sb
    # opposite signs: the larger square wins
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


@dataclass(frozen=True, eq=False)
class ExactReal:
    rat: Fraction
    coef: Fraction
    rad: int

    # -- construction ---------------------------------------------------

    @classmethod
    def of(cls, value: Number) -> ExactReal:
        if isinstance(value, ExactReal):
            return value
        if isinstance(value, Fraction):
            return cls(value, _ZERO, 0)
        if isinstance(value, int):
            return cls(Fraction(value), _ZERO, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to ExactReal")

    # -- predicates -----------------------------------------------------

    def is_rational(self) -> bool:
        return self.coef == 0

    def as_fraction(self) -> Fraction:
        if self.coef:
            raise DomainError(f"{self} is irrational")
        return self.rat

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)``."""
        return _sign(self.rat, self.coef, self.rad)

    # -- arithmetic -----------------------------------------------------

    def _field(self, other: ExactReal) -> int:
        if self.rad and other.rad and self.rad != other.rad:
            raise DomainError(
                f"mixed radicands sqrt({self.rad}) and sqrt({other.rad})"
            )
        return self.rad or other.rad

    def __add__(self, other: Number) -> ExactReal:
        try:
            o = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        rad = self._field(o)
        return make_exact(self.rat + o.rat, self.coef + o.coef, rad)

    __radd__ = __add__

    def __neg__(self) -> ExactReal:
        return ExactReal(-self.rat, -self.coef, self.rad)

    def __sub__(self, other: Number) -> ExactReal:
        try:
            o = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> ExactReal:
        return ExactReal.of(other) - self

    def __mul__(self, other: Number) -> ExactReal:
        try:
            o = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        d = self._field(o)
        a, b, c, e = self.rat, self.coef, o.rat, o.coef
        return make_exact(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def conjugate(self) -> ExactReal:
        return ExactReal(self.rat, -self.coef, self.rad)

    def __truediv__(self, other: Number) -> ExactReal:
        try:
            o = ExactReal.of(other)
        except TypeError:
            return NotImplemented
        self._field(o)
        if o.rat == 0 and o.coef == 0:
            raise DomainError("division by zero")
        if o.coef == 0:
            return make_exact(self.rat / o.rat, self.coef / o.rat, self.rad)
        norm = o.rat * o.rat - o.coef * o.coef * o.rad
        num = self * o.conjugate()
        return make_exact(num.rat / norm, num.coef / norm, num.rad)

    def __rtruediv__(self, other: Number) -> ExactReal:
        return ExactReal.of(other) / self

    def __abs__(self) -> ExactReal:
        return -self if self.sign() < 0 else self

    # -- ordering -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactReal.of(other)
        if not isinstance(other, ExactReal):
            return NotImplemented
        return (self.rat, self.coef, self.rad) == (other.rat, other.coef, other.rad)

    def __hash__(self) -> int:
        if self.coef == 0:
            return hash(self.rat)
        return hash((self.rat, self.coef, self.rad))

    def __lt__(self, other: Number) -> bool:
        return compare(self, other) < 0

    def __le__(self, other: Number) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: Number) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: Number) -> bool:
        return compare(self, other) >= 0

    # -- rounding -------------------------------------------------------

    def __floor__(self) -> int:
        if self.coef == 0:
            return math.floor(self.rat)
        # rational approximation of sqrt(rad), then exact correction
        bits = 64 + 2 * max(self.coef.numerator.bit_length(),
                            self.coef.denominator.bit_length())
        root = Fraction(math.isqrt(self.rad << (2 * bits)), 1 << bits)
        k = math.floor(self.rat + self.coef * root)
        while self < k:
            k -= 1
        while self >= k + 1:
            k += 1
        return k

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        return float(self.rat) + float(self.coef) * math.sqrt(self.rad)

    # -- text -----------------------------------------------------------

    def __str__(self) -> str:
        return format_exact(self)

    def __repr__(self) -> str:
        return f"ExactReal({format_exact(self)!r})"


def make_exact(rat: Number, coef: Number = 0, rad: int = 0) -> ExactReal:
    """Canonical ``rat + coef*sqrt(rad)``; square factors of ``rad`` move into ``coef``."""
    if rad < 0:
        raise DomainError(f"negative radicand {rad}")
    if not isinstance(rat, Fraction):
        rat = Fraction(rat)
    if not isinstance(coef, Fraction):
        coef = Fraction(coef)
    if coef == 0 or rad == 0:
        return ExactReal(rat, _ZERO, 0)
    m, d = _square_free(rad)
    coef *= m
    if d == 1:
        return ExactReal(rat + coef, _ZERO, 0)
    return ExactReal(rat, coef, d)


def compare(x: Number, y: Number) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to, or greater than ``y``."""
    x, y = ExactReal.of(x), ExactReal.of(y)
    return _sign(x.rat - y.rat, x.coef - y.coef, x._field(y))


def is_rational(x: ExactReal) -> bool:
    return x.coef == 0


def sqrt(n: int) -> ExactReal:
    return make_exact(0, 1, n)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_exact(x: ExactReal) -> str:
    """Render in the textual grammar accepted by :func:`avgiv.cli.parse_number`."""
    if x.coef == 0:
        return _fmt_rat(x.rat)
    root = f"sqrt({x.rad})"
    if x.rat == 0:
        return root if x.coef == 1 else f"{_fmt_rat(x.coef)}*{root}"
    op = "+" if x.coef > 0 else "-"
    mag = abs(x.coef)
    term = root if mag == 1 else f"{_fmt_rat(mag)}*{root}"
    return f"{_fmt_rat(x.rat)}{op}{term}"
