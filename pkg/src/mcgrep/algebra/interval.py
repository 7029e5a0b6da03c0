"""Certified real intervals with dyadic-rational endpoints.

Every operation rounds its result outward to ``precision`` significant bits,
so the exact real value of any expression is always contained in the computed
interval. The precision travels with the value; mixing precisions takes the
larger one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

DEFAULT_PRECISION = 128


def floor_dyadic(x: Fraction, precision: int) -> Fraction:
    """Largest dyadic with ``precision`` significant bits that is <= x."""
    x = Fraction(x)
    if x == 0:
        return x
    n, d = x.numerator, x.denominator
    shift = precision - (abs(n).bit_length() - d.bit_length())
    if shift >= 0:
        return Fraction((n << shift) // d, 1 << shift)
    return Fraction((n // (d << -shift)) << -shift)


def ceil_dyadic(x: Fraction, precision: int) -> Fraction:
    return -floor_dyadic(-Fraction(x), precision)


@dataclass(frozen=True)
class CertInterval:
    lo: Fraction
    hi: Fraction
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x, precision: int = DEFAULT_PRECISION) -> CertInterval:
        """Exact point interval; no rounding is applied."""
        return cls(Fraction(x), Fraction(x), precision)

    @classmethod
    def enclose(cls, x, precision: int = DEFAULT_PRECISION) -> CertInterval:
        """Dyadic enclosure of an exact rational."""
        x = Fraction(x)
        return cls(floor_dyadic(x, precision), ceil_dyadic(x, precision), precision)

    def _rounded(self, lo: Fraction, hi: Fraction, precision: int) -> CertInterval:
        return CertInterval(floor_dyadic(lo, precision), ceil_dyadic(hi, precision), precision)

    def _lift(self, other) -> CertInterval | None:
        if isinstance(other, CertInterval):
            return other
        if isinstance(other, Rational):
            return CertInterval.point(other, self.precision)
        return None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __bool__(self) -> bool:
        return not (self.lo == 0 and self.hi == 0)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        p = max(self.precision, o.precision)
        return self._rounded(self.lo + o.lo, self.hi + o.hi, p)

    __radd__ = __add__

    def __neg__(self) -> CertInterval:
        return CertInterval(-self.hi, -self.lo, self.precision)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        p = max(self.precision, o.precision)
        ends = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return self._rounded(min(ends), max(ends), p)

    __rmul__ = __mul__

    def reciprocal(self) -> CertInterval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return self._rounded(1 / self.hi, 1 / self.lo, self.precision)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __pow__(self, n: int) -> CertInterval:
        if n < 0:
            return (self**-n).reciprocal()
        result = CertInterval.point(1, self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def contains(self, x) -> bool:
        if isinstance(x, CertInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def overlaps(self, other: CertInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def excludes(self, x) -> bool:
        """True when the interval certifiably differs from ``x``."""
        if isinstance(x, CertInterval):
            return not self.overlaps(x)
        return not self.contains(x)

    def __str__(self) -> str:
        return f"[{float(self.lo):.17g}, {float(self.hi):.17g}]"
