"""Outward-rounded interval arithmetic on IEEE doubles.

Every primitive result is computed in round-to-nearest and then widened by
one ulp in each direction.  Since +, -, *, / and sqrt are correctly rounded,
the widened interval always contains the exact result, without touching the
FPU rounding mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _enclose(x) -> tuple[float, float]:
    """Tightest float pair around an exact int / Fraction / float."""
    if isinstance(x, float):
        if math.isnan(x):
            raise ValueError("NaN has no enclosure")
        return x, x
    f = float(x)
    if isinstance(x, int):
        if int(f) == x:
            return f, f
    elif Fraction(f) == x:
        return f, f
    return _down(f), _up(f)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty or NaN interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, x) -> "Interval":
        if isinstance(x, Interval):
            return x
        return cls(*_enclose(x))

    @classmethod
    def hull(cls, a, b) -> "Interval":
        a, b = cls.exact(a), cls.exact(b)
        return cls(min(a.lo, b.lo), max(a.hi, b.hi))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(p)), _up(max(p)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise ZeroDivisionError(f"divisor interval {o} contains zero")
        q = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(q)), _up(max(q)))

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sqrt(self) -> "Interval":
        if self.hi < 0:
            raise ValueError(f"sqrt of negative interval {self}")
        lo = 0.0 if self.lo <= 0 else max(0.0, _down(math.sqrt(self.lo)))
        return Interval(lo, _up(math.sqrt(self.hi)))

    # queries ------------------------------------------------------------

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, float):
            return self.lo <= x <= self.hi
        x = Fraction(x)
        return Fraction(self.lo) <= x <= Fraction(self.hi)

    def intersects(self, other) -> bool:
        o = Interval.exact(other)
        return self.lo <= o.hi and o.lo <= self.hi

    def certainly_lt(self, other) -> bool:
        return self.hi < Interval.exact(other).lo

    def certainly_gt(self, other) -> bool:
        return self.lo > Interval.exact(other).hi

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


def _coerce(x):
    if isinstance(x, Interval):
        return x
    if isinstance(x, (int, float, Rational)):
        return Interval.exact(x)
    return None


def isqrt_interval(k: int) -> Interval:
    """Enclosure of sqrt(k) for a nonnegative integer; exact for squares."""
    r = math.isqrt(k)
    if r * r == k:
        return Interval.exact(r)
    return Interval.exact(k).sqrt()


# Arithmetic backends -------------------------------------------------------
#
# Certificate formulas are written once against a small backend interface
# (num, sqrt, to_interval) so an undecided point can be re-evaluated at
# higher precision with the same code.


class FloatBackend:
    name = "float"

    def num(self, x) -> Interval:
        return Interval.exact(x)

    def sqrt(self, x) -> Interval:
        return Interval.exact(x).sqrt()

    def to_interval(self, x) -> Interval:
        return Interval.exact(x)


class ExtendedBackend:
    """mpmath interval arithmetic at 106 bits (double-double width)."""

    name = "extended"

    def __init__(self, prec: int = 106):
        self.ctx = mpmath.ctx_iv.MPIntervalContext()
        self.ctx.prec = prec

    def num(self, x):
        if isinstance(x, Interval):
            return self.ctx.mpf([x.lo, x.hi])
        if isinstance(x, Rational) and not isinstance(x, int):
            return self.ctx.mpf(x.numerator) / self.ctx.mpf(x.denominator)
        return self.ctx.mpf(x)

    def sqrt(self, x):
        return self.ctx.sqrt(self.num(x) if not hasattr(x, "a") else x)

    def to_interval(self, x) -> Interval:
        if not hasattr(x, "a"):
            return Interval.exact(x)
        return Interval(_down(float(x.a)), _up(float(x.b)))


FLOAT = FloatBackend()
