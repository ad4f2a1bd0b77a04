import math

from fractions import Fraction
from mpmath import libmp

from typing import Optional, Tuple, Union

Rational = Union[int, Fraction]


class Interval:
    '''
    A closed interval [lo, hi] with exact rational endpoints. All
    arithmetic rounds nowhere, so enclosures only widen through the
    explicit sqrt/log/exp steps, which round outward.
    '''
    __slots__ = ('lo', 'hi')

    def __init__(self, lo: Rational, hi: Optional[Rational] = None) -> None:
        self.lo = Fraction(lo)
        self.hi = self.lo if hi is None else Fraction(hi)
        if self.lo > self.hi:
            raise ValueError(
                'empty interval [{}, {}]'.format(self.lo, self.hi))

    def __repr__(self) -> str:
        return 'Interval({}, {})'.format(self.lo, self.hi)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Rational) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    def _coerce(self, other: Union['Interval', Rational]) -> 'Interval':
        if isinstance(other, Interval):
            return other
        return Interval(other)

    def __add__(self, other: Union['Interval', Rational]) -> 'Interval':
        o = self._coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> 'Interval':
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: Union['Interval', Rational]) -> 'Interval':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> 'Interval':
        return Interval(other) - self

    def __mul__(self, other: Union['Interval', Rational]) -> 'Interval':
        o = self._coerce(other)
        products = (
            self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> 'Interval':
        if self.contains_zero():
            raise ZeroDivisionError('interval {} contains zero'.format(self))
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: Union['Interval', Rational]) -> 'Interval':
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other: Rational) -> 'Interval':
        return Interval(other) * self.reciprocal()

    def square(self) -> 'Interval':
        a = self.lo * self.lo
        b = self.hi * self.hi
        if self.contains_zero():
            return Interval(0, max(a, b))
        return Interval(min(a, b), max(a, b))

    def __abs__(self) -> 'Interval':
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    def sqrt(self, bits: int) -> 'Interval':
        '''Outward-rounded square root on a grid of 2^-bits'''
        if self.lo < 0:
            raise ValueError('sqrt of an interval reaching below zero')
        scale = 4 ** bits
        lo_num = self.lo * scale
        hi_num = self.hi * scale
        lo_root = math.isqrt(lo_num.numerator // lo_num.denominator)
        hi_scaled = -(-hi_num.numerator // hi_num.denominator)
        hi_root = math.isqrt(hi_scaled)
        if hi_root * hi_root != hi_scaled:
            hi_root += 1
        return Interval(
            Fraction(lo_root, 2 ** bits), Fraction(hi_root, 2 ** bits))


def sqrt_interval(d: int, bits: int) -> Interval:
    '''Encloses sqrt(d) for a non-negative integer d with width 2^-bits'''
    t = math.isqrt(d << (2 * bits))
    if t * t == d << (2 * bits):
        return Interval(Fraction(t, 2 ** bits))
    return Interval(Fraction(t, 2 ** bits), Fraction(t + 1, 2 ** bits))


def _to_raw(x: Interval, prec: int) -> Tuple[tuple, tuple]:
    a = libmp.from_rational(
        x.lo.numerator, x.lo.denominator, prec, libmp.round_floor)
    b = libmp.from_rational(
        x.hi.numerator, x.hi.denominator, prec, libmp.round_ceiling)
    return a, b


def _from_raw(raw: Tuple[tuple, tuple]) -> Interval:
    a, b = raw
    return Interval(
        Fraction(*libmp.to_rational(a)), Fraction(*libmp.to_rational(b)))


def log(x: Interval, prec: int = 64) -> Interval:
    '''Natural log of a positive interval, rounded outward'''
    if x.lo <= 0:
        raise ValueError('log of an interval reaching zero')
    return _from_raw(libmp.mpi_log(_to_raw(x, prec + 8), prec))


def exp(x: Interval, prec: int = 64) -> Interval:
    return _from_raw(libmp.mpi_exp(_to_raw(x, prec + 8), prec))


def outward_floats(x: Interval) -> Tuple[float, float]:
    '''Float endpoints that still bracket x'''
    lo = float(x.lo)
    hi = float(x.hi)
    if lo > x.lo:
        lo = math.nextafter(lo, -math.inf)
    if hi < x.hi:
        hi = math.nextafter(hi, math.inf)
    return lo, hi
