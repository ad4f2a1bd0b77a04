import re
import math

from fractions import Fraction

from toruslab import nt
from toruslab.reals.interval import Interval, sqrt_interval

from typing import Optional, Union

Number = Union[int, Fraction, 'Surd']

_SURD_RE = re.compile(
    r"^\s*(?P<r>[-+]?\d+(?:/\d+)?)\s*"
    r"(?:(?P<sign>[-+])\s*(?P<q>\d+(?:/\d+)?)\s*\*\s*sqrt\((?P<d>\d+)\))?\s*$")


class Surd:
    '''
    An exact element r + q*sqrt(d) of Q(sqrt(d)), d squarefree. Pure
    rationals carry d == 1 and q == 0.
    '''
    __slots__ = ('r', 'q', 'd')

    def __init__(self, r: Union[int, Fraction] = 0,
                 q: Union[int, Fraction] = 0, d: int = 1) -> None:
        r = Fraction(r)
        q = Fraction(q)
        if d < 1:
            raise ValueError('radicand must be positive, got {}'.format(d))
        if d == 1:
            r += q
            q = Fraction(0)
        if q == 0:
            d = 1
        self.r = r
        self.q = q
        self.d = d

    @classmethod
    def sqrt_of(cls, x: Union[int, Fraction]) -> 'Surd':
        '''sqrt(u/v) = (c/v) sqrt(s) where u v = c^2 s'''
        x = Fraction(x)
        if x < 0:
            raise ValueError('sqrt of a negative rational')
        if x == 0:
            return cls(0)
        c, s = nt.squarefree_part(x.numerator * x.denominator)
        return cls(0, Fraction(c, x.denominator), s)

    @classmethod
    def parse(cls, text: str) -> 'Surd':
        '''Reads the "r+q*sqrt(d)" form produced by str()'''
        m = _SURD_RE.match(text)
        if m is None:
            raise ValueError('not a surd: {!r}'.format(text))
        r = Fraction(m.group('r'))
        if m.group('d') is None:
            return cls(r)
        q = Fraction(m.group('q'))
        if m.group('sign') == '-':
            q = -q
        d = int(m.group('d'))
        if d == 0:
            return cls(r)
        c, s = nt.squarefree_part(d)
        return cls(r, q * c, s)

    def __repr__(self) -> str:
        return 'Surd({!r})'.format(str(self))

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.r)
        sign = '+' if self.q > 0 else '-'
        return '{}{}{}*sqrt({})'.format(self.r, sign, abs(self.q), self.d)

    def _coerce(self, other: Number) -> 'Surd':
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(other)
        raise TypeError('cannot combine Surd with {}'.format(type(other)))

    def _field(self, other: 'Surd') -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise ValueError(
            'mixed radicands sqrt({}) and sqrt({})'.format(self.d, other.d))

    def is_rational(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError('{} is irrational'.format(self))
        return self.r

    def __add__(self, other: Number) -> 'Surd':
        o = self._coerce(other)
        d = self._field(o)
        return Surd(self.r + o.r, self.q + o.q, d)

    __radd__ = __add__

    def __neg__(self) -> 'Surd':
        return Surd(-self.r, -self.q, self.d)

    def __sub__(self, other: Number) -> 'Surd':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> 'Surd':
        return self._coerce(other) - self

    def __mul__(self, other: Number) -> 'Surd':
        o = self._coerce(other)
        d = self._field(o)
        return Surd(
            self.r * o.r + self.q * o.q * d,
            self.r * o.q + self.q * o.r,
            d)

    __rmul__ = __mul__

    def conjugate(self) -> 'Surd':
        return Surd(self.r, -self.q, self.d)

    def norm(self) -> Fraction:
        '''Field norm r^2 - q^2 d'''
        return self.r * self.r - self.q * self.q * self.d

    def inverse(self) -> 'Surd':
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('Surd division by zero')
        c = self.conjugate()
        return Surd(c.r / n, c.q / n, self.d)

    def __truediv__(self, other: Number) -> 'Surd':
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> 'Surd':
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> 'Surd':
        if k < 0:
            return self.inverse() ** (-k)
        out = Surd(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return self.r != 0 or self.q != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.r == other
        if not isinstance(other, Surd):
            return NotImplemented
        return (self.r, self.q, self.d) == (other.r, other.q, other.d)

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.r)
        return hash((self.r, self.q, self.d))

    def sign(self) -> int:
        '''Exact sign of r + q sqrt(d)'''
        rs = (self.r > 0) - (self.r < 0)
        qs = (self.q > 0) - (self.q < 0)
        if qs == 0:
            return rs
        if rs == 0 or rs == qs:
            return qs
        # opposite signs: the larger square wins
        if self.r * self.r > self.q * self.q * self.d:
            return rs
        return qs

    def __lt__(self, other: Number) -> bool:
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - self._coerce(other)).sign() >= 0

    def __abs__(self) -> 'Surd':
        return -self if self.sign() < 0 else self

    def enclose(self, bits: int) -> Interval:
        '''
        Encloses the value with width at most 2^-bits. When r and
        q sqrt(d) nearly cancel, the value is rebuilt as
        norm / (r - q sqrt(d)) so the relative accuracy survives.
        '''
        if self.q == 0:
            return Interval(self.r)
        target = Fraction(1, 2 ** bits)
        k = bits + 8
        while True:
            root = sqrt_interval(self.d, k)
            qs = root * self.q
            if self.r == 0 or (self.r > 0) == (self.q > 0):
                out = qs + self.r
            else:
                out = Interval(self.norm()) / (Interval(self.r) - qs)
            if out.width() <= target:
                return out
            k += max(32, k // 2)

    def floor(self) -> int:
        if self.q == 0:
            return math.floor(self.r)
        guess = math.floor(self.enclose(8).lo)
        while self < guess:
            guess -= 1
        while self >= guess + 1:
            guess += 1
        return guess

    def __float__(self) -> float:
        if self.q == 0:
            return float(self.r)
        qs = float(self.q) * math.sqrt(self.d)
        if self.r == 0 or (self.r > 0) == (self.q > 0):
            return float(self.r) + qs
        return float(self.norm()) / (float(self.r) - qs)


def as_surd(x: Optional[Number]) -> Surd:
    if x is None:
        return Surd(0)
    if isinstance(x, Surd):
        return x
    return Surd(x)


class ExactComplex:
    '''re + i*im with both parts in the same Q(sqrt(d))'''
    __slots__ = ('re', 'im')

    def __init__(self, re: Number = 0, im: Number = 0) -> None:
        self.re = as_surd(re)
        self.im = as_surd(im)
        # raises on mixed radicands
        self.re._field(self.im)

    def _coerce(self, other: Union['ExactComplex', Number]) \
            -> 'ExactComplex':
        if isinstance(other, ExactComplex):
            return other
        return ExactComplex(other)

    def __repr__(self) -> str:
        return 'ExactComplex({!r}, {!r})'.format(str(self.re), str(self.im))

    def __add__(self, other: Union['ExactComplex', Number]) \
            -> 'ExactComplex':
        o = self._coerce(other)
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> 'ExactComplex':
        return ExactComplex(-self.re, -self.im)

    def __sub__(self, other: Union['ExactComplex', Number]) \
            -> 'ExactComplex':
        return self + (-self._coerce(other))

    def __mul__(self, other: Union['ExactComplex', Number]) \
            -> 'ExactComplex':
        o = self._coerce(other)
        return ExactComplex(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> 'ExactComplex':
        return ExactComplex(self.re, -self.im)

    def abs_sq(self) -> Surd:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> 'ExactComplex':
        n = self.abs_sq()
        if not n:
            raise ZeroDivisionError('ExactComplex division by zero')
        c = self.conjugate()
        return ExactComplex(c.re / n, c.im / n)

    def __truediv__(self, other: Union['ExactComplex', Number]) \
            -> 'ExactComplex':
        return self * self._coerce(other).inverse()

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Surd)):
            return self.re == other and not self.im
        if not isinstance(other, ExactComplex):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))
