import math
import logging
import threading

from fractions import Fraction
from sympy import Poly, Rational as SympyRational, factor_list, symbols

from toruslab import nt, precision
from toruslab.errors import InvalidCoefficient, PrecisionExhausted
from toruslab.reals.interval import Interval
from toruslab.reals.surd import Surd

from typing import Dict, List, NamedTuple, Optional, Tuple

logger = logging.getLogger(__name__)

RATIONAL = 'rational'
SQRT = 'sqrt'
ALGEBRAIC = 'algebraic'
DECIMAL = 'decimal'
LIOUVILLE = 'liouville'
CHAMPERNOWNE = 'champernowne'
EULER_E = 'e'

KINDS = (RATIONAL, SQRT, ALGEBRAIC, DECIMAL, LIOUVILLE, CHAMPERNOWNE, EULER_E)

_X = symbols('x')


class RealSpec(NamedTuple):
    kind: str
    args: Tuple
    text: str


def _poly_eval(coeffs: List[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class CertifiedReal:
    '''
    A real number we can enclose to any width 2^-p, p <= P_max.

    Exact kinds (rational, decimal, sqrt, algebraic of degree <= 2) also
    expose the exact value as a Surd. Everything else only ever hands out
    enclosures, cached per precision so repeated refinement is nested.
    '''

    def __init__(self, spec: RealSpec) -> None:
        if spec.kind not in KINDS:
            raise InvalidCoefficient('unknown real kind {}'.format(spec.kind))
        self.spec = spec
        self._lock = threading.Lock()
        self._cache: Dict[int, Interval] = {}
        self._exact: Optional[Surd] = None
        self._min_poly: Optional[List[int]] = None
        self._bracket: Optional[Interval] = None
        self._digits: Optional[str] = None
        self.degree: Optional[int] = None
        self._setup()

    def __repr__(self) -> str:
        return 'CertifiedReal({!r})'.format(self.spec.text)

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        del state['_lock']
        return state

    def __setstate__(self, state: dict) -> None:
        self.__dict__.update(state)
        self._lock = threading.Lock()

    @property
    def kind(self) -> str:
        return self.spec.kind

    @property
    def text(self) -> str:
        return self.spec.text

    def _setup(self) -> None:
        kind = self.spec.kind
        if kind == RATIONAL:
            p, q = self.spec.args
            if q <= 0:
                raise InvalidCoefficient(
                    'rational needs a positive denominator')
            self._exact = Surd(Fraction(p, q))
            self.degree = 1
        elif kind == DECIMAL:
            self._exact = Surd(Fraction(self.spec.args[0]))
            self.degree = 1
        elif kind == SQRT:
            radicand = Fraction(self.spec.args[0])
            if radicand <= 0:
                raise InvalidCoefficient(
                    'sqrt needs a positive radicand, got {}'.format(radicand))
            if nt.is_square(radicand.numerator * radicand.denominator):
                raise InvalidCoefficient(
                    '{} is the square of a rational'.format(radicand))
            self._exact = Surd.sqrt_of(radicand)
            self.degree = 2
        elif kind == ALGEBRAIC:
            self._setup_algebraic()
        elif kind in (LIOUVILLE, CHAMPERNOWNE):
            if self.spec.args[0] < 2:
                raise InvalidCoefficient('base must be at least 2')
        # e needs no setup

    def _setup_algebraic(self) -> None:
        coeffs, lo, hi = self.spec.args
        coeffs = [int(c) for c in coeffs]
        lo = Fraction(lo)
        hi = Fraction(hi)
        if len(coeffs) < 2 or coeffs[0] == 0:
            raise InvalidCoefficient('polynomial must have positive degree')
        if lo >= hi:
            raise InvalidCoefficient('empty isolating interval')
        if _sign(_poly_eval(coeffs, lo)) * _sign(_poly_eval(coeffs, hi)) >= 0:
            raise InvalidCoefficient(
                'no sign change of the polynomial on [{}, {}]'.format(lo, hi))
        poly = Poly(coeffs, _X)
        slo = SympyRational(lo.numerator, lo.denominator)
        shi = SympyRational(hi.numerator, hi.denominator)
        if poly.count_roots(slo, shi) != 1:
            raise InvalidCoefficient(
                'interval [{}, {}] does not isolate a single root'.format(
                    lo, hi))
        # the irreducible factor owning the root is the minimal polynomial
        _, factors = factor_list(poly.as_expr(), _X)
        for factor_expr, _ in factors:
            f = Poly(factor_expr, _X)
            fc = [int(c) for c in f.all_coeffs()]
            if _sign(_poly_eval(fc, lo)) * _sign(_poly_eval(fc, hi)) < 0:
                self._min_poly = fc
                break
        if self._min_poly is None:
            raise InvalidCoefficient('could not isolate the minimal factor')
        self.degree = len(self._min_poly) - 1
        if self.degree == 1:
            a, b = self._min_poly
            self._exact = Surd(Fraction(-b, a))
        elif self.degree == 2:
            self._exact = _quadratic_root(self._min_poly, lo, hi)
        self._bracket = Interval(lo, hi)

    @property
    def is_exact(self) -> bool:
        return self._exact is not None

    @property
    def is_rational(self) -> bool:
        return self._exact is not None and self._exact.is_rational()

    def exact_value(self) -> Optional[Surd]:
        return self._exact

    def square_rational(self) -> Optional[Fraction]:
        '''The square of the value when it is rational, else None'''
        if self._exact is not None:
            sq = self._exact * self._exact
            return sq.r if sq.is_rational() else None
        # transcendental kinds and algebraic degree >= 3 square to irrationals
        return None

    def enclosure(self, prec: int) -> Interval:
        '''
        Args:
            prec (int): bits; the result has width <= 2^-prec
        Returns:
            (Interval): contains the exact value
        '''
        if prec > precision.P_MAX:
            raise PrecisionExhausted(
                '{} needs {} bits, cap is {}'.format(
                    self.text, prec, precision.P_MAX))
        if self._exact is not None:
            return self._exact.enclose(prec)
        with self._lock:
            hit = self._cache.get(prec)
            if hit is not None:
                return hit
            out = self._compute(prec)
            self._cache[prec] = out
            return out

    def _compute(self, prec: int) -> Interval:
        kind = self.kind
        if kind == ALGEBRAIC:
            return self._bisect(prec)
        if kind == LIOUVILLE:
            return _liouville(self.spec.args[0], prec)
        if kind == CHAMPERNOWNE:
            return self._champernowne(prec)
        return _euler_e(prec)

    def _bisect(self, prec: int) -> Interval:
        assert self._bracket is not None and self._min_poly is not None
        target = Fraction(1, 2 ** prec)
        lo, hi = self._bracket.lo, self._bracket.hi
        s_lo = _sign(_poly_eval(self._min_poly, lo))
        while hi - lo > target:
            mid = (lo + hi) / 2
            s_mid = _sign(_poly_eval(self._min_poly, mid))
            if s_mid == 0:
                lo = hi = mid
                break
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        self._bracket = Interval(lo, hi)
        return self._bracket

    def _champernowne(self, prec: int) -> Interval:
        b = self.spec.args[0]
        # enough base-b digits that b^-N <= 2^-prec
        n_digits = max(1, math.ceil(prec / math.log2(b)) + 1)
        while b ** n_digits < 2 ** prec:
            n_digits += 1
        if self._digits is None or len(self._digits) < n_digits:
            self._digits = _champernowne_digits(b, n_digits)
        head = self._digits[:n_digits]
        numerator = int(head, b) if b <= 36 else _digits_value(head, b)
        lo = Fraction(numerator, b ** n_digits)
        return Interval(lo, lo + Fraction(1, b ** n_digits))

    def float_value(self) -> float:
        if self._exact is not None:
            return float(self._exact)
        return float(self.enclosure(64).mid())


def _quadratic_root(coeffs: List[int], lo: Fraction, hi: Fraction) -> Surd:
    '''The root of a x^2 + b x + c inside (lo, hi), as an exact surd'''
    a, b, c = coeffs
    root = Surd.sqrt_of(Fraction(b * b - 4 * a * c))
    for cand in ((-b + root) / (2 * a), (-b - root) / (2 * a)):
        if lo < cand < hi:
            return cand
    raise InvalidCoefficient('quadratic root escaped its interval')


_DIGIT_CHARS = '0123456789abcdefghijklmnopqrstuvwxyz'


def _to_base(k: int, b: int) -> List[int]:
    out = []
    while k:
        k, r = divmod(k, b)
        out.append(r)
    return out[::-1]


def _champernowne_digits(b: int, count: int) -> str:
    '''The first count digits after the point, one char per digit'''
    chunks = []
    total = 0
    k = 1
    while total < count:
        digits = _to_base(k, b)
        if b <= 36:
            chunks.append(''.join(_DIGIT_CHARS[d] for d in digits))
        else:
            chunks.append(''.join(chr(0x100 + d) for d in digits))
        total += len(digits)
        k += 1
    return ''.join(chunks)


def _digits_value(head: str, b: int) -> int:
    acc = 0
    for ch in head:
        acc = acc * b + (ord(ch) - 0x100)
    return acc


def _liouville(b: int, prec: int) -> Interval:
    '''sum_{j>=1} b^-(j!), tail beyond J bounded by 2 b^-((J+1)!)'''
    j = 1
    while math.factorial(j + 1) * math.log2(b) < prec + 1:
        j += 1
    denom = b ** math.factorial(j)
    partial = Fraction(
        sum(b ** (math.factorial(j) - math.factorial(i))
            for i in range(1, j + 1)),
        denom)
    tail = Fraction(2, b ** math.factorial(j + 1))
    return Interval(partial, partial + tail)


def _euler_e(prec: int) -> Interval:
    '''sum_{k<=K} 1/k! with the tail bound 2/(K+1)!'''
    k = 1
    fact = 1
    while True:
        fact *= (k + 1)
        if fact >= 2 ** (prec + 1):
            break
        k += 1
    # fact is now (K+1)! with K = k
    top = math.factorial(k)
    total = sum(top // math.factorial(i) for i in range(0, k + 1))
    partial = Fraction(total, top)
    return Interval(partial, partial + Fraction(2, fact))


def rational(p: int, q: int = 1, text: Optional[str] = None) -> CertifiedReal:
    g = math.gcd(p, q)
    if q < 0:
        p, q = -p, -q
    return CertifiedReal(RealSpec(
        RATIONAL, (p // g, q // g), text or 'rat:{}/{}'.format(p, q)))


def sqrt(radicand: Fraction, text: Optional[str] = None) -> CertifiedReal:
    return CertifiedReal(RealSpec(
        SQRT, (Fraction(radicand),), text or 'sqrt:{}'.format(radicand)))


def decimal(digits: str, text: Optional[str] = None) -> CertifiedReal:
    try:
        Fraction(digits)
    except ValueError:
        raise InvalidCoefficient('not a decimal: {!r}'.format(digits))
    return CertifiedReal(RealSpec(DECIMAL, (digits,), text or 'dec:' + digits))


def algebraic(coeffs: List[int], lo: Fraction, hi: Fraction,
              text: Optional[str] = None) -> CertifiedReal:
    return CertifiedReal(RealSpec(
        ALGEBRAIC, (tuple(coeffs), Fraction(lo), Fraction(hi)),
        text or 'alg:{},[{},{}]'.format(list(coeffs), lo, hi)))


def liouville(b: int) -> CertifiedReal:
    return CertifiedReal(RealSpec(LIOUVILLE, (b,), 'liouville:{}'.format(b)))


def champernowne(b: int) -> CertifiedReal:
    return CertifiedReal(RealSpec(
        CHAMPERNOWNE, (b,), 'champernowne:{}'.format(b)))


def euler_e() -> CertifiedReal:
    return CertifiedReal(RealSpec(EULER_E, (), 'e'))


def decimal_information_digits(digits: str) -> int:
    '''
    How many decimal places a DecimalString pins down, counting the
    exponent: "3.14159" -> 5, "1.5e-3" -> 4.
    '''
    mantissa, _, exponent = digits.lower().partition('e')
    frac = mantissa.partition('.')[2]
    return len(frac) - (int(exponent) if exponent else 0)
