import math
import logging
import numpy as np

from fractions import Fraction

from toruslab import lattice, precision
from toruslab.errors import PrecisionExhausted
from toruslab.reals import interval
from toruslab.reals.interval import Interval
from toruslab.reals.surd import ExactComplex, Surd

from typing import Any, Dict, NamedTuple, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Box = Tuple[Interval, Interval]
Value = Union[ExactComplex, Box]

# relative width we want from a log|p| enclosure before we stop refining
_LOG_REL_BITS = 50


class AbsLower(NamedTuple):
    zero: bool
    log_lo: float
    log_hi: float
    abs_sq: Optional[Surd] = None  # exact |p|^2 when the class allows

    @property
    def log_mid(self) -> float:
        return (self.log_lo + self.log_hi) / 2


def int_array(pts: np.ndarray, bound: int) -> np.ndarray:
    '''
    pts as int64 when every intermediate stays below 2^62 (bound is the
    caller's worst-case magnitude), otherwise as Python ints.
    '''
    if bound < 2 ** 62:
        return pts.astype(np.int64)
    return pts.astype(object)


def as_float(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=np.float64)


class Symbol:
    '''
    A Fourier multiplier symbol p on Z^n. Subclasses fill in the
    exact/enclosure evaluation and the vectorised float path used by
    the window scans.
    '''
    family = 'symbol'
    even = False

    def __init__(self, dimension: int, order: float, text: str) -> None:
        self.dimension = dimension
        self.order = order
        self.text = text

    def __repr__(self) -> str:
        return '{}({!r})'.format(type(self).__name__, self.text)

    def metadata(self) -> Dict[str, Any]:
        return {'family': self.family}

    # exact side

    @property
    def is_exact(self) -> bool:
        return False

    def exact_value(self, xi: lattice.Frequency) -> Optional[ExactComplex]:
        return None

    def is_zero(self, xi: lattice.Frequency) -> bool:
        mask = self.zero_mask(np.array([xi], dtype=np.int64))
        return bool(mask[0])

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    # enclosure side

    def _enclose_raw(self, xi: lattice.Frequency, bits: int) -> Box:
        raise NotImplementedError

    def enclose(self, xi: lattice.Frequency, prec: int) -> Box:
        '''Both components enclosed with width <= 2^-prec'''
        exact = self.exact_value(xi)
        if exact is not None:
            return exact.re.enclose(prec), exact.im.enclose(prec)
        target = Fraction(1, 2 ** prec)
        guard = 16 + 2 * max(abs(c) for c in xi).bit_length()
        while True:
            bits = prec + guard
            if bits > precision.P_MAX:
                raise PrecisionExhausted(
                    '{} at {} needs more than {} bits'.format(
                        self.text, xi, precision.P_MAX), xi)
            re, im = self._enclose_raw(xi, bits)
            if re.width() <= target and im.width() <= target:
                return re, im
            guard += 32

    # float side

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        '''
        Float |p| over rows of pts together with an absolute error bound
        for each entry.
        '''
        raise NotImplementedError

    def approx_value(self, xi: lattice.Frequency) -> complex:
        exact = self.exact_value(xi)
        if exact is not None:
            return complex(exact)
        re, im = self.enclose(xi, 64)
        return complex(float(re.mid()), float(im.mid()))


def evaluate(sym: Symbol, xi: Sequence[int], prec: int = 64) -> Value:
    '''
    The exact value for exact coefficient classes, otherwise an
    enclosure box of width <= 2^-prec in each component.
    '''
    f = lattice.check_frequency(xi, sym.dimension)
    exact = sym.exact_value(f)
    if exact is not None:
        return exact
    return sym.enclose(f, prec)


def _relative(s: Surd) -> Interval:
    '''Encloses |s| > 0 with relative width about 2^-60'''
    mag = abs(s)
    approx = float(mag)
    bits = 64
    if approx > 0:
        bits += max(0, -math.frexp(approx)[1])
    while True:
        iv = mag.enclose(bits)
        if iv.lo > 0 and iv.width() * 2 ** 60 <= iv.lo:
            return iv
        bits *= 2


def _log_of_abs_sq(abs_sq: Interval) -> Tuple[float, float]:
    half = interval.log(abs_sq, 64) * Fraction(1, 2)
    return interval.outward_floats(half)


def _from_exact(z: ExactComplex) -> AbsLower:
    sq = z.abs_sq()
    if not z.im:
        mag = _relative(z.re)
        lo, hi = interval.outward_floats(interval.log(mag, 64))
        return AbsLower(False, lo, hi, sq)
    if not z.re:
        mag = _relative(z.im)
        lo, hi = interval.outward_floats(interval.log(mag, 64))
        return AbsLower(False, lo, hi, sq)
    total = _relative(z.re).square() + _relative(z.im).square()
    lo, hi = _log_of_abs_sq(total)
    return AbsLower(False, lo, hi, sq)


def abs_lower_exact(sym: Symbol, xi: Sequence[int]) -> AbsLower:
    '''
    Decides p(xi) = 0 exactly and otherwise encloses log|p(xi)|.

    Raises:
        PrecisionExhausted: no enclosure up to P_max keeps |p| off zero
    '''
    f = lattice.check_frequency(xi, sym.dimension)
    if sym.is_zero(f):
        return AbsLower(True, -math.inf, -math.inf, Surd(0))
    exact = sym.exact_value(f)
    if exact is not None:
        return _from_exact(exact)
    prec = 64
    while True:
        re, im = sym.enclose(f, prec)
        abs_sq = re.square() + im.square()
        if abs_sq.lo > 0 and abs_sq.width() * 2 ** _LOG_REL_BITS <= abs_sq.lo:
            lo, hi = _log_of_abs_sq(abs_sq)
            return AbsLower(False, lo, hi, None)
        if prec * 2 > precision.P_MAX:
            if abs_sq.lo > 0:
                lo, hi = _log_of_abs_sq(abs_sq)
                return AbsLower(False, lo, hi, None)
            logger.warning('could not separate |p| from zero at %s', f)
            raise PrecisionExhausted(
                '|p| at {} not separated from zero at {} bits'.format(
                    f, precision.P_MAX), f)
        prec *= 2


class Transposed(Symbol):
    '''p(-xi) for a wrapped symbol'''

    def __init__(self, base: Symbol) -> None:
        super().__init__(
            base.dimension, base.order, 'transpose({})'.format(base.text))
        self.base = base
        self.family = base.family

    def metadata(self) -> Dict[str, Any]:
        return self.base.metadata()

    @property
    def is_exact(self) -> bool:
        return self.base.is_exact

    def exact_value(self, xi: lattice.Frequency) -> Optional[ExactComplex]:
        return self.base.exact_value(lattice.negate(xi))

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        return self.base.zero_mask(-pts)

    def _enclose_raw(self, xi: lattice.Frequency, bits: int) -> Box:
        return self.base._enclose_raw(lattice.negate(xi), bits)

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return self.base.approx_abs(-pts)


def transpose(sym: Symbol) -> Symbol:
    '''The symbol xi -> p(-xi); an involution'''
    if isinstance(sym, Transposed):
        return sym.base
    if sym.even:
        return sym
    return Transposed(sym)
