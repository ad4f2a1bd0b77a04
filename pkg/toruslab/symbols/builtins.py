import math
import numpy as np

from fractions import Fraction

from toruslab import lattice
from toruslab.reals import certified, interval
from toruslab.reals.certified import CertifiedReal
from toruslab.reals.interval import Interval
from toruslab.reals.surd import ExactComplex, Surd
from toruslab.symbols.base import Box, Symbol, as_float, int_array

from typing import Any, Dict, Optional, Tuple

# float rounding slack for the inexact vectorised paths
_ULP = 2.0 ** -48


def _max_abs(pts: np.ndarray) -> int:
    if pts.size == 0:
        return 0
    return int(np.abs(pts).max())


def _origin_mask(pts: np.ndarray) -> np.ndarray:
    return np.all(pts == 0, axis=1)


class Laplacian(Symbol):
    '''p(xi) = -(xi_1^2 + ... + xi_n^2), order 2'''
    family = 'laplacian'
    even = True

    def __init__(self, n: int) -> None:
        super().__init__(n, 2.0, 'laplacian:{}'.format(n))

    @property
    def is_exact(self) -> bool:
        return True

    def exact_value(self, xi: lattice.Frequency) -> ExactComplex:
        return ExactComplex(-lattice.l2sq(xi))

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        return _origin_mask(pts)

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        sq = int_array(pts, _max_abs(pts) ** 2 * pts.shape[1])
        vals = as_float((sq * sq).sum(axis=1))
        return vals, np.zeros_like(vals)


class Heat(Symbol):
    '''p(xi) = i xi_1 + xi_2^2 + ... + xi_{n+1}^2 on T^(n+1)'''
    family = 'heat'

    def __init__(self, n: int) -> None:
        super().__init__(n + 1, 2.0, 'heat:{}'.format(n))

    @property
    def is_exact(self) -> bool:
        return True

    def exact_value(self, xi: lattice.Frequency) -> ExactComplex:
        return ExactComplex(lattice.l2sq(xi[1:]), xi[0])

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        return _origin_mask(pts)

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        p = int_array(pts, _max_abs(pts) ** 2 * pts.shape[1])
        re = as_float((p[:, 1:] * p[:, 1:]).sum(axis=1))
        im = as_float(p[:, 0])
        vals = np.hypot(re, im)
        return vals, vals * _ULP


class PartialDerivative(Symbol):
    '''p(xi) = i xi_j on T^j'''
    family = 'dx'

    def __init__(self, j: int) -> None:
        super().__init__(j, 1.0, 'dx:{}'.format(j))
        self.axis = j

    def metadata(self) -> Dict[str, Any]:
        return {'family': self.family, 'axis': self.axis}

    @property
    def is_exact(self) -> bool:
        return True

    def exact_value(self, xi: lattice.Frequency) -> ExactComplex:
        return ExactComplex(0, xi[self.axis - 1])

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        return pts[:, self.axis - 1] == 0

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        vals = as_float(np.abs(pts[:, self.axis - 1]))
        return vals, np.zeros_like(vals)


class VectorField(Symbol):
    '''
    p(xi) = i (xi_1 - alpha xi_2) for alpha = alpha_re + i alpha_im, so
    Re p = alpha_im xi_2 and Im p = xi_1 - alpha_re xi_2.
    '''
    family = 'vf'

    def __init__(self, alpha: CertifiedReal, alpha_im: Fraction = Fraction(0),
                 text: Optional[str] = None) -> None:
        super().__init__(2, 1.0, text or 'vf:alpha={}'.format(alpha.text))
        self.alpha = alpha
        self.alpha_im = Fraction(alpha_im)
        self._exact = alpha.exact_value()
        self._alpha_f = alpha.float_value()

    def metadata(self) -> Dict[str, Any]:
        return {
            'family': self.family, 'alpha': self.alpha,
            'alpha_im': self.alpha_im}

    @property
    def is_exact(self) -> bool:
        return self._exact is not None

    def exact_value(self, xi: lattice.Frequency) \
            -> Optional[ExactComplex]:
        if self._exact is None:
            return None
        return ExactComplex(self.alpha_im * xi[1], xi[0] - self._exact * xi[1])

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        if self.alpha_im != 0 or not self.alpha.is_rational:
            # alpha is non-real or irrational: only the origin vanishes
            return _origin_mask(pts)
        a = self.alpha.exact_value()
        assert a is not None
        num, den = a.r.numerator, a.r.denominator
        p = int_array(pts, _max_abs(pts) * max(abs(num), den))
        return den * p[:, 0] - num * p[:, 1] == 0

    def _im_part(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        x1 = pts[:, 0]
        x2 = pts[:, 1]
        exact = self._exact
        if exact is not None and exact.is_rational():
            num, den = exact.r.numerator, exact.r.denominator
            p = int_array(pts, _max_abs(pts) * max(abs(num), den))
            vals = np.abs(as_float(den * p[:, 0] - num * p[:, 1])) / den
            return vals, vals * _ULP
        if exact is not None:
            # alpha = (c/v) sqrt(s): rationalise |v x1 - c sqrt(s) x2|
            c = exact.q.numerator
            v = exact.q.denominator
            s = exact.d
            p = int_array(pts, (_max_abs(pts) * max(abs(c), v)) ** 2 * s)
            ax = np.abs(as_float(v * p[:, 0]))
            bx = abs(c) * math.sqrt(s) * np.abs(as_float(p[:, 1]))
            same = (np.sign(x1) * np.sign(x2) * np.sign(c)) > 0
            num = np.abs(as_float(
                v * v * p[:, 0] * p[:, 0] - c * c * s * p[:, 1] * p[:, 1]))
            with np.errstate(divide='ignore', invalid='ignore'):
                cancelled = num / (ax + bx)
            vals = np.where(same, cancelled, ax + bx) / v
            return vals, vals * _ULP
        af = self._alpha_f
        vals = np.abs(as_float(x1) - af * as_float(x2))
        err = _ULP * (np.abs(as_float(x1)) + abs(af) * np.abs(as_float(x2)))
        return vals, err

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        im, err = self._im_part(pts)
        if self.alpha_im == 0:
            return im, err
        re = float(abs(self.alpha_im)) * np.abs(as_float(pts[:, 1]))
        vals = np.hypot(re, im)
        return vals, err + vals * _ULP

    def _enclose_raw(self, xi: lattice.Frequency, bits: int) -> Box:
        a = self.alpha.enclosure(bits)
        im = Interval(xi[0]) - a * xi[1]
        return Interval(self.alpha_im * xi[1]), im


class Wave(Symbol):
    '''
    p(xi) = -xi_1^2 + eta^2 (xi_2^2 + ... + xi_{n+1}^2) on T^(n+1).
    The coefficient is either eta (a CertifiedReal) or eta^2 directly.
    '''
    family = 'wave'
    even = True

    def __init__(self, n: int, eta: Optional[CertifiedReal] = None,
                 eta2: Optional[Fraction] = None,
                 text: Optional[str] = None) -> None:
        if (eta is None) == (eta2 is None):
            raise ValueError('give exactly one of eta and eta^2')
        if text is None:
            if eta is not None:
                text = 'wave:n={},eta={}'.format(n, eta.text)
            else:
                text = 'wave:n={},eta2={}'.format(n, eta2)
        super().__init__(n + 1, 2.0, text)
        self.n = n
        self.eta = eta
        self.eta2: Optional[Fraction]
        if eta2 is not None:
            self.eta2 = Fraction(eta2)
            self._eta2_f = float(self.eta2)
        else:
            assert eta is not None
            self.eta2 = eta.square_rational()
            self._eta2_f = eta.float_value() ** 2

    def metadata(self) -> Dict[str, Any]:
        return {
            'family': self.family, 'n': self.n, 'eta': self.eta,
            'eta2': self.eta2}

    @property
    def is_exact(self) -> bool:
        return self.eta2 is not None

    def exact_value(self, xi: lattice.Frequency) \
            -> Optional[ExactComplex]:
        if self.eta2 is None:
            return None
        return ExactComplex(-xi[0] * xi[0] + self.eta2 * lattice.l2sq(xi[1:]))

    def _scaled_numerator(self, pts: np.ndarray) -> np.ndarray:
        assert self.eta2 is not None
        num, den = self.eta2.numerator, self.eta2.denominator
        bound = _max_abs(pts) ** 2 * pts.shape[1] * max(abs(num), den)
        p = int_array(pts, bound)
        rest = (p[:, 1:] * p[:, 1:]).sum(axis=1)
        return num * rest - den * p[:, 0] * p[:, 0]

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        if self.eta2 is None:
            # eta^2 irrational: -xi_1^2 + eta^2 S vanishes only at 0
            return _origin_mask(pts)
        return self._scaled_numerator(pts) == 0

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        if self.eta2 is not None:
            vals = np.abs(as_float(self._scaled_numerator(pts))) \
                / self.eta2.denominator
            return vals, vals * _ULP
        f = as_float(pts)
        first = f[:, 0] * f[:, 0]
        rest = (f[:, 1:] * f[:, 1:]).sum(axis=1)
        vals = np.abs(self._eta2_f * rest - first)
        return vals, _ULP * (first + abs(self._eta2_f) * rest)

    def _enclose_raw(self, xi: lattice.Frequency, bits: int) -> Box:
        assert self.eta is not None
        e2 = self.eta.enclosure(bits).square()
        re = e2 * lattice.l2sq(xi[1:]) - xi[0] * xi[0]
        return re, Interval(0)


class Bessel(Symbol):
    '''(1 + ||xi||^2)^(-s/2) on T^n, order -s'''
    family = 'bessel'
    even = True

    def __init__(self, s: Fraction, n: int = 1,
                 text: Optional[str] = None) -> None:
        super().__init__(n, float(-s), text or 'bessel:s={}'.format(s))
        self.s = Fraction(s)

    def metadata(self) -> Dict[str, Any]:
        return {'family': self.family, 's': self.s}

    @property
    def is_exact(self) -> bool:
        return (self.s / 2).denominator == 1

    def exact_value(self, xi: lattice.Frequency) \
            -> Optional[ExactComplex]:
        if not self.is_exact:
            return None
        k = int(-self.s / 2)
        return ExactComplex(Surd(Fraction(1 + lattice.l2sq(xi)) ** k))

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        return np.zeros(pts.shape[0], dtype=bool)

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        f = as_float(pts)
        base = 1.0 + (f * f).sum(axis=1)
        vals = np.power(base, -float(self.s) / 2)
        return vals, vals * _ULP

    def _enclose_raw(self, xi: lattice.Frequency, bits: int) -> Box:
        base = Interval(1 + lattice.l2sq(xi))
        power = interval.log(base, bits) * (-self.s / 2)
        return interval.exp(power, bits), Interval(0)


class LogDamped(Symbol):
    '''p(xi) = xi / log(e + |xi|) on T^1, order 1 but not elliptic'''
    family = 'logdamp'

    def __init__(self) -> None:
        super().__init__(1, 1.0, 'logdamp')
        self._e = certified.euler_e()

    def zero_mask(self, pts: np.ndarray) -> np.ndarray:
        return pts[:, 0] == 0

    def approx_abs(self, pts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        x = np.abs(as_float(pts[:, 0]))
        vals = x / np.log(math.e + x)
        return vals, vals * _ULP

    def _enclose_raw(self, xi: lattice.Frequency, bits: int) -> Box:
        x = xi[0]
        if x == 0:
            return Interval(0), Interval(0)
        denom = interval.log(self._e.enclosure(bits) + abs(x), bits)
        return Interval(x) / denom, Interval(0)
