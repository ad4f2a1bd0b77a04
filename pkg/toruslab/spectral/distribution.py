import math
import random

from fractions import Fraction

from toruslab import lattice
from toruslab.errors import DimensionMismatch
from toruslab.lattice import Frequency
from toruslab.reals.surd import ExactComplex, Surd
from toruslab.symbols.base import Symbol

from typing import (
    Dict, ItemsView, Iterator, List, Mapping, Optional, Sequence, Union)

Coefficient = Union[ExactComplex, complex]
Norm = Union[Fraction, Surd, float]

USER = 'user'
WITNESS = 'witness'
SOLVER = 'solver'


def as_coefficient(c: object) -> Coefficient:
    if isinstance(c, ExactComplex):
        return c
    if isinstance(c, (int, Fraction, Surd)) and not isinstance(c, bool):
        return ExactComplex(c)
    if isinstance(c, (float, complex)):
        return complex(c)
    raise TypeError('not a coefficient: {!r}'.format(c))


def _is_zero(c: Coefficient) -> bool:
    return not c


def _shell_order(xi: Frequency) -> tuple:
    return (lattice.l1(xi), xi)


def _mul(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, ExactComplex) and isinstance(b, ExactComplex):
        try:
            return a * b
        except ValueError:
            pass
    return complex(a) * complex(b)


def _add(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, ExactComplex) and isinstance(b, ExactComplex):
        try:
            return a + b
        except ValueError:
            pass
    return complex(a) + complex(b)


class SpectralDistribution:
    '''
    A finitely supported Fourier series sum_xi u(xi) e^(i xi.x) on T^n.
    Coefficients are exact (ExactComplex) or floats (complex); exact
    zeros are never stored. Iteration runs shell by shell, then
    lexicographically, so float sums come out the same every time.
    '''
    __slots__ = ('dimension', '_coeffs', 'origin')

    def __init__(
            self,
            dimension: int,
            coeffs: Optional[Mapping[Sequence[int], object]] = None,
            origin: str = USER) -> None:
        if dimension < 1:
            raise DimensionMismatch('torus dimension must be positive')
        store: Dict[Frequency, Coefficient] = {}
        for xi, c in (coeffs or {}).items():
            f = lattice.check_frequency(xi, dimension)
            value = as_coefficient(c)
            if not _is_zero(value):
                store[f] = value
        self.dimension = dimension
        self._coeffs = {f: store[f] for f in sorted(store, key=_shell_order)}
        self.origin = origin

    def __repr__(self) -> str:
        return 'SpectralDistribution(n={}, {} modes, {})'.format(
            self.dimension, len(self._coeffs), self.origin)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Frequency]:
        return iter(self._coeffs)

    def __contains__(self, xi: object) -> bool:
        return xi in self._coeffs

    def __getitem__(self, xi: Sequence[int]) -> Coefficient:
        return self._coeffs.get(tuple(xi), ExactComplex(0))

    def items(self) -> ItemsView[Frequency, Coefficient]:
        return self._coeffs.items()

    def support(self) -> List[Frequency]:
        return list(self._coeffs)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, ExactComplex) for c in self._coeffs.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralDistribution):
            return NotImplemented
        return self.dimension == other.dimension \
            and self._coeffs == other._coeffs

    def _check(self, other: 'SpectralDistribution') -> None:
        if other.dimension != self.dimension:
            raise DimensionMismatch(
                'distributions on T^{} and T^{}'.format(
                    self.dimension, other.dimension))

    def __add__(self, other: 'SpectralDistribution') \
            -> 'SpectralDistribution':
        self._check(other)
        out: Dict[Frequency, Coefficient] = dict(self._coeffs)
        for xi, c in other.items():
            out[xi] = _add(out[xi], c) if xi in out else c
        return SpectralDistribution(self.dimension, out, self.origin)

    def __neg__(self) -> 'SpectralDistribution':
        return self.scale(ExactComplex(-1))

    def __sub__(self, other: 'SpectralDistribution') \
            -> 'SpectralDistribution':
        return self + (-other)

    def scale(self, c: object) -> 'SpectralDistribution':
        factor = as_coefficient(c)
        return SpectralDistribution(
            self.dimension,
            {xi: _mul(v, factor) for xi, v in self.items()},
            self.origin)

    def restrict(self, keep: Sequence[Frequency]) -> 'SpectralDistribution':
        '''The same series with only the given modes'''
        wanted = set(tuple(xi) for xi in keep)
        return SpectralDistribution(
            self.dimension,
            {xi: c for xi, c in self.items() if xi in wanted},
            self.origin)


def monomial(xi: Sequence[int], coefficient: object = 1,
             origin: str = USER) -> SpectralDistribution:
    '''The single mode coefficient * e^(i xi.x)'''
    return SpectralDistribution(len(xi), {tuple(xi): coefficient}, origin)


def _integer_exponent(k: Union[int, float, Fraction]) -> Optional[int]:
    f = Fraction(k)
    return int(f) if f.denominator == 1 else None


def sobolev_norm_sq(u: SpectralDistribution,
                    k: Union[int, float, Fraction]) -> Norm:
    '''
    ||u||^2_{H^k} = sum (1 + ||xi||^2)^k |u(xi)|^2, leaving out the
    (2 pi)^n factor. Exact (Fraction, or Surd for quadratic
    coefficients) when u is exact and k is an integer.
    '''
    ik = _integer_exponent(k)
    if ik is not None and u.is_exact:
        total = Surd(0)
        try:
            for xi, c in u.items():
                assert isinstance(c, ExactComplex)
                weight = Fraction(1 + lattice.l2sq(xi)) ** ik
                total = total + c.abs_sq() * weight
        except ValueError:
            pass
        else:
            return total.to_fraction() if total.is_rational() else total
    return math.fsum(
        lattice.sobolev_weight(xi, float(k)) * abs(complex(c)) ** 2
        for xi, c in u.items())


def sobolev_norm(u: SpectralDistribution,
                 k: Union[int, float, Fraction]) -> float:
    return math.sqrt(float(sobolev_norm_sq(u, k)))


def apply(sym: Symbol, u: SpectralDistribution) -> SpectralDistribution:
    '''
    p(D)u, coefficientwise p(xi) u(xi). Zeros of p are decided exactly
    and dropped from the support.
    '''
    if sym.dimension != u.dimension:
        raise DimensionMismatch(
            '{} lives on T^{}, u on T^{}'.format(
                sym.text, sym.dimension, u.dimension))
    out: Dict[Frequency, Coefficient] = {}
    for xi, c in u.items():
        if sym.is_zero(xi):
            continue
        pv = sym.exact_value(xi)
        if pv is not None:
            out[xi] = _mul(pv, c)
        else:
            out[xi] = sym.approx_value(xi) * complex(c)
    return SpectralDistribution(u.dimension, out, u.origin)


def bessel(u: SpectralDistribution,
           s: Union[int, float, Fraction]) -> SpectralDistribution:
    '''
    Multiplies by (1 + ||xi||^2)^(-s/2), the symbol of (I - Laplacian)^(-s/2).
    Exact for even integer s.
    '''
    half = Fraction(s) / 2
    out: Dict[Frequency, Coefficient] = {}
    for xi, c in u.items():
        base = 1 + lattice.l2sq(xi)
        if half.denominator == 1 and isinstance(c, ExactComplex):
            out[xi] = c * Fraction(base) ** int(-half)
        else:
            out[xi] = complex(c) * math.pow(base, -float(half))
    return SpectralDistribution(u.dimension, out, u.origin)


def pairing(u: SpectralDistribution, phi: SpectralDistribution) \
        -> Coefficient:
    '''sum_xi u(xi) phi(-xi), the duality pairing without (2 pi)^n'''
    u._check(phi)
    total: Coefficient = ExactComplex(0)
    for xi, c in u.items():
        other = lattice.negate(xi)
        if other in phi:
            total = _add(total, _mul(c, phi[other]))
    return total


def random_distribution(
        rng: random.Random,
        dimension: int,
        size: int,
        radius: int,
        avoid: Optional[Symbol] = None) -> SpectralDistribution:
    '''
    A random exact distribution with up to size modes inside |xi| <=
    radius and small Gaussian-rational coefficients. Zeros of avoid are
    left out of the support.
    '''
    coeffs: Dict[Frequency, Coefficient] = {}
    tries = 0
    while len(coeffs) < size and tries < 20 * size:
        tries += 1
        xi = tuple(rng.randint(-radius, radius) for _ in range(dimension))
        if lattice.l1(xi) > radius:
            continue
        if avoid is not None and avoid.is_zero(xi):
            continue
        re = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        im = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if re == 0 and im == 0:
            continue
        coeffs[xi] = ExactComplex(re, im)
    return SpectralDistribution(dimension, coeffs)


def random_compatible(sym: Symbol, rng: random.Random, size: int,
                      radius: int) -> SpectralDistribution:
    '''A random exact right-hand side that vanishes on the zeros of sym'''
    return random_distribution(rng, sym.dimension, size, radius, avoid=sym)
