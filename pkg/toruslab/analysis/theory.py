import math
import logging

from fractions import Fraction

from toruslab import nt
from toruslab.diophantine import registry
from toruslab.errors import UnknownClass
from toruslab.reals import certified
from toruslab.reals.certified import CertifiedReal
from toruslab.symbols import builtins
from toruslab.symbols.base import Symbol, Transposed
from toruslab.toruslab_types import Prediction

from typing import Any, Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)

INF = 'inf'


def _span(lo: str, hi: str) -> str:
    if lo == hi:
        return lo
    return '[{}, {}]'.format(lo, hi)


def _number(text: str) -> Optional[float]:
    if text == INF:
        return math.inf
    try:
        return float(text)
    except ValueError:
        return None


def mu_of(alpha: CertifiedReal) -> Tuple[str, str]:
    '''(lower, upper) irrationality measure of a DSL real, as strings'''
    try:
        entry = registry.registry_lookup(alpha)
    except UnknownClass:
        return '2', INF
    return entry['mu_lo'], entry['mu_hi']


def mu_of_square(alpha: CertifiedReal) -> Tuple[str, str]:
    '''Known bounds on mu(alpha^2) for an alpha whose square is irrational'''
    if alpha.kind in (certified.ALGEBRAIC, certified.EULER_E):
        # alpha^2 is algebraic, or e^2 whose measure is known to be 2
        return '2', '2'
    if alpha.kind == certified.LIOUVILLE:
        return INF, INF
    return '2', INF


def _double(text: str) -> str:
    value = _number(text)
    if value is None or math.isinf(value):
        return INF
    doubled = 2 * value
    return str(int(doubled)) if doubled.is_integer() else repr(doubled)


def _prediction(gh: str, gs: str, basis: str) -> Prediction:
    lo_gh, lo_gs = _number(gh), _number(gs)
    consistent = None
    if lo_gh is not None and lo_gs is not None:
        consistent = lo_gs <= lo_gh
    return Prediction(ind_gh=gh, ind_gs=gs, basis=basis, consistent=consistent)


def _predict_wave(sym: builtins.Wave) -> Prediction:
    if sym.n == 1:
        if sym.eta2 is not None and nt.is_square(
                sym.eta2.numerator * sym.eta2.denominator):
            return _prediction(
                INF, '1', 'rational eta on T^2: zeros on a line, GS-1')
        if sym.eta is None:
            # eta^2 rational and not a square: eta is a quadratic surd
            return _prediction('2', '2', 'eta quadratic irrational: mu = 2')
        lo, hi = mu_of(sym.eta)
        ind = _span(lo, hi)
        return _prediction(ind, ind, 'irrational eta on T^2: ind = mu(eta)')

    if sym.eta2 is not None:
        a, b = sym.eta2.numerator, sym.eta2.denominator
        if nt.is_square(a) and nt.is_square(b):
            return _prediction(
                INF, '[1, 2]', 'rational eta: zeros on a cone')
        _, d = nt.squarefree_part(a)
        if sym.n == 3 and nt.three_square_obstructed(b * d):
            return _prediction(
                '2', '2', 'eta^2 rational, n = 3, b d = 4^l (8k + 7)')
        if sym.n >= 3:
            return _prediction(
                INF, '2', 'eta^2 rational, n >= 3: sums of squares vanish')
        if nt.has_obstruction_prime(a) or nt.has_obstruction_prime(b):
            return _prediction(
                '2', '2', 'eta^2 rational, n = 2, obstruction prime present')
        return _prediction(
            INF, '2', 'eta^2 rational, n = 2, no obstruction prime')

    assert sym.eta is not None
    lo, _ = mu_of(sym.eta)
    _, hi_sq = mu_of_square(sym.eta)
    ind = _span(lo, _double(hi_sq))
    return _prediction(
        ind, ind,
        'eta and eta^2 irrational: mu(eta) <= ind <= 2 mu(eta^2), by '
        + registry.SQRT_NOTE)


def predict_indices(sym: Symbol) -> Prediction:
    '''
    Closed-form GH and GS indices from the characterisations, as strings
    ('inf' for infinity, '[lo, hi]' where only bounds are known).
    '''
    if isinstance(sym, Transposed):
        return predict_indices(sym.base)
    if isinstance(sym, builtins.Laplacian):
        return _prediction('0', '0', 'elliptic')
    if isinstance(sym, builtins.Bessel):
        return _prediction('0', '0', 'elliptic of negative order')
    if isinstance(sym, builtins.LogDamped):
        return _prediction(
            '0', '0', '|p| >= K_eps |xi|^(1 - eps) for every eps > 0')
    if isinstance(sym, builtins.Heat):
        return _prediction('1', '1', 'heat operator: |p| >= |xi| / sqrt(2)')
    if isinstance(sym, builtins.PartialDerivative):
        if sym.axis == 1:
            return _prediction('0', '0', 'elliptic on T^1')
        return _prediction(
            INF, '1', 'zeros on a hyperplane, |p| = 1 off it')
    if isinstance(sym, builtins.VectorField):
        if sym.alpha_im != 0:
            return _prediction('0', '0', 'Im alpha != 0: elliptic')
        if sym.alpha.is_rational:
            return _prediction(
                INF, '1', 'rational alpha: zeros on a line, |p| >= 1/b')
        lo, hi = mu_of(sym.alpha)
        ind = _span(lo, hi)
        return _prediction(ind, ind, 'irrational alpha: ind = mu(alpha)')
    if isinstance(sym, builtins.Wave):
        return _predict_wave(sym)
    raise UnknownClass('no prediction for {}'.format(sym.text))


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    '''(g, u, v) with a u + b v = g'''
    u0, u1, v0, v1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return a, u0, v0


def rational_vf_family(a: int, b: int, count: int,
                       minimal: bool = False) -> List[Tuple[int, int]]:
    '''
    Frequencies where p = i (xi_1 - (a/b) xi_2) is as small as it can be
    without vanishing: (1 + a t, b t) with |p| = 1, or, when minimal,
    solutions of |b xi_1 - a xi_2| = 1 with |p| = 1/b.
    '''
    if b < 1:
        raise ValueError('b must be positive')
    if math.gcd(a, b) != 1:
        raise ValueError('a/b must be in lowest terms')
    if minimal:
        _, u, v = _ext_gcd(b, a)
        x0, y0 = u, -v
    else:
        x0, y0 = 1, 0
    return [(x0 + a * t, y0 + b * t) for t in range(1, count + 1)]


def rational_wave_family(a: int, b: int, n: int, count: int) \
        -> Dict[str, Any]:
    '''
    The sequence xi_j = (a(j+1), b j, 0, ..., 0) for the wave operator
    with eta = a/b on T^(n+1), with exact |p(xi_j)| for j = 1 .. count.
    '''
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise ValueError('eta = a/b must be positive and in lowest terms')
    eta2 = Fraction(a * a, b * b)
    freqs = []
    values = []
    for j in range(1, count + 1):
        xi = [a * (j + 1), b * j] + [0] * (n - 1)
        value = abs(-xi[0] ** 2 + eta2 * xi[1] ** 2)
        freqs.append(xi)
        values.append(value)
    matches_a2 = all(v == a * a * (2 * j + 1) for j, v in enumerate(values, 1))
    matches_a = all(v == a * (2 * j + 1) for j, v in enumerate(values, 1))
    notes = []
    if matches_a2 and not matches_a:
        notes.append(
            '|p(xi_j)| = a^2 (2j+1); the bound |p| <= a^2 |xi| still '
            'gives GS index 1')
    return {
        'a': a,
        'b': b,
        'n': n,
        'frequencies': freqs,
        'abs_p': [str(v) for v in values],
        'matches_a_2j_plus_1': matches_a,
        'matches_a2_2j_plus_1': matches_a2,
        'notes': notes}
