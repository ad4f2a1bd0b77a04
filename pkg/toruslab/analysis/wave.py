import math
import logging
import functools
import numpy as np

from fractions import Fraction

from toruslab import nt
from toruslab.analysis import theory
from toruslab.errors import ConfigError, InvalidCoefficient
from toruslab.lattice import Frequency
from toruslab.symbols.builtins import Wave
from toruslab.toruslab_types import WaveClassification

from typing import List, Optional, Tuple

logger = logging.getLogger(__name__)

NO_NONZERO_ZEROS = 'NoNonzeroZeros'
INFINITE_ZEROS = 'InfiniteZeros'
RATIONAL_ETA = 'RationalEta'


def _odd_power_primes(n: int) -> List[int]:
    return [
        p for p, e in nt.factor(n)['factors'] if p % 4 == 3 and e % 2 == 1]


def _verified(sym: Wave, xi: Frequency) -> bool:
    value = sym.exact_value(xi)
    return value is not None and not value


def _zero_family(n: int, a: int, b: int, c: int, d: int, count: int) \
        -> Tuple[str, List[Frequency]]:
    '''Nonzero zeros of -xi_1^2 + (a/b) ||xi'||^2 on T^(n+1)'''
    out: List[Frequency] = []
    if n >= 4:
        for t in range(1, count + 1):
            w, x, y, z = nt.four_square_decomposition(a * b * t * t)
            out.append((a * t, w, x, y, z) + (0,) * (n - 4))
        return 'xi = (a t, xi\') with ||xi\'||^2 = a b t^2', out
    if n == 3:
        for k in range(0, count):
            j = 2 * (2 * k + 1)
            found = nt.three_square(b * d * j * j)
            assert found is not None
            out.append((c * d * j,) + found)
        return 'xi = (c d j, xi\') with ||xi\'||^2 = b d j^2, ' \
            'j = 2(2k+1)', out
    for j in range(1, count + 1):
        pair = nt.two_square(b * d * j * j)
        assert pair is not None
        out.append((c * d * j,) + pair)
    return 'xi = (c d j, xi\') with ||xi\'||^2 = b d j^2', out


def wave_classify(n: int, eta2: Fraction, count: int = 5) \
        -> WaveClassification:
    '''
    Decides whether -xi_1^2 + eta^2 ||xi'||^2 on T^(n+1) has nonzero
    integer zeros when eta^2 = a/b is rational, and reads off the GH and
    GS indices. Every zero emitted is checked by exact evaluation.

    Args:
        n     (int): dimension of the Laplacian side
        eta2  (Fraction): eta^2 > 0
        count (int): how many zeros of the family to emit
    Returns:
        (WaveClassification): verdict, indices, zero family
    '''
    if n < 1:
        raise ConfigError('n must be positive')
    eta2 = Fraction(eta2)
    if eta2 <= 0:
        raise InvalidCoefficient('eta^2 must be positive')
    a, b = eta2.numerator, eta2.denominator
    c, d = nt.squarefree_part(a)
    sym = Wave(n, eta2=eta2)
    notes: List[str] = []
    obstruction: Optional[str] = None
    zeros: List[Frequency] = []
    family = ''

    if nt.is_square(a) and nt.is_square(b):
        ra, rb = math.isqrt(a), math.isqrt(b)
        verdict = RATIONAL_ETA
        ind_gh = theory.INF
        ind_gs = '1' if n == 1 else '[1, 2]'
        family = 'xi = (a t, b t, 0, ..., 0) for eta = a/b'
        zeros = [
            (ra * t, rb * t) + (0,) * (n - 1) for t in range(1, count + 1)]
        seq = theory.rational_wave_family(ra, rb, n, 3)
        notes.extend(seq['notes'])
        if n == 1:
            notes.append(
                'ind_GS = mu(eta) = 1 for rational eta, matching the GS-1 '
                'bound |p| >= 1/b^2')
    elif n == 1:
        verdict = NO_NONZERO_ZEROS
        ind_gh = ind_gs = '2'
        obstruction = 'eta^2 is not the square of a rational'
    elif n >= 4:
        verdict = INFINITE_ZEROS
        ind_gh, ind_gs = theory.INF, '2'
        family, zeros = _zero_family(n, a, b, c, d, count)
    elif n == 3:
        if nt.three_square_obstructed(b * d):
            # the 4-free part of bd is 7 mod 8, so b d j^2 never is a
            # sum of three squares
            verdict = NO_NONZERO_ZEROS
            ind_gh = ind_gs = '2'
            obstruction = 'b d = {} has the form 4^l (8k + 7)'.format(b * d)
            notes.append(
                'the j = 2(2k+1) family does not exist here: the 4-free '
                'part of b d is 7 mod 8 for every j')
        else:
            verdict = INFINITE_ZEROS
            ind_gh, ind_gs = theory.INF, '2'
            family, zeros = _zero_family(n, a, b, c, d, count)
    else:
        bad = _odd_power_primes(a) + _odd_power_primes(b)
        if bad:
            verdict = NO_NONZERO_ZEROS
            ind_gh = ind_gs = '2'
            obstruction = 'prime {} divides {} to an odd power'.format(
                bad[0], 'a' if a % bad[0] == 0 else 'b')
        else:
            verdict = INFINITE_ZEROS
            ind_gh, ind_gs = theory.INF, '2'
            family, zeros = _zero_family(n, a, b, c, d, count)

    checked = [xi for xi in zeros if _verified(sym, xi)]
    if len(checked) != len(zeros):
        logger.error(
            'wave n=%d eta2=%s: %d emitted zeros failed exact evaluation',
            n, eta2, len(zeros) - len(checked))
        raise AssertionError('zero family failed exact evaluation')

    return WaveClassification(
        n=n,
        eta2=str(eta2),
        a=a,
        b=b,
        c=c,
        d=d,
        verdict=verdict,
        ind_gh=ind_gh,
        ind_gs=ind_gs,
        family=family,
        zeros=[list(xi) for xi in checked],
        obstruction=obstruction,
        notes=notes)


@functools.lru_cache(maxsize=8)
def _quadrant(n: int, radius: int) \
        -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    '''Nonzero xi' >= 0 with |xi'| <= radius, their ||xi'||^2 and |xi'|'''
    axes = np.meshgrid(
        *[np.arange(radius + 1, dtype=np.int64)] * n, indexing='ij')
    pts = np.stack([ax.ravel() for ax in axes], axis=1)
    size = pts.sum(axis=1)
    keep = (size <= radius) & (size > 0)
    pts = pts[keep]
    return pts, (pts * pts).sum(axis=1), size[keep]


def brute_force_zero(n: int, eta2: Fraction, radius: int) \
        -> Optional[Frequency]:
    '''
    Direct search for a nonzero zero with |xi| <= radius. Signs do not
    matter, so only xi' >= 0 is scanned and xi_1 is solved for.
    '''
    eta2 = Fraction(eta2)
    a, b = eta2.numerator, eta2.denominator
    pts, sq, size = _quadrant(n, radius)
    scaled = a * sq
    ok = scaled % b == 0
    t2 = scaled // b
    t = np.rint(np.sqrt(t2.astype(np.float64))).astype(np.int64)
    ok &= (t * t == t2) & (t + size <= radius)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return None
    i = int(hits[0])
    return (int(t[i]),) + tuple(int(c) for c in pts[i])
