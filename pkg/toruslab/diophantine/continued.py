import math
import logging

from fractions import Fraction

from toruslab import precision
from toruslab.errors import ConfigError, PrecisionExhausted
from toruslab.reals import certified
from toruslab.reals.certified import CertifiedReal
from toruslab.reals.surd import Surd
from toruslab.toruslab_types import ContinuedFraction

from typing import List, Optional, Tuple

logger = logging.getLogger(__name__)

COMPLETE = 'Complete'
DEPTH_REACHED = 'DepthReached'
TRUNCATION_LIMITED = 'TruncationLimited'

_START_BITS = 64


def convergents(quotients: List[int]) -> List[Tuple[int, int]]:
    '''p_k / q_k from the partial quotients, by the usual recurrence'''
    out = []
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for a in quotients:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append((p, q))
    return out


def _exact_quotients(x: Surd, count: int) -> Tuple[List[int], bool]:
    '''Gauss map in Q(sqrt(d)); returns (quotients, terminated)'''
    out: List[int] = []
    while len(out) < count:
        a = x.floor()
        out.append(a)
        frac = x - a
        if not frac:
            return out, True
        x = 1 / frac
    return out, False


def _interval_quotients(alpha: CertifiedReal, count: int, bits: int) \
        -> List[int]:
    '''
    Quotients shared by every real in the enclosure. Each step keeps
    the whole interval inside one cylinder set, so what we emit is the
    true prefix whatever the exact value is.
    '''
    enc = alpha.enclosure(bits)
    lo, hi = enc.lo, enc.hi
    out: List[int] = []
    while len(out) < count:
        a = math.floor(lo)
        if math.floor(hi) != a or lo == a:
            break
        out.append(a)
        lo, hi = 1 / (hi - a), 1 / (lo - a)
    return out


def _decimal_certified(
        digits: int, conv: List[Tuple[int, int]]) -> int:
    '''Index of the last a_k with 10 q_k^2 < 10^digits'''
    last = -1
    for k, (_, q) in enumerate(conv):
        if 10 * q * q < 10 ** digits:
            last = k
        else:
            break
    return last


def cf_expand(
        alpha: CertifiedReal,
        depth: int,
        precision_cap: Optional[int] = None) -> ContinuedFraction:
    '''
    Partial quotients a_0 .. a_depth of alpha.

    Args:
        alpha         (CertifiedReal): the number to expand
        depth         (int): index of the last quotient wanted
        precision_cap (int): bits; defaults to P_max
    Returns:
        (ContinuedFraction): quotients, convergents and how far they hold
    '''
    if depth < 1:
        raise ConfigError('depth must be at least 1')
    count = depth + 1
    cap = precision_cap if precision_cap is not None else precision.P_MAX
    exact = alpha.exact_value()
    bits_used = 0

    if exact is not None:
        quotients, terminated = _exact_quotients(exact, count)
        status = COMPLETE if terminated else DEPTH_REACHED
        certified_depth = len(quotients) - 1
    else:
        bits = _START_BITS
        while True:
            try:
                quotients = _interval_quotients(alpha, count, bits)
            except PrecisionExhausted:
                quotients = []
            bits_used = bits
            if len(quotients) >= count or bits >= cap:
                break
            logger.debug(
                '%s: %d quotients at %d bits, refining',
                alpha.text, len(quotients), bits)
            bits = min(bits * 2, cap)
        if len(quotients) >= count:
            status = DEPTH_REACHED
        else:
            status = TRUNCATION_LIMITED
            logger.warning(
                '%s: only %d quotients certified at %d bits',
                alpha.text, len(quotients), bits_used)
        certified_depth = len(quotients) - 1

    conv = convergents(quotients)
    if alpha.kind == certified.DECIMAL:
        digits = certified.decimal_information_digits(alpha.spec.args[0])
        certified_depth = min(
            certified_depth, _decimal_certified(digits, conv))

    return ContinuedFraction(
        alpha=alpha.text,
        partial_quotients=quotients,
        convergents=conv,
        certified_depth=certified_depth,
        status=status,
        precision_bits=bits_used)


def determinant_holds(cf: ContinuedFraction) -> bool:
    '''p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1) at every emitted k >= 1'''
    conv = cf['convergents']
    for k in range(1, len(conv)):
        p, q = conv[k]
        pp, qq = conv[k - 1]
        if p * qq - pp * q != (-1) ** (k - 1):
            return False
    return True


def best_approximation_holds(
        alpha: CertifiedReal, cf: ContinuedFraction) -> bool:
    '''
    |alpha - p_k/q_k| < 1/(q_k q_{k+1}) for every k whose successor is
    certified, checked against an enclosure of alpha.
    '''
    conv = cf['convergents']
    last = min(cf['certified_depth'], len(conv) - 1)
    if last < 1:
        return True
    q_max = conv[last][1]
    bits = min(precision.P_MAX, 4 * q_max.bit_length() + 64)
    enc = alpha.enclosure(bits)
    for k in range(0, last):
        p, q = conv[k]
        q_next = conv[k + 1][1]
        r = Fraction(p, q)
        gap = max(abs(enc.hi - r), abs(enc.lo - r))
        if not gap < Fraction(1, q * q_next):
            return False
    return True
