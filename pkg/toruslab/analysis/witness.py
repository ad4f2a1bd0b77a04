import math
import logging
import numpy as np

from fractions import Fraction

from toruslab import lattice, precision
from toruslab.analysis import scan
from toruslab.errors import BudgetExhausted, ConfigError, PrecisionExhausted
from toruslab.lattice import Frequency
from toruslab.reals.surd import ExactComplex, Surd
from toruslab.spectral import distribution
from toruslab.spectral.distribution import (
    Coefficient, Norm, SpectralDistribution)
from toruslab.symbols.base import AbsLower, Symbol, abs_lower_exact
from toruslab.toruslab_types import WitnessReport

from typing import List, NamedTuple, Optional, Tuple, Union

logger = logging.getLogger(__name__)

ZERO_SEQUENCE = 'zero-sequence'
SMALL_SYMBOL = 'small-symbol'

START_RADIUS = 16

# float prefilter slack on top of the reported error bound
_SLACK = 2.0 ** -20
# margin for threshold checks done on certified log enclosures
_LOG_MARGIN = 1e-12


class _Found(NamedTuple):
    kind: str
    frequencies: List[Frequency]
    lowers: List[Optional[AbsLower]]  # None for zeros
    radius: int


def _exponent(sym: Symbol, r: float) -> Fraction:
    return Fraction(sym.order) - Fraction(r)


def _small_enough(sym: Symbol, xi: Frequency, s: int, j: int,
                  e: Fraction) -> Optional[AbsLower]:
    '''
    Certifies 0 < |p(xi)| <= s^e / j. Exact when |p|^2 is exact and 2e
    is an integer, otherwise on the upper end of the log enclosure.
    '''
    try:
        found = abs_lower_exact(sym, xi)
    except PrecisionExhausted:
        logger.warning('%s: skipping undecided witness candidate %s',
                       sym.text, xi)
        return None
    if found.zero:
        return None
    e2 = 2 * e
    if found.abs_sq is not None and e2.denominator == 1:
        ok = found.abs_sq * (j * j) <= Fraction(s) ** int(e2)
    else:
        limit = float(e) * math.log(s) - math.log(j)
        ok = found.log_hi <= limit - _LOG_MARGIN
    return found if ok else None


def _search(sym: Symbol, r: float, count: int, budget: int,
            want_zeros: bool) -> _Found:
    '''
    Walks the shells 1, 2, ... in order, lexicographically inside a
    shell, and greedily collects nonzero zeros and points with
    0 < |p(xi_j)| <= (1/j) |xi_j|^(m - r).
    '''
    e = _exponent(sym, r)
    zeros: List[Frequency] = []
    small: List[Frequency] = []
    lowers: List[Optional[AbsLower]] = []
    last_zero = 0
    checkpoint = START_RADIUS

    for s in range(1, budget + 1):
        pts_all = lattice.shell_array(sym.dimension, s)
        for start in range(0, pts_all.shape[0], scan.CHUNK):
            pts = pts_all[start:start + scan.CHUNK]
            zmask = np.asarray(sym.zero_mask(pts), dtype=bool)
            if zmask.any():
                last_zero = s
                if want_zeros:
                    room = count - len(zeros)
                    zeros.extend(
                        tuple(int(c) for c in row)
                        for row in pts[zmask][:max(room, 0)])
            if len(small) >= count:
                continue
            vals, err = sym.approx_abs(pts)
            lower = np.array(vals, dtype=np.float64) - err
            lower[zmask] = np.inf
            top = float(s) ** float(e) / (len(small) + 1)
            for i in np.flatnonzero(lower <= top * (1 + _SLACK)):
                j = len(small) + 1
                if j > count:
                    break
                if lower[i] > float(s) ** float(e) / j * (1 + _SLACK):
                    continue
                xi = tuple(int(c) for c in pts[i])
                found = _small_enough(sym, xi, s, j, e)
                if found is not None:
                    small.append(xi)
                    lowers.append(found)

        if want_zeros and len(zeros) >= count:
            return _Found(ZERO_SEQUENCE, zeros, [None] * count, s)
        if len(small) >= count and (not want_zeros or 2 * last_zero <= s):
            return _Found(SMALL_SYMBOL, small, lowers, s)
        if s == checkpoint:
            logger.debug(
                '%s r=%s: radius %d, %d zeros, %d small values',
                sym.text, r, s, len(zeros), len(small))
            checkpoint *= 2

    if len(small) >= count:
        return _Found(SMALL_SYMBOL, small, lowers, budget)
    raise BudgetExhausted(
        '{}: {} of {} witnesses for r = {} within radius {}'.format(
            sym.text, max(len(small), len(zeros)), count, r, budget),
        largest_radius=budget,
        found=small if len(small) >= len(zeros) else zeros)


def _check_args(sym: Symbol, count: int, budget: Optional[int]) -> int:
    if count < 1:
        raise ConfigError('witness count must be positive')
    b = budget if budget is not None \
        else precision.witness_budget(sym.dimension)
    if b < 1:
        raise ConfigError('witness budget must be positive')
    if b > lattice.MAX_COORDINATE:
        raise ConfigError(
            'witness budget {} exceeds {}'.format(b, lattice.MAX_COORDINATE))
    return b


def proof_bound(dimension: int, e: Fraction, count: int) \
        -> Union[Fraction, float]:
    '''(1 + n)^|m - r| sum_{j <= N} 1/j^2, exact when |m - r| is integral'''
    harmonic = sum(Fraction(1, j * j) for j in range(1, count + 1))
    ea = abs(e)
    if ea.denominator == 1:
        return Fraction(1 + dimension) ** int(ea) * harmonic
    return math.pow(1 + dimension, float(ea)) * float(harmonic)


def _holds(norm: Norm, bound: Union[Fraction, float]) -> bool:
    if isinstance(bound, Fraction) and not isinstance(norm, float):
        return norm <= bound
    return float(norm) <= float(bound) * (1 + 1e-12)


def _value(sym: Symbol, xi: Frequency) -> Coefficient:
    exact = sym.exact_value(xi)
    if exact is not None:
        return exact
    return sym.approx_value(xi)


def _abs_p(found: _Found) -> List[float]:
    return [
        0.0 if lo is None else math.exp(lo.log_mid) for lo in found.lowers]


def _report(sym: Symbol, r: float, flavor: str, found: _Found,
            norms: dict, bound: Union[Fraction, float],
            holds: Optional[bool], tails: Optional[List[str]] = None,
            decreasing: Optional[bool] = None) -> WitnessReport:
    return WitnessReport(
        kind=found.kind,
        flavor=flavor,
        symbol=sym.text,
        r=r,
        count=len(found.frequencies),
        frequencies=[list(xi) for xi in found.frequencies],
        abs_p=_abs_p(found),
        search_radius=found.radius,
        norms={k: str(v) for k, v in norms.items()},
        bound=str(bound),
        bound_holds=holds,
        tails=tails or [],
        tails_decreasing=decreasing)


def gh_witness(sym: Symbol, r: float, count: int,
               budget: Optional[int] = None) \
        -> Tuple[WitnessReport, SpectralDistribution]:
    '''
    A sequence showing p(D) is not GH-r, together with u_N, the sum of
    the modes e^(i xi_j.x). Nonzero zeros of p are used when they keep
    coming; otherwise frequencies with 0 < |p(xi_j)| <= (1/j)|xi_j|^(m-r).

    Args:
        sym    (Symbol): the multiplier
        r      (float): the loss being refuted
        count  (int): N, the number of witnesses
        budget (int): largest search radius
    Returns:
        (WitnessReport, SpectralDistribution): the witnesses and u_N,
            with ||u_N||^2_{H^0} = N and ||p(D)u_N||^2_{H^(r-m)} against
            (1 + n)^|m - r| sum 1/j^2
    Raises:
        BudgetExhausted: fewer than N witnesses within the budget
    '''
    radius = _check_args(sym, count, budget)
    found = _search(sym, r, count, radius, want_zeros=True)
    u = SpectralDistribution(
        sym.dimension, {xi: 1 for xi in found.frequencies},
        distribution.WITNESS)
    e = _exponent(sym, r)
    pu = distribution.sobolev_norm_sq(distribution.apply(sym, u), -e)
    bound = proof_bound(sym.dimension, e, count)
    norms = {
        'u_N_H0_sq': distribution.sobolev_norm_sq(u, 0),
        'p_u_N_sq': pu}
    holds = _holds(pu, bound)
    logger.info('%s: %d %s witnesses for r = %s up to radius %d',
                sym.text, count, found.kind, r, found.radius)
    return _report(sym, r, 'gh', found, norms, bound, holds), u


def gs_witness(sym: Symbol, r: float, count: int,
               budget: Optional[int] = None) \
        -> Tuple[WitnessReport, SpectralDistribution]:
    '''
    f_N with f(xi_j) = p(xi_j) on a small-symbol sequence. Its
    H^(r-m) norm stays under the proof's constant while the solution
    with u(xi_j) = 1 has ||u_N||^2_{H^0} = N.
    '''
    radius = _check_args(sym, count, budget)
    found = _search(sym, r, count, radius, want_zeros=False)
    f = SpectralDistribution(
        sym.dimension,
        {xi: _value(sym, xi) for xi in found.frequencies},
        distribution.WITNESS)
    e = _exponent(sym, r)
    f_norm = distribution.sobolev_norm_sq(f, -e)
    bound = proof_bound(sym.dimension, e, count)
    norms = {'f_N_sq': f_norm, 'u_N_H0_sq': Fraction(count)}
    holds = _holds(f_norm, bound)
    return _report(sym, r, 'gs', found, norms, bound, holds), f


def _damping(xi: Frequency, half_power: Fraction) -> Coefficient:
    base = 1 + lattice.l2sq(xi)
    if half_power.denominator == 1:
        return ExactComplex(Fraction(base) ** int(half_power))
    return complex(math.pow(base, float(half_power)))


def _times(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, ExactComplex) and isinstance(b, ExactComplex):
        return a * b
    return complex(a) * complex(b)


def _tail(terms: List[Norm]) -> Norm:
    if any(isinstance(t, float) for t in terms):
        return math.fsum(float(t) for t in terms)
    total = Surd(0)
    for t in terms:
        assert not isinstance(t, float)
        total = total + t
    return total.to_fraction() if total.is_rational() else total


def closed_range_witness(sym: Symbol, r: float, k: float, count: int,
                         budget: Optional[int] = None) \
        -> Tuple[WitnessReport, List[SpectralDistribution],
                 SpectralDistribution]:
    '''
    The sequence behind the closed-range argument: u_l with
    u_l(xi_j) = (1 + ||xi_j||^2)^((r - m - k)/2) for j <= l, and f
    with f(xi_j) = p(xi_j) times the same weight for j <= N.

    Args:
        sym    (Symbol): the multiplier
        r      (float): the loss
        k      (float): the Sobolev index of f
        count  (int): N
        budget (int): largest search radius
    Returns:
        (WitnessReport, list(SpectralDistribution), SpectralDistribution):
            tails[l-1] = ||p(D)u_l - f||^2_{H^k}
                       = sum_{j > l} (1 + ||xi_j||^2)^(r-m) |p(xi_j)|^2,
            strictly decreasing to 0 at l = N
    '''
    radius = _check_args(sym, count, budget)
    found = _search(sym, r, count, radius, want_zeros=False)
    e = _exponent(sym, r)
    half = (-Fraction(k) - e) / 2
    weights = [_damping(xi, half) for xi in found.frequencies]
    values = [_value(sym, xi) for xi in found.frequencies]

    f = SpectralDistribution(
        sym.dimension,
        {xi: _times(v, w)
         for xi, v, w in zip(found.frequencies, values, weights)},
        distribution.WITNESS)
    us = [
        SpectralDistribution(
            sym.dimension,
            dict(zip(found.frequencies[:ell], weights[:ell])),
            distribution.WITNESS)
        for ell in range(1, count + 1)]

    terms = [
        distribution.sobolev_norm_sq(
            SpectralDistribution(sym.dimension, {xi: v}), -e)
        for xi, v in zip(found.frequencies, values)]
    tails: List[Norm] = [_tail(terms[ell:]) for ell in range(1, count + 1)]

    norms = {'f_Hk_sq': distribution.sobolev_norm_sq(f, k)}
    decreasing = all(
        float(a) > float(b) for a, b in zip(tails, tails[1:]))
    bound = proof_bound(sym.dimension, e, count)
    report = _report(
        sym, r, 'closed-range', found, norms, bound, None,
        [str(t) for t in tails], decreasing)
    return report, us, f
