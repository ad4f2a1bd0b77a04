import math
import logging

from fractions import Fraction

from toruslab import lattice
from toruslab.analysis import indices
from toruslab.errors import DimensionMismatch, Incompatible
from toruslab.lattice import Frequency
from toruslab.reals.surd import ExactComplex
from toruslab.spectral import distribution
from toruslab.spectral.distribution import Coefficient, SpectralDistribution
from toruslab.symbols.base import Symbol
from toruslab.toruslab_types import LowerBoundCertificate, NormReport

from typing import Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)


def compatibility_check(sym: Symbol, f: SpectralDistribution) \
        -> List[Frequency]:
    '''
    Frequencies of supp(f) where the symbol vanishes. f annihilates the
    kernel of the transpose exactly when this list is empty.
    '''
    if sym.dimension != f.dimension:
        raise DimensionMismatch(
            '{} lives on T^{}, f on T^{}'.format(
                sym.text, sym.dimension, f.dimension))
    return [xi for xi in f.support() if sym.is_zero(xi)]


def _divide(c: Coefficient, sym: Symbol, xi: Frequency) -> Coefficient:
    pv = sym.exact_value(xi)
    if pv is not None and isinstance(c, ExactComplex):
        try:
            return c / pv
        except ValueError:
            # coefficient and symbol live in different quadratic fields
            pass
    if pv is not None:
        return complex(c) / complex(pv)
    return complex(c) / sym.approx_value(xi)


def _support_radius(f: SpectralDistribution) -> int:
    return max([lattice.l1(xi) for xi in f.support()] + [1])


def solve(
        sym: Symbol,
        f: SpectralDistribution,
        k: float,
        r: float,
        certificate: Optional[LowerBoundCertificate] = None,
        certify: bool = True) -> Tuple[SpectralDistribution, NormReport]:
    '''
    Solves p(D)u = f by u(xi) = f(xi) / p(xi) on supp(f).

    The norm report compares ||u||_{H^(k+m-r)} / ||f||_{H^k} with
    (1 + n)^(|m - r| / 2) / K, K the lower-bound constant certified on
    an L1 window holding supp(f).

    Args:
        sym         (Symbol): the multiplier
        f           (SpectralDistribution): the right-hand side
        k           (float): Sobolev index of f
        r           (float): the loss the bound is taken with
        certificate (LowerBoundCertificate): reuse this K instead of
                                             scanning for one
        certify     (bool): scan for K when no certificate is given
    Returns:
        (SpectralDistribution, NormReport): u and its norm report
    Raises:
        Incompatible: f does not vanish on the zeros of p
    '''
    violations = compatibility_check(sym, f)
    if violations:
        logger.warning('%s: right-hand side hits %d zero(s)',
                       sym.text, len(violations))
        raise Incompatible(violations)

    coeffs: Dict[Frequency, Coefficient] = {
        xi: _divide(c, sym, xi) for xi, c in f.items()}
    u = SpectralDistribution(f.dimension, coeffs, distribution.SOLVER)

    m = Fraction(sym.order)
    f_sq = distribution.sobolev_norm_sq(f, k)
    u_sq = distribution.sobolev_norm_sq(u, Fraction(k) + m - Fraction(r))
    ratio: Optional[float] = None
    if float(f_sq) > 0:
        ratio = math.sqrt(float(u_sq) / float(f_sq))

    if certificate is None and certify and len(f):
        w = lattice.make_window(sym.dimension, _support_radius(f))
        certificate = indices.certify_lower_bound(sym, w, r)

    K: Optional[float] = None
    bound: Optional[float] = None
    holds: Optional[bool] = None
    origin = tuple([0] * f.dimension)
    if certificate is not None and not certificate['degenerate']:
        K = certificate['K']
    if K is not None and K > 0 and origin not in f:
        # |xi|^(m-r) is undefined at the origin, so the bound skips it
        n = sym.dimension
        bound = math.pow(1 + n, abs(float(m) - r) / 2) / K
        if ratio is not None:
            holds = ratio <= bound * (1 + 1e-12)

    report = NormReport(
        k=k,
        r=r,
        order=sym.order,
        f_norm_sq=str(f_sq),
        u_norm_sq=str(u_sq),
        ratio=ratio,
        K=K,
        bound=bound,
        bound_holds=holds)
    logger.info('%s: solved on %d modes, ratio %s, bound %s',
                sym.text, len(u), ratio, bound)
    return u, report
