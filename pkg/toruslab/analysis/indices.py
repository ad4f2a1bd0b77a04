import csv
import math
import logging

from fractions import Fraction

from toruslab import lattice, precision, utils
from toruslab.analysis import census, scan, theory
from toruslab.analysis.scan import ShellStats
from toruslab.errors import ConfigError, PrecisionExhausted
from toruslab.lattice import Frequency, Window
from toruslab.reals.surd import Surd
from toruslab.symbols.base import AbsLower, Symbol, abs_lower_exact
from toruslab.toruslab_types import EnvelopePoint, IndexReport
from toruslab.toruslab_types import LowerBoundCertificate, ShellSummary

from typing import IO, List, Optional, Tuple, Union

logger = logging.getLogger(__name__)

MIN_RADIUS = 16
ENVELOPE_HEADER = ['l1xi', 'log_l1xi', 'abs_p', 'log_abs_p', 'loss']

# certificate candidates closer than this to the float minimum get an
# exact re-evaluation
_CANDIDATE_REL = 2.0 ** -18
_CANDIDATE_CAP = 64


def exact_order(sym: Symbol) -> Fraction:
    return Fraction(sym.order)


def envelope_point(sym: Symbol, xi: Frequency,
                   fallback: Optional[float] = None) -> EnvelopePoint:
    '''
    Certified log|p(xi)| and the loss m - log|p| / log|xi| at a
    frequency with |xi| >= 2 and p(xi) != 0.
    '''
    size = lattice.l1(xi)
    log_size = math.log(size)
    try:
        log_abs = abs_lower_exact(sym, xi).log_mid
    except PrecisionExhausted:
        if fallback is None:
            raise
        log_abs = math.log(fallback)
    return EnvelopePoint(
        xi=list(xi),
        l1=size,
        log_l1=log_size,
        abs_p=math.exp(log_abs),
        log_abs_p=log_abs,
        loss=sym.order - log_abs / log_size)


def _near_min(st: ShellStats) -> Tuple[float, Frequency]:
    # first in scan order among equal floats
    return min(st.near, key=lambda c: c[0])


def _exact_k_sq(found: AbsLower, s: int, e2: Optional[int]) \
        -> Optional[Surd]:
    if found.abs_sq is None or e2 is None:
        return None
    return found.abs_sq * Fraction(s) ** e2


def certify_lower_bound(
        sym: Symbol,
        w: Window,
        r: float,
        stats: Optional[List[ShellStats]] = None) -> LowerBoundCertificate:
    '''
    The largest K with |p(xi)| >= K |xi|^(m - r) over every nonzero xi
    of the window where p(xi) != 0. This holds on the window only; it
    says nothing about frequencies outside it.

    Args:
        sym   (Symbol): the multiplier
        w     (Window): an L1 window
        r     (float): the loss being certified
        stats (list(ShellStats)): a scan of w to reuse, if at hand
    Returns:
        (LowerBoundCertificate): K with its argmin, plus the first
                                 nonzero zero of p as the violator
    '''
    if w.radius < 1:
        raise ConfigError('the window holds no nonzero frequency')
    if stats is None:
        stats = scan.scan_window(sym, w)
    e = Fraction(r) - exact_order(sym)
    e2 = int(2 * e) if (2 * e).denominator == 1 else None

    violator: Optional[List[int]] = None
    zeros_excluded = 0
    cands: List[Tuple[float, int, Frequency]] = []
    for st in stats:
        if st.shell == 0:
            continue
        zeros_excluded += st.zero_count
        if violator is None and st.zeros:
            violator = list(st.zeros[0])
        for v, xi in st.near:
            log_scaled = math.log(v) + float(e) * math.log(st.shell)
            cands.append((log_scaled, st.shell, xi))

    if not cands:
        logger.warning('%s: every nonzero frequency is a zero', sym.text)
        return LowerBoundCertificate(
            r=r, radius=w.radius, K=None, K_exact=None, argmin=None,
            violator=violator, zeros_excluded=zeros_excluded,
            degenerate=True, asymptotic=False)

    low = min(c[0] for c in cands)
    picked = [c for c in cands if c[0] <= low + _CANDIDATE_REL]
    picked = picked[:_CANDIDATE_CAP]

    best_xi: Optional[Frequency] = None
    best_sq: Optional[Surd] = None
    best_log = math.inf
    all_exact = True
    for _, s, xi in picked:
        found = abs_lower_exact(sym, xi)
        k_sq = _exact_k_sq(found, s, e2)
        log_k = found.log_mid + float(e) * math.log(s)
        if k_sq is None:
            all_exact = False
        if best_xi is None:
            best_xi, best_sq, best_log = xi, k_sq, log_k
            continue
        if all_exact and k_sq is not None and best_sq is not None:
            better = k_sq < best_sq
        else:
            better = log_k < best_log
        if better:
            best_xi, best_sq, best_log = xi, k_sq, log_k

    k_exact: Optional[str] = None
    if all_exact and best_sq is not None:
        k_value = math.sqrt(float(best_sq))
        if best_sq.is_rational():
            k_exact = str(Surd.sqrt_of(best_sq.to_fraction()))
    else:
        k_value = math.exp(best_log)

    return LowerBoundCertificate(
        r=r,
        radius=w.radius,
        K=k_value,
        K_exact=k_exact,
        argmin=list(best_xi) if best_xi is not None else None,
        violator=violator,
        zeros_excluded=zeros_excluded,
        degenerate=False,
        asymptotic=False)


def _buckets(sym: Symbol, w: Window, stats: List[ShellStats]) \
        -> List[ShellSummary]:
    out: List[ShellSummary] = []
    k = 1
    while 2 ** k <= w.radius:
        lo = 2 ** k
        hi = min(2 ** (k + 1) - 1, w.radius)
        inside = stats[lo:hi + 1]
        best: Optional[Tuple[float, Frequency, float]] = None
        for st in inside:
            if not st.near:
                continue
            v, xi = _near_min(st)
            loss = sym.order - math.log(v) / math.log(st.shell)
            if best is None or loss > best[0]:
                best = (loss, xi, v)
        witness: Optional[EnvelopePoint] = None
        if best is not None:
            witness = envelope_point(sym, best[1], best[2])
            logger.debug(
                'shell %d: max loss %.6f at %s', k, witness['loss'], best[1])
        out.append(ShellSummary(
            shell=k,
            lo=lo,
            hi=hi,
            points=sum(st.points for st in inside),
            nonzero=sum(st.nonzero for st in inside),
            max_loss=witness['loss'] if witness is not None else None,
            witness=witness))
        k += 1
    return out


def ellipticity_ratio(sym: Symbol, kmax: int = 6) -> List[Tuple[int, float]]:
    '''
    |p(xi)| / |xi|^m along xi = 10^k e_1 for k = 0 .. kmax. A ratio
    that drifts to zero means p is not elliptic.
    '''
    out = []
    for k in range(0, kmax + 1):
        xi = (10 ** k,) + (0,) * (sym.dimension - 1)
        found = abs_lower_exact(sym, xi)
        if found.zero:
            out.append((k, 0.0))
            continue
        out.append((k, math.exp(found.log_mid - sym.order * k * math.log(10))))
    return out


def estimate_indices(
        sym: Symbol,
        w: Window,
        r: Optional[float] = None,
        threads: Optional[int] = None) -> IndexReport:
    '''
    Empirical GS and GH indices from the log-envelope of |p| over the
    dyadic shells [2^k, 2^(k+1)) of the window.

    Args:
        sym     (Symbol): the multiplier
        w       (Window): an L1 window with radius >= 16
        r       (float): also certify K for this loss, if given
        threads (int): worker processes for the scan
    Returns:
        (IndexReport): shell series, tail estimates, zero census and
                       the theoretical prediction for comparison
    '''
    if w.radius < MIN_RADIUS:
        raise ConfigError(
            'index estimation needs radius >= {}'.format(MIN_RADIUS))
    stats = scan.scan_window(sym, w, threads)
    zc = census.census_from_stats(sym, w, stats)
    shells = _buckets(sym, w, stats)
    tail_shells = precision.TAIL_SHELLS
    notes: List[str] = []

    tail = [
        sh['max_loss'] for sh in shells[-tail_shells:]
        if sh['max_loss'] is not None]
    r_gs: Optional[float] = None
    if tail:
        r_gs = max(0.0, max(tail))
    if zc['verdict'] == census.GROWING_SUSPECTED:
        r_gh = None
        gh_verdict = 'infinite-heuristic'
        notes.append(
            'GH index reported as infinite: heuristic, the zero count '
            'grows across the nested radii of the window')
    else:
        r_gh = r_gs
        gh_verdict = 'finite'

    certificate = None
    if r is not None:
        certificate = certify_lower_bound(sym, w, r, stats)
        notes.append('K is certified on the window only, not asymptotically')

    witnesses = [sh['witness'] for sh in shells if sh['witness'] is not None]
    undecided_count = sum(st.undecided_count for st in stats)
    dominated = undecided_count > 0 and undecided_count >= len(witnesses)
    if dominated:
        notes.append('undecided evaluations outnumber the shell witnesses')

    report = IndexReport(
        symbol=sym.text,
        dimension=sym.dimension,
        order=sym.order,
        radius=w.radius,
        tail_shells=tail_shells,
        shells=shells,
        r_gs=r_gs,
        r_gh=r_gh,
        gh_verdict=gh_verdict,
        witnesses=witnesses,
        zero_census=zc,
        certificate=certificate,
        ellipticity=ellipticity_ratio(sym),
        undecided=zc['undecided'],
        precision_dominated=dominated,
        prediction=theory.predict_indices(sym),
        notes=notes)
    logger.info(
        '%s: r_gs=%s r_gh=%s (%s)', sym.text, r_gs, r_gh, gh_verdict)
    return report


def envelope_rows(report: IndexReport) -> List[List[str]]:
    return [
        [str(pt['l1']), utils.fmt_real(pt['log_l1']),
         utils.fmt_real(pt['abs_p']), utils.fmt_real(pt['log_abs_p']),
         utils.fmt_real(pt['loss'])]
        for pt in report['witnesses']]


def write_envelope(report: IndexReport, out: Union[str, IO[str]]) -> None:
    '''One CSV row per shell witness, header first'''
    if isinstance(out, str):
        with open(out, 'w', newline='') as f:
            write_envelope(report, f)
        return
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(ENVELOPE_HEADER)
    writer.writerows(envelope_rows(report))
