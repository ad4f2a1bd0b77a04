import logging

from toruslab.analysis import scan
from toruslab.analysis.scan import ShellStats
from toruslab.lattice import Window
from toruslab.symbols.base import Symbol
from toruslab.toruslab_types import ZeroCensus

from typing import List, Optional

logger = logging.getLogger(__name__)

ONLY_ORIGIN = 'OnlyOrigin'
FINITE_SUSPECTED = 'FiniteSuspected'
GROWING_SUSPECTED = 'GrowingSuspected'


def nested_radii(radius: int) -> List[int]:
    return [radius // 4, radius // 2, radius]


def census_from_stats(
        sym: Symbol, w: Window, stats: List[ShellStats]) -> ZeroCensus:
    '''Builds the zero census out of an existing window scan'''
    radii = nested_radii(w.radius)
    counts = [0, 0, 0]
    zeros: List[List[int]] = []
    undecided: List[List[int]] = []
    total = 0
    for st in stats:
        if st.shell > 0:
            total += st.zero_count
            for i, rad in enumerate(radii):
                if st.shell <= rad:
                    counts[i] += st.zero_count
        for xi in st.zeros:
            if len(zeros) < scan.ZERO_CAP:
                zeros.append(list(xi))
        for xi in st.undecided:
            if len(undecided) < scan.UNDECIDED_CAP:
                undecided.append(list(xi))

    if total == 0:
        verdict = ONLY_ORIGIN
    elif counts[0] < counts[1] < counts[2]:
        verdict = GROWING_SUSPECTED
    else:
        verdict = FINITE_SUSPECTED

    all_zeros = total + sum(
        st.zero_count for st in stats if st.shell == 0)
    if undecided:
        logger.warning(
            '%s: %d frequencies left undecided', sym.text, len(undecided))
    return ZeroCensus(
        dimension=w.dimension,
        radius=w.radius,
        radii=radii,
        counts=counts,
        total=total,
        zeros=zeros,
        capped=all_zeros > len(zeros),
        undecided=undecided,
        verdict=verdict)


def zero_scan(
        sym: Symbol,
        w: Window,
        stats: Optional[List[ShellStats]] = None) -> ZeroCensus:
    '''
    Every zero of the symbol in the window, decided exactly.

    OnlyOrigin means no nonzero frequency vanishes (the origin itself
    shows up in the zero list when p(0) = 0). GrowingSuspected is a
    finite-window heuristic: the zero count strictly increases over
    the radii R/4, R/2, R.

    Args:
        sym   (Symbol): the multiplier
        w     (Window): an L1 window
        stats (list(ShellStats)): a scan of w to reuse, if at hand
    Returns:
        (ZeroCensus): counts, zeros, undecided frequencies and verdict
    '''
    if stats is None:
        stats = scan.scan_window(sym, w)
    return census_from_stats(sym, w, stats)
