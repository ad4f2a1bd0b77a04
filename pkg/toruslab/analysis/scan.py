import math
import time
import logging
import functools
import numpy as np

from concurrent.futures import ProcessPoolExecutor

from toruslab import lattice, precision
from toruslab.errors import ConfigError, PrecisionExhausted
from toruslab.lattice import Frequency, Window
from toruslab.symbols.base import Symbol, abs_lower_exact

from typing import List, NamedTuple, Optional, Tuple

logger = logging.getLogger(__name__)

ZERO_CAP = 1000
UNDECIDED_CAP = 1000
NEAR_CAP = 4
CHUNK = 1 << 20

# shells handed to a worker at a time
BLOCK = 64

# a float |p| within this factor of its error bound is decided exactly
_REFINE = float(2 ** 20)
# relative slack when collecting near-minimal points of a shell
_NEAR_REL = 2.0 ** -19


class ShellStats(NamedTuple):
    shell: int
    points: int
    nonzero: int
    zero_count: int
    zeros: List[Frequency]
    undecided_count: int
    undecided: List[Frequency]
    # points within float noise of the shell minimum of |p|, scan order
    near: List[Tuple[float, Frequency]]

    @property
    def min_abs(self) -> Optional[float]:
        return min(v for v, _ in self.near) if self.near else None


def _rows(pts: np.ndarray) -> List[Frequency]:
    return [tuple(int(c) for c in row) for row in pts]


def check_scan_window(sym: Symbol, w: Window) -> None:
    if w.dimension != sym.dimension:
        raise ConfigError(
            '{} lives on T^{}, window is {}-dimensional'.format(
                sym.text, sym.dimension, w.dimension))
    if w.norm != 'L1':
        raise ConfigError('window scans run over L1 shells only')


def scan_shell(sym: Symbol, s: int) -> ShellStats:
    '''
    Zero test and |p| for every frequency with |xi| = s.

    Args:
        sym (Symbol): the multiplier
        s   (int): the L1 radius of the shell
    Returns:
        (ShellStats): counts, capped zero and undecided lists, and the
                      near-minimal |p| candidates of the shell
    '''
    pts_all = lattice.shell_array(sym.dimension, s)
    zeros: List[Frequency] = []
    undecided: List[Frequency] = []
    zero_count = 0
    undecided_count = 0
    nonzero = 0
    cands: List[Tuple[float, int, Frequency]] = []

    for start in range(0, pts_all.shape[0], CHUNK):
        pts = pts_all[start:start + CHUNK]
        zmask = np.asarray(sym.zero_mask(pts), dtype=bool)
        zc = int(zmask.sum())
        if zc:
            zero_count += zc
            room = ZERO_CAP - len(zeros)
            if room > 0:
                zeros.extend(_rows(pts[zmask][:room]))
        live = ~zmask
        if not live.any():
            continue

        vals, err = sym.approx_abs(pts)
        vals = np.array(vals, dtype=np.float64)
        vals[zmask] = np.inf
        shaky = live & (vals <= _REFINE * err)
        for i in np.flatnonzero(shaky):
            xi = tuple(int(c) for c in pts[i])
            try:
                found = abs_lower_exact(sym, xi)
            except PrecisionExhausted:
                vals[i] = np.inf
                live[i] = False
                undecided_count += 1
                if len(undecided) < UNDECIDED_CAP:
                    undecided.append(xi)
                continue
            if found.zero:
                vals[i] = np.inf
                live[i] = False
                zero_count += 1
                if len(zeros) < ZERO_CAP:
                    zeros.append(xi)
            else:
                vals[i] = math.exp(found.log_mid)
        nonzero += int(live.sum())
        if not live.any():
            continue

        low = float(vals.min())
        idx = np.flatnonzero(vals <= low * (1 + _NEAR_REL))[:NEAR_CAP]
        for i in idx:
            cands.append(
                (float(vals[i]), start + int(i),
                 tuple(int(c) for c in pts[i])))

    near: List[Tuple[float, Frequency]] = []
    if cands:
        low = min(c[0] for c in cands)
        kept = [c for c in cands if c[0] <= low * (1 + _NEAR_REL)]
        kept.sort(key=lambda c: c[1])
        near = [(v, xi) for v, _, xi in kept[:NEAR_CAP]]

    return ShellStats(
        shell=s,
        points=int(pts_all.shape[0]),
        nonzero=nonzero,
        zero_count=zero_count,
        zeros=zeros,
        undecided_count=undecided_count,
        undecided=undecided,
        near=near)


def _scan_block(sym: Symbol, shells: range) -> List[ShellStats]:
    return [scan_shell(sym, s) for s in shells]


def _blocks(radius: int) -> List[range]:
    return [
        range(lo, min(lo + BLOCK, radius + 1))
        for lo in range(0, radius + 1, BLOCK)]


def scan_window(
        sym: Symbol,
        w: Window,
        threads: Optional[int] = None) -> List[ShellStats]:
    '''
    Scans every shell 0 .. R of the window.

    Args:
        sym     (Symbol): the multiplier
        w       (Window): an L1 window on the symbol's torus
        threads (int): worker processes; defaults to precision.THREADS
    Returns:
        (list(ShellStats)): one entry per shell, in shell order
    '''
    check_scan_window(sym, w)
    workers = threads if threads is not None else precision.THREADS
    started = time.time()

    if workers <= 1 or w.radius < BLOCK:
        out = _scan_block(sym, range(0, w.radius + 1))
    else:
        # map keeps block order, so the merge is the serial order
        out = []
        work = functools.partial(_scan_block, sym)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for block in executor.map(work, _blocks(w.radius)):
                out.extend(block)

    logger.info(
        'scanned %s on radius %d: %d points in %.2fs (%d workers)',
        sym.text, w.radius, sum(st.points for st in out),
        time.time() - started, workers)
    return out
