import math
import numpy as np

from fractions import Fraction

from toruslab.errors import (
    ConfigError, CoordinateOverflow, DimensionMismatch)

from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

Frequency = Tuple[int, ...]

# Coordinates beyond this bound are refused outright
MAX_COORDINATE = 10 ** 6

NORMS = ('L1', 'L2')


class Window(NamedTuple):
    dimension: int
    radius: int
    norm: str = 'L1'


def make_window(dimension: int, radius: int, norm: str = 'L1') -> Window:
    if dimension < 1:
        raise DimensionMismatch(
            'torus dimension must be positive, got {}'.format(dimension))
    if radius < 0:
        raise ConfigError('window radius must be non-negative')
    if radius > MAX_COORDINATE:
        raise CoordinateOverflow(
            'window radius {} exceeds {}'.format(radius, MAX_COORDINATE))
    if norm not in NORMS:
        raise ConfigError('unknown norm {!r}'.format(norm))
    return Window(dimension, radius, norm)


def check_frequency(xi: Sequence[int], dimension: Optional[int] = None) \
        -> Frequency:
    '''
    Validates a frequency and returns it as a tuple of ints

    Args:
        xi        (list(int)): the frequency
        dimension (int): the expected torus dimension, if known
    Returns:
        (tuple(int)): the frequency
    '''
    t = tuple(int(c) for c in xi)
    if len(t) == 0:
        raise DimensionMismatch('frequencies need at least one coordinate')
    if dimension is not None and len(t) != dimension:
        raise DimensionMismatch(
            'expected {} coordinates, got {}'.format(dimension, len(t)))
    if any(abs(c) > MAX_COORDINATE for c in t):
        raise CoordinateOverflow(
            'coordinate of {} exceeds {}'.format(t, MAX_COORDINATE))
    return t


def l1(xi: Sequence[int]) -> int:
    return sum(abs(c) for c in xi)


def l2sq(xi: Sequence[int]) -> int:
    return sum(c * c for c in xi)


def negate(xi: Sequence[int]) -> Frequency:
    return tuple(-c for c in xi)


def sobolev_weight(xi: Sequence[int], k: float) -> float:
    '''
    (1 + ||xi||^2)^k as a float. Integer k goes through exact rational
    arithmetic so the result is correctly rounded.
    '''
    base = 1 + l2sq(xi)
    if float(k).is_integer():
        return float(Fraction(base) ** int(k))
    return math.pow(base, k)


def sobolev_weight_exact(xi: Sequence[int], k: Fraction) -> Optional[Fraction]:
    '''(1 + ||xi||^2)^k exactly, or None when k is not an integer'''
    if Fraction(k).denominator != 1:
        return None
    return Fraction(1 + l2sq(xi)) ** int(k)


def norm_equivalence_check(xi: Sequence[int], tau: Fraction) -> bool:
    '''
    Checks |xi|^(-2 tau) <= (1 + n)^|tau| (1 + ||xi||^2)^(-tau) at a
    nonzero frequency. Raising both sides to 1/|tau| turns this into an
    integer comparison.
    '''
    if all(c == 0 for c in xi):
        raise ValueError('norm equivalence needs a nonzero frequency')
    n = len(xi)
    a = l1(xi) ** 2
    b = l2sq(xi)
    if tau > 0:
        return 1 + b <= (1 + n) * a
    if tau < 0:
        return a <= (1 + n) * (1 + b)
    return True


def enumerate_window(w: Window) -> Iterator[Frequency]:
    '''
    Every frequency of the window, in lexicographic order.
    '''
    if w.norm == 'L1':
        budget = w.radius
    else:
        budget = w.radius * w.radius

    def _rec(dims: int, remaining: int) -> Iterator[Frequency]:
        if w.norm == 'L1':
            bound = remaining
        else:
            bound = math.isqrt(remaining)
        if dims == 1:
            for c in range(-bound, bound + 1):
                yield (c,)
            return
        for c in range(-bound, bound + 1):
            spent = abs(c) if w.norm == 'L1' else c * c
            for rest in _rec(dims - 1, remaining - spent):
                yield (c,) + rest

    yield from _rec(w.dimension, budget)


def window_size(w: Window) -> int:
    '''Number of lattice points in an L1 window'''
    if w.norm != 'L1':
        return sum(1 for _ in enumerate_window(w))
    # points of Z^n with |xi| <= R: sum_k 2^k C(n, k) C(R, k)
    return sum(
        (2 ** k) * math.comb(w.dimension, k) * math.comb(w.radius, k)
        for k in range(0, w.dimension + 1))


def _shell_2d(s: int) -> np.ndarray:
    if s == 0:
        return np.zeros((1, 2), dtype=np.int64)
    x = np.arange(-s, s + 1, dtype=np.int64)
    y = s - np.abs(x)
    inner = y > 0
    # per first coordinate the order is (x, -y) then (x, y)
    lo = np.column_stack([x, -y])
    hi = np.column_stack([x[inner], y[inner]])
    pts = np.concatenate([lo, hi])
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    return pts[order]


def shell_array(dimension: int, s: int) -> np.ndarray:
    '''
    All frequencies with |xi| = s as an int64 array of shape (count, n),
    rows in lexicographic order.
    '''
    if dimension == 1:
        if s == 0:
            return np.zeros((1, 1), dtype=np.int64)
        return np.array([[-s], [s]], dtype=np.int64)
    if dimension == 2:
        return _shell_2d(s)
    blocks: List[np.ndarray] = []
    for c in range(-s, s + 1):
        sub = shell_array(dimension - 1, s - abs(c))
        first = np.full((sub.shape[0], 1), c, dtype=np.int64)
        blocks.append(np.hstack([first, sub]))
    return np.concatenate(blocks)


def shell_size(dimension: int, s: int) -> int:
    if s == 0:
        return 1
    return sum(
        (2 ** k) * math.comb(dimension, k) * math.comb(s - 1, k - 1)
        for k in range(1, dimension + 1))
