import os

from toruslab.errors import ConfigError

from typing import Optional

# Hard ceiling on certified precision in bits, TORUSLAB_PMAX included
PMAX_LIMIT = 1 << 20

DEFAULT_PMAX = 4096
DEFAULT_THREADS = 1
DEFAULT_TAIL_SHELLS = 3
DEFAULT_LIOUVILLE_THRESHOLD = 100.0
DEFAULT_WITNESS_BUDGET_2D = 10 ** 6
DEFAULT_WITNESS_BUDGET_AXIS = 10 ** 3

P_MAX: int
THREADS: int
TAIL_SHELLS: int
LIOUVILLE_THRESHOLD: float


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, '')
    if raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError('{} must be an integer, got {!r}'.format(name, raw))


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name, '')
    if raw.strip() == '':
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError('{} must be a number, got {!r}'.format(name, raw))


def init_precision(
        pmax: Optional[int] = None,
        threads: Optional[int] = None,
        tail_shells: Optional[int] = None,
        liouville_threshold: Optional[float] = None) -> None:
    '''
    Sets the module-wide knobs. Explicit arguments win over the
    TORUSLAB_* environment variables, which win over the defaults.

    Args:
        pmax                (int): certified precision cap in bits
        threads             (int): worker processes for window scans
        tail_shells         (int): dyadic shells used by the index estimate
        liouville_threshold (float): mu_k above this reads as unbounded
    '''
    global P_MAX
    global THREADS
    global TAIL_SHELLS
    global LIOUVILLE_THRESHOLD

    p = pmax if pmax is not None else _env_int('TORUSLAB_PMAX', DEFAULT_PMAX)
    if p < 64 or p > PMAX_LIMIT:
        raise ConfigError(
            'precision cap must be in [64, {}], got {}'.format(PMAX_LIMIT, p))

    t = threads if threads is not None \
        else _env_int('TORUSLAB_THREADS', DEFAULT_THREADS)
    if t < 1:
        raise ConfigError('threads must be positive, got {}'.format(t))

    tail = tail_shells if tail_shells is not None \
        else _env_int('TORUSLAB_TAIL_SHELLS', DEFAULT_TAIL_SHELLS)
    if tail < 1:
        raise ConfigError('tail shells must be positive, got {}'.format(tail))

    threshold = liouville_threshold if liouville_threshold is not None \
        else _env_float(
            'TORUSLAB_LIOUVILLE_THRESHOLD', DEFAULT_LIOUVILLE_THRESHOLD)
    if threshold <= 2:
        raise ConfigError(
            'liouville threshold must exceed 2, got {}'.format(threshold))

    P_MAX = p
    THREADS = t
    TAIL_SHELLS = tail
    LIOUVILLE_THRESHOLD = threshold


def witness_budget(dimension: int) -> int:
    '''Default witness-search radius for a torus of the given dimension'''
    raw = os.environ.get('TORUSLAB_WITNESS_BUDGET', '')
    if raw.strip() != '':
        return _env_int('TORUSLAB_WITNESS_BUDGET', 0)
    if dimension <= 2:
        return DEFAULT_WITNESS_BUDGET_2D
    return DEFAULT_WITNESS_BUDGET_AXIS * dimension


init_precision()
