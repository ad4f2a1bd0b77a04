import math
import random
import logging

from toruslab import precision
from toruslab.diophantine import continued, registry
from toruslab.errors import ConfigError, InvalidCoefficient, UnknownClass
from toruslab.reals import certified
from toruslab.reals.certified import CertifiedReal
from toruslab.toruslab_types import MuEstimate

from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

CONVERGED = 'Converged'
GROWING_UNBOUNDED = 'GrowingUnbounded'
TRUNCATION_LIMITED = 'TruncationLimited'

# record highs of mu_k that keep climbing by at least this much are
# flagged as an advisory, separately from the threshold status
_RECORD_STEP = 0.5
_RECORDS_NEEDED = 3


def exponents(convergents: List[Any], last: int) -> List[float]:
    '''mu_k = 1 + log q_{k+1} / log q_k for 2 <= k < last'''
    out = []
    for k in range(2, last):
        q = convergents[k][1]
        q_next = convergents[k + 1][1]
        out.append(1 + math.log(q_next) / math.log(q))
    return out


def _records(values: List[float]) -> List[float]:
    out: List[float] = []
    for v in values:
        if not out or v > out[-1]:
            out.append(v)
    return out


def exceeds_threshold(mu: List[float], threshold: float) -> bool:
    return any(v > threshold for v in mu)


def records_climbing(mu: List[float]) -> bool:
    '''The last record highs of mu_k each rose by _RECORD_STEP or more'''
    rec = _records(mu)
    if len(rec) < _RECORDS_NEEDED:
        return False
    steps = [b - a for a, b in zip(rec, rec[1:])][-(_RECORDS_NEEDED - 1):]
    return all(s >= _RECORD_STEP for s in steps)


def mu_estimate(alpha: CertifiedReal, depth: int) -> MuEstimate:
    '''
    Args:
        alpha (CertifiedReal): an irrational, or a decimal truncation
        depth (int): how many partial quotients to expand
    Returns:
        (MuEstimate): the exponents mu_k and mu_hat, the max over the
                      tail half of them
    '''
    if depth < 3:
        raise ConfigError('mu estimation needs depth >= 3')
    if alpha.kind != certified.DECIMAL and alpha.is_rational:
        raise InvalidCoefficient(
            '{} is rational, its measure is 1'.format(alpha.text))
    cf = continued.cf_expand(alpha, depth)
    last = min(cf['certified_depth'], len(cf['convergents']) - 1)
    mu = exponents(cf['convergents'], last)
    tail = mu[len(mu) // 2:]
    mu_hat = max(tail) if tail else None

    if exceeds_threshold(mu, precision.LIOUVILLE_THRESHOLD):
        status = GROWING_UNBOUNDED
    elif last < depth:
        status = TRUNCATION_LIMITED
    else:
        status = CONVERGED

    entry: Optional[Dict[str, str]]
    try:
        found = registry.registry_lookup(alpha)
        entry = {
            'mu_lo': found['mu_lo'], 'mu_hi': found['mu_hi'],
            'citation': found['citation']}
    except UnknownClass:
        entry = None

    return MuEstimate(
        alpha=alpha.text,
        depth=depth,
        mu_k=mu,
        mu_hat=mu_hat,
        status=status,
        certified_depth=cf['certified_depth'],
        records_climbing=records_climbing(mu),
        registry=entry)


def sample_mu(count: int, digits: int = 60, depth: int = 40,
              seed: int = 0) -> Dict[str, Any]:
    '''
    mu_hat for count random decimals in [0, 1). Almost every real has
    measure 2, and this is the finite-precision picture of that.
    '''
    if count < 1:
        raise ConfigError('sample count must be positive')
    rng = random.Random(seed)
    rows = []
    near_two = 0
    for _ in range(count):
        text = '0.' + ''.join(str(rng.randrange(10)) for _ in range(digits))
        est = mu_estimate(certified.decimal(text), depth)
        rows.append({
            'alpha': est['alpha'], 'mu_hat': est['mu_hat'],
            'certified_depth': est['certified_depth']})
        if est['mu_hat'] is not None and 1.9 <= est['mu_hat'] <= 2.1:
            near_two += 1
    logger.info('sampled %d decimals, %d near 2', count, near_two)
    return {
        'count': count,
        'digits': digits,
        'seed': seed,
        'near_two': near_two,
        'fraction_near_two': near_two / count,
        'samples': rows}
