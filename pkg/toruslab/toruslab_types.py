from mypy_extensions import TypedDict

from typing import Dict, List, Optional, Tuple

FactoredInteger = TypedDict(
    'FactoredInteger',
    {
        'n': int,
        'factors': List[Tuple[int, int]]  # (prime, exponent), primes ascending
    }
)

EnvelopePoint = TypedDict(
    'EnvelopePoint',
    {
        'xi': List[int],
        'l1': int,
        'log_l1': float,
        'abs_p': float,
        'log_abs_p': float,  # certified when it came from an enclosure
        'loss': float  # m - log|p| / log|xi|
    }
)

ShellSummary = TypedDict(
    'ShellSummary',
    {
        'shell': int,  # k for the dyadic shell [2^k, 2^(k+1))
        'lo': int,
        'hi': int,  # clipped to the window radius
        'points': int,
        'nonzero': int,
        'max_loss': Optional[float],
        'witness': Optional[EnvelopePoint]
    }
)

ZeroCensus = TypedDict(
    'ZeroCensus',
    {
        'dimension': int,
        'radius': int,
        'radii': List[int],  # R/4, R/2, R
        'counts': List[int],  # nonzero zeros inside each radius
        'total': int,
        'zeros': List[List[int]],  # first ZERO_CAP zeros in scan order
        'capped': bool,
        'undecided': List[List[int]],
        'verdict': str  # OnlyOrigin | FiniteSuspected | GrowingSuspected
    }
)

LowerBoundCertificate = TypedDict(
    'LowerBoundCertificate',
    {
        'r': float,
        'radius': int,
        'K': Optional[float],
        'K_exact': Optional[str],  # rational or quadratic surd
        'argmin': Optional[List[int]],
        'violator': Optional[List[int]],  # first nonzero xi with p(xi) = 0
        'zeros_excluded': int,
        'degenerate': bool,
        'asymptotic': bool  # always false: K holds on the window only
    }
)

Prediction = TypedDict(
    'Prediction',
    {
        'ind_gh': str,
        'ind_gs': str,
        'basis': str,
        'consistent': Optional[bool]  # ind_gs <= ind_gh when both known
    }
)

IndexReport = TypedDict(
    'IndexReport',
    {
        'symbol': str,
        'dimension': int,
        'order': float,
        'radius': int,
        'tail_shells': int,
        'shells': List[ShellSummary],
        'r_gs': Optional[float],
        'r_gh': Optional[float],
        'gh_verdict': str,  # 'finite' | 'infinite-heuristic'
        'witnesses': List[EnvelopePoint],
        'zero_census': ZeroCensus,
        'certificate': Optional[LowerBoundCertificate],
        'ellipticity': List[Tuple[int, float]],
        'undecided': List[List[int]],
        'precision_dominated': bool,
        'prediction': Prediction,
        'notes': List[str]
    }
)

WitnessReport = TypedDict(
    'WitnessReport',
    {
        'kind': str,  # 'zero-sequence' | 'small-symbol'
        'flavor': str,  # 'gh' | 'gs' | 'closed-range'
        'symbol': str,
        'r': float,
        'count': int,
        'frequencies': List[List[int]],
        'abs_p': List[float],
        'search_radius': int,
        'norms': Dict[str, str],
        'bound': str,
        'bound_holds': Optional[bool],  # None for closed-range
        'tails': List[str],
        'tails_decreasing': Optional[bool]  # closed-range only
    }
)

ContinuedFraction = TypedDict(
    'ContinuedFraction',
    {
        'alpha': str,
        'partial_quotients': List[int],
        'convergents': List[Tuple[int, int]],
        'certified_depth': int,
        'status': str,  # 'Complete' | 'DepthReached' | 'TruncationLimited'
        'precision_bits': int
    }
)

MuEstimate = TypedDict(
    'MuEstimate',
    {
        'alpha': str,
        'depth': int,
        'mu_k': List[float],
        'mu_hat': Optional[float],
        'status': str,  # Converged | GrowingUnbounded | TruncationLimited
        'certified_depth': int,
        'records_climbing': bool,  # advisory, never sets status
        'registry': Optional[Dict[str, str]]
    }
)

RegistryEntry = TypedDict(
    'RegistryEntry',
    {
        'name': str,
        'mu_lo': str,
        'mu_hi': str,
        'exact': bool,
        'citation': str
    }
)

WaveClassification = TypedDict(
    'WaveClassification',
    {
        'n': int,
        'eta2': str,
        'a': int,
        'b': int,
        'c': int,
        'd': int,
        'verdict': str,  # 'NoNonzeroZeros' | 'InfiniteZeros' | 'RationalEta'
        'ind_gh': str,
        'ind_gs': str,
        'family': str,
        'zeros': List[List[int]],
        'obstruction': Optional[str],
        'notes': List[str]
    }
)

NormReport = TypedDict(
    'NormReport',
    {
        'k': float,
        'r': float,
        'order': float,
        'f_norm_sq': str,
        'u_norm_sq': str,
        'ratio': Optional[float],  # ||u|| / ||f||
        'K': Optional[float],
        'bound': Optional[float],
        'bound_holds': Optional[bool]
    }
)
