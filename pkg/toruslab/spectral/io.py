import json

from fractions import Fraction

from toruslab import utils
from toruslab.errors import DimensionMismatch, ParseError
from toruslab.lattice import Frequency
from toruslab.reals.surd import ExactComplex, Surd
from toruslab.spectral.distribution import Coefficient, SpectralDistribution

from typing import Any, Dict, IO, List, Optional, Union


def _exact_part(raw: Any, where: int) -> Surd:
    if isinstance(raw, bool):
        raise ParseError('coefficient parts must be strings', where)
    if isinstance(raw, int):
        return Surd(raw)
    if not isinstance(raw, str):
        raise ParseError(
            'exact coefficient parts are "p/q" or "r+q*sqrt(d)" strings',
            where)
    try:
        return Surd(Fraction(raw.strip()))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return Surd.parse(raw)
    except ValueError:
        raise ParseError('bad exact number {!r}'.format(raw), where)


def _float_part(raw: Any, where: int) -> float:
    if isinstance(raw, bool):
        raise ParseError('coefficient parts must be numbers', where)
    try:
        return float(raw)
    except (TypeError, ValueError):
        raise ParseError('bad decimal number {!r}'.format(raw), where)


def _frequency(raw: Any, n: int, where: int) -> Frequency:
    if not isinstance(raw, list) or \
            not all(isinstance(c, int) and not isinstance(c, bool)
                    for c in raw):
        raise ParseError('"xi" must be a list of integers', where)
    if len(raw) != n:
        raise DimensionMismatch(
            'entry {}: frequency {} on T^{}'.format(where, raw, n))
    return tuple(raw)


def load_distribution(data: Any, expect: Optional[int] = None) \
        -> SpectralDistribution:
    '''
    Builds a distribution from its JSON object. Entries are
    order-insensitive; a repeated frequency is an error.

    Args:
        data   (dict): {"n": int, "coeffs": [{"xi", "re", "im"}, ...]}
                       with optional "exact": false for float parts
        expect (int): the torus dimension the caller needs, if any
    Returns:
        (SpectralDistribution): the distribution
    '''
    if not isinstance(data, dict):
        raise ParseError('a distribution is a JSON object', 0)
    n = data.get('n')
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError('"n" must be a positive integer', 0)
    if expect is not None and n != expect:
        raise DimensionMismatch(
            'distribution on T^{}, expected T^{}'.format(n, expect))
    entries = data.get('coeffs')
    if not isinstance(entries, list):
        raise ParseError('"coeffs" must be a list', 0)
    exact = data.get('exact', True)
    if not isinstance(exact, bool):
        raise ParseError('"exact" must be true or false', 0)

    coeffs: Dict[Frequency, Coefficient] = {}
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or 'xi' not in entry:
            raise ParseError('every coefficient needs "xi"', i)
        xi = _frequency(entry['xi'], n, i)
        if xi in coeffs:
            raise ParseError('frequency {} given twice'.format(list(xi)), i)
        re = entry.get('re', '0')
        im = entry.get('im', '0')
        if exact:
            try:
                coeffs[xi] = ExactComplex(_exact_part(re, i),
                                          _exact_part(im, i))
            except ValueError as e:
                if isinstance(e, ParseError):
                    raise
                raise ParseError(str(e), i)
        else:
            coeffs[xi] = complex(_float_part(re, i), _float_part(im, i))
    return SpectralDistribution(n, coeffs)


def read_distribution(source: Union[str, IO[str]],
                      expect: Optional[int] = None) -> SpectralDistribution:
    if isinstance(source, str):
        with open(source) as f:
            return read_distribution(f, expect)
    try:
        data = json.load(source)
    except json.JSONDecodeError as e:
        raise ParseError('not JSON: {}'.format(e.msg), e.pos)
    return load_distribution(data, expect)


def dump_distribution(u: SpectralDistribution) -> Dict[str, Any]:
    '''The JSON object for u, entries in shell order'''
    entries: List[Dict[str, Any]] = []
    for xi, c in u.items():
        if u.is_exact:
            assert isinstance(c, ExactComplex)
            re, im = str(c.re), str(c.im)
        else:
            z = complex(c)
            re, im = utils.fmt_real(z.real), utils.fmt_real(z.imag)
        entries.append({'xi': list(xi), 're': re, 'im': im})
    out: Dict[str, Any] = {'n': u.dimension, 'coeffs': entries}
    if not u.is_exact:
        out['exact'] = False
    return out


def write_distribution(u: SpectralDistribution,
                       out: Union[str, IO[str]]) -> None:
    if isinstance(out, str):
        with open(out, 'w') as f:
            write_distribution(u, f)
        return
    out.write(utils.dumps(dump_distribution(u)))
