from toruslab.errors import UnknownClass
from toruslab.reals import certified
from toruslab.reals.certified import CertifiedReal
from toruslab.toruslab_types import RegistryEntry

from typing import Dict

INFINITY = 'inf'

# Known irrationality measures. Champernowne is per base and built on
# demand; everything else is a fixed entry. Citations quote the stated
# results, in ASCII.
MU_REGISTRY: Dict[str, RegistryEntry] = {
    'rational': {
        'name': 'rational',
        'mu_lo': '1',
        'mu_hi': '1',
        'exact': True,
        'citation': '"mu(alpha) = 1 when alpha is rational"'
    },
    'algebraic': {
        'name': 'algebraic',
        'mu_lo': '2',
        'mu_hi': '2',
        'exact': True,
        'citation': ('"if alpha is an algebraic irrational number, '
                     'Roth\'s theorem implies that mu(alpha) = 2"; '
                     'Roth (1955): "there exists a positive constant '
                     'A = A(alpha, eps)"')
    },
    'e': {
        'name': 'e',
        'mu_lo': '2',
        'mu_hi': '2',
        'exact': True,
        'citation': ('"The base of the natural logarithm e satisfies '
                     'mu(e) = 2"')
    },
    'liouville': {
        'name': 'liouville',
        'mu_lo': INFINITY,
        'mu_hi': INFINITY,
        'exact': True,
        'citation': ('"if alpha is a Liouville number, then '
                     'mu(alpha) = infinity"')
    },
    'pi': {
        'name': 'pi',
        'mu_lo': '2',
        'mu_hi': '7.6063',
        'exact': False,
        'citation': ('"for pi, it is known that 2 <= mu(pi) <= 7.6063, '
                     'although the exact value remains unknown"')
    },
    'gamma(1/4)': {
        'name': 'gamma(1/4)',
        'mu_lo': '2',
        'mu_hi': '1e330',
        'exact': False,
        'citation': ('Waldschmidt (2008): '
                     '"mu(Gamma(1/4)) <= 10^330"')
    }
}

# carried as a cross-check note only
SQRT_NOTE = 'mu(alpha^(1/2)) <= 2 mu(alpha)'


def champernowne_entry(base: int) -> RegistryEntry:
    return {
        'name': 'champernowne:{}'.format(base),
        'mu_lo': str(base),
        'mu_hi': str(base),
        'exact': True,
        'citation': ('Amou (1991): "the irrationality measure of the '
                     'Champernowne constant C_b in base b >= 2 is '
                     'exactly b"')
    }


def registry_lookup_name(name: str) -> RegistryEntry:
    if name.startswith('champernowne:'):
        return champernowne_entry(int(name.partition(':')[2]))
    entry = MU_REGISTRY.get(name)
    if entry is None:
        raise UnknownClass('no registered measure for {!r}'.format(name))
    return entry


def registry_lookup(alpha: CertifiedReal) -> RegistryEntry:
    '''
    Args:
        alpha (CertifiedReal): a DSL real
    Returns:
        (RegistryEntry): the known measure of its class, with citation
    '''
    kind = alpha.kind
    if kind in (certified.RATIONAL, certified.DECIMAL):
        return MU_REGISTRY['rational']
    if kind in (certified.SQRT, certified.ALGEBRAIC):
        if alpha.degree == 1:
            return MU_REGISTRY['rational']
        return MU_REGISTRY['algebraic']
    if kind == certified.EULER_E:
        return MU_REGISTRY['e']
    if kind == certified.LIOUVILLE:
        return MU_REGISTRY['liouville']
    if kind == certified.CHAMPERNOWNE:
        return champernowne_entry(alpha.spec.args[0])
    raise UnknownClass('no registered measure for {}'.format(alpha.text))
