import sys
import logging

from argparse import ArgumentParser, Namespace
from fractions import Fraction

from toruslab import lattice, precision, utils
from toruslab.analysis import census, indices, wave, witness
from toruslab.diophantine import continued, measure
from toruslab.errors import ConfigError, ParseError, ToruslabError
from toruslab.reals import certified
from toruslab.spectral import io, solver
from toruslab.symbols.parser import parse_real, parse_symbol

from typing import Any, Dict, List, NoReturn, Optional, TextIO

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PRECISION = 2
EXIT_INCOMPATIBLE = 3

KINDS = ('gh', 'gs', 'closed-range')


def _common(parser: ArgumentParser) -> None:
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG on stderr')
    parser.add_argument('--out', help='write the JSON report here')
    parser.add_argument('--precision', type=int,
                        help='certified precision cap in bits')
    parser.add_argument('--threads', type=int,
                        help='worker processes for window scans')
    parser.add_argument('--tail-shells', type=int,
                        help='dyadic shells used by the tail estimate')


class _Parser(ArgumentParser):
    '''Turns usage errors into ConfigError instead of exiting with 2'''

    def error(self, message: str) -> NoReturn:
        raise ConfigError('{}: {}'.format(self.prog, message))


def parse_options(args: List[str]) -> Namespace:
    parser = _Parser(
        prog='toruslab',
        description='Loss of derivatives for Fourier multipliers on tori')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('analyze', help='empirical GH / GS indices')
    _common(p)
    p.add_argument('--symbol', required=True)
    p.add_argument('--radius', type=int, default=512)
    p.add_argument('--r', type=float, help='also certify K for this loss')
    p.add_argument('--envelope', help='write the envelope CSV here')

    p = sub.add_parser('solve', help='solve p(D)u = f')
    _common(p)
    p.add_argument('--symbol', required=True)
    p.add_argument('--rhs', required=True, help='distribution JSON file')
    p.add_argument('--k', type=float, default=0.0)
    p.add_argument('--r', type=float, default=0.0)
    p.add_argument('--solution', help='write u as distribution JSON here')

    p = sub.add_parser('witness', help='GH / GS / closed-range witnesses')
    _common(p)
    p.add_argument('--symbol', required=True)
    p.add_argument('--r', type=float, required=True)
    p.add_argument('--k', type=float, default=0.0)
    p.add_argument('--count', type=int, default=5)
    p.add_argument('--kind', choices=KINDS, default='gh')
    p.add_argument('--budget', type=int, help='largest search radius')

    p = sub.add_parser('zeros', help='zero census of a window')
    _common(p)
    p.add_argument('--symbol', required=True)
    p.add_argument('--radius', type=int, default=64)

    p = sub.add_parser('wave-classify', help='zeros of the rational wave')
    _common(p)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--eta2', required=True, help='eta^2 as a/b')
    p.add_argument('--count', type=int, default=5)

    p = sub.add_parser('dio', help='continued fractions and mu estimates')
    _common(p)
    p.add_argument('--alpha', help='a real in the symbol DSL')
    p.add_argument('--depth', type=int, default=20)
    p.add_argument('--sample', type=int,
                   help='estimate mu for this many random decimals')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--digits', type=int, default=60)

    return parser.parse_args(args)


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level,
        format='%(asctime)s %(name)s %(levelname)s %(message)s')


def _emit(doc: Any, out: Optional[str], stdout: TextIO) -> None:
    text = utils.dumps(doc)
    if out:
        with open(out, 'w') as f:
            f.write(text)
    else:
        stdout.write(text)


def cmd_analyze(opts: Namespace) -> Dict[str, Any]:
    sym = parse_symbol(opts.symbol)
    if opts.radius < indices.MIN_RADIUS:
        raise ConfigError(
            'analyze needs --radius >= {}'.format(indices.MIN_RADIUS))
    w = lattice.make_window(sym.dimension, opts.radius)
    report = indices.estimate_indices(sym, w, opts.r, opts.threads)
    if opts.envelope:
        indices.write_envelope(report, opts.envelope)
    return dict(report)


def cmd_solve(opts: Namespace) -> Dict[str, Any]:
    sym = parse_symbol(opts.symbol)
    f = io.read_distribution(opts.rhs, sym.dimension)
    u, report = solver.solve(sym, f, opts.k, opts.r)
    if opts.solution:
        io.write_distribution(u, opts.solution)
    return {'u': io.dump_distribution(u), 'norms': report}


def cmd_witness(opts: Namespace) -> Dict[str, Any]:
    sym = parse_symbol(opts.symbol)
    if opts.kind == 'gh':
        report, u = witness.gh_witness(sym, opts.r, opts.count, opts.budget)
        return {'report': report, 'u': io.dump_distribution(u)}
    if opts.kind == 'gs':
        report, f = witness.gs_witness(sym, opts.r, opts.count, opts.budget)
        return {'report': report, 'f': io.dump_distribution(f)}
    report, us, f = witness.closed_range_witness(
        sym, opts.r, opts.k, opts.count, opts.budget)
    return {
        'report': report,
        'u': [io.dump_distribution(u) for u in us],
        'f': io.dump_distribution(f)}


def cmd_zeros(opts: Namespace) -> Dict[str, Any]:
    sym = parse_symbol(opts.symbol)
    w = lattice.make_window(sym.dimension, opts.radius)
    return dict(census.zero_scan(sym, w))


def cmd_wave_classify(opts: Namespace) -> Dict[str, Any]:
    try:
        eta2 = Fraction(opts.eta2)
    except (ValueError, ZeroDivisionError):
        raise ParseError('--eta2 must be a rational a/b', 0)
    return dict(wave.wave_classify(opts.n, eta2, opts.count))


def cmd_dio(opts: Namespace) -> Dict[str, Any]:
    if opts.sample is not None:
        return measure.sample_mu(
            opts.sample, opts.digits, opts.depth, opts.seed)
    if opts.alpha is None:
        raise ConfigError('dio needs --alpha or --sample')
    alpha = parse_real(opts.alpha)
    cf = continued.cf_expand(alpha, opts.depth)
    out: Dict[str, Any] = {
        'continued_fraction': cf,
        'determinant_holds': continued.determinant_holds(cf)}
    if not alpha.is_rational or alpha.kind == certified.DECIMAL:
        out['mu'] = measure.mu_estimate(alpha, opts.depth)
    return out


COMMANDS = {
    'analyze': cmd_analyze,
    'solve': cmd_solve,
    'witness': cmd_witness,
    'zeros': cmd_zeros,
    'wave-classify': cmd_wave_classify,
    'dio': cmd_dio,
}


def main(argv: Optional[List[str]] = None,
         stdout: TextIO = sys.stdout) -> int:
    '''
    Runs one subcommand and writes its JSON document.

    Returns:
        (int): 0 on success, 1 on bad input, 2 when precision or the
               search budget ran out, 3 when solve got an incompatible f
    '''
    try:
        opts = parse_options(sys.argv[1:] if argv is None else argv)
    except ConfigError as e:
        sys.stderr.write('error: {}\n'.format(e))
        _emit({'error': e.to_dict()}, None, stdout)
        return e.exit_code

    _configure_logging(opts.verbose)
    try:
        precision.init_precision(
            pmax=opts.precision,
            threads=opts.threads,
            tail_shells=opts.tail_shells)
        doc = COMMANDS[opts.command](opts)
    except ToruslabError as e:
        logger.error('%s: %s', type(e).__name__, e.message)
        sys.stderr.write('error: {}\n'.format(e))
        _emit({'error': e.to_dict()}, opts.out, stdout)
        return e.exit_code
    except (ValueError, OSError) as e:
        kind = 'OSError' if isinstance(e, OSError) else 'ValueError'
        logger.error('%s: %s', kind, e)
        sys.stderr.write('error: {}\n'.format(e))
        _emit({'error': {'type': kind, 'message': str(e)}},
              opts.out, stdout)
        return EXIT_ERROR

    _emit(doc, opts.out, stdout)
    if opts.command == 'analyze' and doc['precision_dominated']:
        return EXIT_PRECISION
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
