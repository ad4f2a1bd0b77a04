import re

from fractions import Fraction

from toruslab.errors import ParseError
from toruslab.reals import certified
from toruslab.reals.certified import CertifiedReal
from toruslab.symbols.base import Symbol
from toruslab.symbols.builtins import (
    Bessel, Heat, Laplacian, LogDamped, PartialDerivative, VectorField, Wave)

from typing import List, Optional, Pattern, Tuple

_INT = re.compile(r'\d+')
_SIGNED_INT = re.compile(r'[-+]?\d+')
_DECIMAL = re.compile(r'[-+]?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?')
_TERM = re.compile(r'(?P<coef>\d+)?(?P<star>\*)?(?P<x>x(?:\^(?P<pow>\d+))?)?')


class _Cursor:
    '''Position-tracking reader over the symbol text'''

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(message, self.pos if pos is None else pos)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        return self.text.startswith(literal, self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            raise self.error('expected {!r}'.format(literal))

    def match(self, pattern: Pattern, what: str) -> str:
        m = pattern.match(self.text, self.pos)
        if m is None or m.end() == self.pos:
            raise self.error('expected {}'.format(what))
        self.pos = m.end()
        return m.group(0)

    def positive_int(self, what: str = 'a positive integer') -> int:
        start = self.pos
        value = int(self.match(_INT, what))
        if value < 1:
            raise self.error('{} must be positive'.format(what), start)
        return value

    def rational(self) -> Fraction:
        num = int(self.match(_SIGNED_INT, 'an integer'))
        if self.accept('/'):
            start = self.pos
            den = int(self.match(_INT, 'a denominator'))
            if den == 0:
                raise self.error('zero denominator', start)
            return Fraction(num, den)
        return Fraction(num)


def _parse_poly(cur: _Cursor) -> List[int]:
    '''Integer polynomial in x, e.g. "x^3-2" or "2*x^2-x-1"'''
    start = cur.pos
    terms: List[Tuple[int, int]] = []
    first = True
    while True:
        sign = 1
        if cur.accept('-'):
            sign = -1
        elif not cur.accept('+') and not first:
            break
        first = False
        m = _TERM.match(cur.text, cur.pos)
        if m is None or m.end() == cur.pos:
            raise cur.error('expected a polynomial term')
        if m.group('star') and not (m.group('coef') and m.group('x')):
            raise cur.error('misplaced "*"')
        coef = int(m.group('coef')) if m.group('coef') else 1
        if m.group('x'):
            power = int(m.group('pow')) if m.group('pow') else 1
        else:
            power = 0
        terms.append((power, sign * coef))
        cur.pos = m.end()
    if not terms:
        raise cur.error('empty polynomial', start)
    degree = max(p for p, _ in terms)
    coeffs = [0] * (degree + 1)
    for power, c in terms:
        coeffs[degree - power] += c
    return coeffs


def _parse_real(cur: _Cursor) -> CertifiedReal:
    start = cur.pos
    if cur.accept('rat:'):
        num = int(cur.match(_SIGNED_INT, 'an integer'))
        cur.expect('/')
        den_pos = cur.pos
        den = int(cur.match(_INT, 'a denominator'))
        if den == 0:
            raise cur.error('zero denominator', den_pos)
        return certified.rational(num, den, cur.text[start:cur.pos])
    if cur.accept('sqrt:'):
        radicand = cur.rational()
        return certified.sqrt(radicand, cur.text[start:cur.pos])
    if cur.accept('alg:'):
        coeffs = _parse_poly(cur)
        cur.expect(',[')
        lo = cur.rational()
        cur.expect(',')
        hi = cur.rational()
        cur.expect(']')
        return certified.algebraic(coeffs, lo, hi, cur.text[start:cur.pos])
    if cur.accept('dec:'):
        digits = cur.match(_DECIMAL, 'decimal digits')
        return certified.decimal(digits, cur.text[start:cur.pos])
    if cur.accept('liouville:'):
        return certified.liouville(cur.positive_int('a base'))
    if cur.accept('champernowne:'):
        return certified.champernowne(cur.positive_int('a base'))
    if cur.accept('e'):
        return certified.euler_e()
    raise cur.error('unknown real')


def _finish(cur: _Cursor) -> None:
    if not cur.at_end():
        raise cur.error('unexpected trailing input')


def parse_real(text: str) -> CertifiedReal:
    '''A bare real, as accepted after "alpha=" or "eta="'''
    cur = _Cursor(text)
    out = _parse_real(cur)
    _finish(cur)
    return out


def parse_symbol(text: str) -> Symbol:
    '''
    Args:
        text (str): symbol in the DSL, e.g. "vf:alpha=sqrt:2"
    Returns:
        (Symbol): the multiplier with its intrinsic order
    Raises:
        ParseError: malformed text, with the offending position
        InvalidCoefficient: well-formed but invalid coefficient
    '''
    cur = _Cursor(text)
    sym: Symbol
    if cur.accept('laplacian:'):
        sym = Laplacian(cur.positive_int('a dimension'))
    elif cur.accept('heat:'):
        sym = Heat(cur.positive_int('a dimension'))
    elif cur.accept('dx:'):
        sym = PartialDerivative(cur.positive_int('an axis'))
    elif cur.accept('vf:alpha='):
        alpha = _parse_real(cur)
        alpha_im = Fraction(0)
        if cur.accept('+i*'):
            alpha_im = cur.rational()
        sym = VectorField(alpha, alpha_im, text)
    elif cur.accept('wave2d:eta='):
        sym = Wave(1, eta=_parse_real(cur), text=text)
    elif cur.accept('wave:n='):
        n = cur.positive_int('a dimension')
        if cur.accept(',eta2='):
            eta2 = cur.rational()
            if eta2 <= 0:
                raise cur.error('eta^2 must be positive')
            sym = Wave(n, eta2=eta2, text=text)
        elif cur.accept(',eta='):
            sym = Wave(n, eta=_parse_real(cur), text=text)
        else:
            raise cur.error('expected ",eta2=" or ",eta="')
    elif cur.accept('bessel:s='):
        s = Fraction(cur.match(_DECIMAL, 'a decimal'))
        n = 1
        if cur.accept(',n='):
            n = cur.positive_int('a dimension')
        sym = Bessel(s, n, text)
    elif cur.accept('logdamp'):
        sym = LogDamped()
    else:
        raise cur.error('unknown symbol')
    _finish(cur)
    return sym
