import json
import math

from fractions import Fraction

from toruslab.reals.certified import CertifiedReal
from toruslab.reals.surd import ExactComplex, Surd

from typing import Any


def fmt_real(x: float) -> str:
    '''A float as a decimal string with 17 significant digits'''
    if math.isinf(x):
        return 'inf' if x > 0 else '-inf'
    if math.isnan(x):
        return 'nan'
    return '%.17g' % x


def jsonify(obj: Any) -> Any:
    '''
    Turns a report into something json.dumps takes as is. Floats become
    17-digit strings so output is byte-stable, exact numbers become
    their text form and tuples become lists.
    '''
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return fmt_real(obj)
    if isinstance(obj, (Fraction, Surd)):
        return str(obj)
    if isinstance(obj, ExactComplex):
        return {'re': str(obj.re), 'im': str(obj.im)}
    if isinstance(obj, complex):
        return {'re': fmt_real(obj.real), 'im': fmt_real(obj.imag)}
    if isinstance(obj, CertifiedReal):
        return obj.text
    if isinstance(obj, dict):
        return {str(k): jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(v) for v in obj]
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(jsonify(obj), sort_keys=True, indent=2) + '\n'
