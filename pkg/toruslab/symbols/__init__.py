from toruslab.symbols.base import (  # noqa: F401
    AbsLower, Symbol, abs_lower_exact, evaluate, transpose)
from toruslab.symbols.parser import parse_real, parse_symbol  # noqa: F401
