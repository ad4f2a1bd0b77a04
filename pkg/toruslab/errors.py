from typing import Any, Dict, List, Optional, Sequence, Tuple


class ToruslabError(ValueError):
    '''
    Base class for every failure toruslab reports on purpose.
    Subclasses ValueError so callers that only know the library raises
    ValueError on bad input keep working.
    '''
    exit_code = 1

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message

    def to_dict(self) -> Dict[str, Any]:
        return {'type': type(self).__name__, 'message': self.message}


class ParseError(ToruslabError):
    def __init__(self, message: str, position: int = 0) -> None:
        super().__init__('{} (at position {})'.format(message, position))
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        d = super().to_dict()
        d['position'] = self.position
        return d


class InvalidCoefficient(ToruslabError):
    pass


class ConfigError(ToruslabError):
    pass


class UnknownClass(ToruslabError):
    pass


class DimensionMismatch(ToruslabError):
    pass


class CoordinateOverflow(ToruslabError):
    pass


class PrecisionExhausted(ToruslabError):
    exit_code = 2

    def __init__(
            self,
            message: str,
            frequency: Optional[Sequence[int]] = None) -> None:
        super().__init__(message)
        self.frequency = tuple(frequency) if frequency is not None else None

    def to_dict(self) -> Dict[str, Any]:
        d = super().to_dict()
        if self.frequency is not None:
            d['frequency'] = list(self.frequency)
        return d


class BudgetExhausted(ToruslabError):
    exit_code = 2

    def __init__(
            self,
            message: str,
            largest_radius: Optional[int] = None,
            found: Optional[List[Tuple[int, ...]]] = None) -> None:
        super().__init__(message)
        self.largest_radius = largest_radius
        self.found = found if found is not None else []

    def to_dict(self) -> Dict[str, Any]:
        d = super().to_dict()
        d['largest_radius'] = self.largest_radius
        d['found'] = [list(xi) for xi in self.found]
        return d


class Incompatible(ToruslabError):
    exit_code = 3

    def __init__(self, violations: List[Tuple[int, ...]]) -> None:
        super().__init__(
            'right-hand side is supported on {} zero(s) of the symbol: {}'
            .format(len(violations),
                    ' '.join(str(list(xi)) for xi in violations)))
        self.violations = violations

    def to_dict(self) -> Dict[str, Any]:
        d = super().to_dict()
        d['violations'] = [list(xi) for xi in self.violations]
        return d
