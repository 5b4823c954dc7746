"""Truncated power series in x and points made of them"""
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.rings import ring
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc

from ..errors import DivisionByZeroError, PrecisionError
from .ground import GroundMode, QQX, render_univariate

SERIES_RING, SERIES_X = ring("x", QQ)


class TruncatedSeries:
    """Σ_{k<precision} c_k x^k with the tail O(x^precision) unknown"""

    __slots__ = ("poly", "precision")

    def __init__(self, poly: Any, precision: int):
        if precision < 0:
            raise PrecisionError(f"series precision must be non-negative, got {precision}")
        self.precision = precision
        self.poly = rs_trunc(SERIES_RING(poly), SERIES_X, precision)

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Any], precision: int) -> 'TruncatedSeries':
        poly = SERIES_RING.zero
        for k, c in enumerate(coefficients):
            if c:
                poly += SERIES_RING(QQ.convert(c)) * SERIES_X ** k
        return cls(poly, precision)

    @classmethod
    def constant(cls, value: Any, precision: int) -> 'TruncatedSeries':
        return cls(SERIES_RING(QQ.convert(value)), precision)

    @classmethod
    def from_ground(cls, value: Any, mode: GroundMode, precision: int) -> 'TruncatedSeries':
        """Expand a ground element of Q or Q(x) at x = 0"""
        if mode == GroundMode.Q:
            return cls.constant(value, precision)
        numer = SERIES_RING.from_dict({k: QQ.convert(c) for k, c in value.numer.to_dict().items()})
        denom = SERIES_RING.from_dict({k: QQ.convert(c) for k, c in value.denom.to_dict().items()})
        return cls(numer, precision) / cls(denom, precision)

    def coefficient(self, k: int) -> Any:
        return self.poly.get((k,), QQ.zero)

    def coefficients(self) -> List[Any]:
        return [self.coefficient(k) for k in range(self.precision)]

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient; precision when all known coefficients vanish"""
        if not self.poly:
            return self.precision
        return min(monom[0] for monom in self.poly)

    def is_zero(self) -> bool:
        return not self.poly

    def _joint(self, other: Any) -> Tuple['TruncatedSeries', int]:
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.precision)
        return other, min(self.precision, other.precision)

    def __add__(self, other: Any) -> 'TruncatedSeries':
        other, precision = self._joint(other)
        return TruncatedSeries(self.poly + other.poly, precision)

    __radd__ = __add__

    def __neg__(self) -> 'TruncatedSeries':
        return TruncatedSeries(-self.poly, self.precision)

    def __sub__(self, other: Any) -> 'TruncatedSeries':
        other, precision = self._joint(other)
        return TruncatedSeries(self.poly - other.poly, precision)

    def __rsub__(self, other: Any) -> 'TruncatedSeries':
        return (-self) + other

    def __mul__(self, other: Any) -> 'TruncatedSeries':
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.poly * QQ.convert(other), self.precision)
        # a factor with valuation v only loses v coefficients of the other one
        precision = min(self.precision + other.valuation(), other.precision + self.valuation())
        return TruncatedSeries(rs_mul(self.poly, other.poly, SERIES_X, precision), precision)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'TruncatedSeries':
        result = TruncatedSeries.constant(1, self.precision)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other: Any) -> 'TruncatedSeries':
        """Division with valuation shift; the quotient loses as many coefficients as other's valuation"""
        if not isinstance(other, TruncatedSeries):
            value = QQ.convert(other)
            if not value:
                raise DivisionByZeroError("division of a series by zero")
            return TruncatedSeries(self.poly * (QQ.one / value), self.precision)
        shift = other.valuation()
        if shift >= other.precision:
            raise DivisionByZeroError("division by a series that vanishes to the available precision")
        if self.valuation() < shift:
            raise DivisionByZeroError("the quotient has a pole at x = 0")
        precision = min(self.precision, other.precision) - shift
        if precision <= 0:
            raise PrecisionError("not enough known coefficients to divide")
        numerator = _shift_down(self.poly, shift)
        denominator = _shift_down(other.poly, shift)
        inverse = rs_series_inversion(denominator, SERIES_X, precision)
        return TruncatedSeries(rs_mul(numerator, inverse, SERIES_X, precision), precision)

    def derivative(self) -> 'TruncatedSeries':
        if self.precision == 0:
            raise PrecisionError("cannot differentiate a series with no known coefficients")
        return TruncatedSeries(self.poly.diff(SERIES_X), self.precision - 1)

    def truncate(self, precision: int) -> 'TruncatedSeries':
        return TruncatedSeries(self.poly, min(precision, self.precision))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        precision = min(self.precision, other.precision)
        return rs_trunc(self.poly - other.poly, SERIES_X, precision) == SERIES_RING.zero

    def __hash__(self) -> int:
        return hash((self.precision, tuple(self.coefficients())))

    def render(self) -> str:
        coefficients = {k: c for k, c in enumerate(self.coefficients()) if c}
        tail = f"O(x^{self.precision})" if self.precision != 1 else "O(x)"
        if not coefficients:
            return tail
        return f"{render_univariate(coefficients, ascending=True)} + {tail}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.render()!r})"


def _shift_down(poly: Any, shift: int) -> Any:
    if not shift:
        return poly
    return SERIES_RING.from_dict({(monom[0] - shift,): c for monom, c in poly.items()})


@dataclass(frozen=True)
class DiffPoint:
    """A tuple of truncated power series sharing one precision"""
    coords: Tuple[TruncatedSeries, ...]
    precision: int

    def __post_init__(self):
        if any(c.precision != self.precision for c in self.coords):
            raise PrecisionError("all point coordinates must share one precision")

    @classmethod
    def of(cls, values: Sequence[Any], precision: int, mode: GroundMode = GroundMode.QX) -> 'DiffPoint':
        """Build a point from ground values, expanded at x = 0"""
        coords = []
        for value in values:
            if isinstance(value, TruncatedSeries):
                coords.append(value.truncate(precision))
            elif QQX.of_type(value):
                coords.append(TruncatedSeries.from_ground(value, GroundMode.QX, precision))
            else:
                coords.append(TruncatedSeries.constant(value, precision))
        if any(c.precision < precision for c in coords):
            raise PrecisionError("a coordinate is known to lower precision than requested")
        return cls(tuple(coords), precision)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> TruncatedSeries:
        return self.coords[index]

    def has_unit_coordinate(self) -> bool:
        """At least one coordinate has a nonzero constant term (projective representative)"""
        return any(c.coefficient(0) for c in self.coords)

    def render(self) -> List[str]:
        return [c.render() for c in self.coords]

    def to_dict(self) -> Dict[str, Any]:
        return {'precision': self.precision, 'coords': self.render()}
