"""Ground fields: Q with the zero derivation, or Q(x) with d/dx"""
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Tuple

import sympy
from sympy import QQ, ZZ

from ..errors import GroundElementError

X = sympy.Symbol("x")
QQX = QQ.frac_field(X)


class GroundMode(str, Enum):
    Q = "Q"
    QX = "Qx"

    @classmethod
    def parse(cls, text: str) -> 'GroundMode':
        normalized = text.strip().lower()
        if normalized == "q":
            return cls.Q
        if normalized in ("qx", "q(x)"):
            return cls.QX
        raise ValueError(f"unknown ground field {text!r}; expected Q or Qx")


def _render_rational(value: Any) -> str:
    numerator, denominator = QQ.numer(value), QQ.denom(value)
    if denominator == 1:
        return str(numerator)
    return f"({numerator}/{denominator})"


def render_univariate(coefficients: Dict[int, Any], ascending: bool = False) -> str:
    """Render Σ c_k x^k with rational c_k; signs are folded into ' - ' separators"""
    if not coefficients:
        return "0"
    pieces = []
    for exponent in sorted(coefficients, reverse=not ascending):
        coefficient = coefficients[exponent]
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        if exponent == 0:
            body = _render_rational(magnitude)
        else:
            power = "x" if exponent == 1 else f"x^{exponent}"
            body = power if magnitude == 1 else f"{_render_rational(magnitude)}*{power}"
        pieces.append((negative, body))
    first_negative, first_body = pieces[0]
    text = ("-" if first_negative else "") + first_body
    for negative, body in pieces[1:]:
        text += (" - " if negative else " + ") + body
    return text


class GroundField:
    """Coefficient field of a differential polynomial ring"""

    def __init__(self, mode: GroundMode):
        self.mode = mode
        self.domain = QQ if mode == GroundMode.Q else QQX
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __repr__(self) -> str:
        return f"GroundField({self.mode.value})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundField) and other.mode == self.mode

    def __hash__(self) -> int:
        return hash(self.mode)

    def rational(self, numerator: int, denominator: int = 1) -> Any:
        return self.domain.convert_from(QQ(numerator, denominator), QQ)

    def convert(self, value: Any) -> Any:
        """Coerce ints, QQ elements and elements of the other ground field"""
        if isinstance(value, int):
            return self.rational(value)
        if ZZ.of_type(value):
            return self.domain.convert_from(value, ZZ)
        if self.domain.of_type(value):
            return value
        if QQ.of_type(value):
            return self.domain.convert_from(value, QQ)
        if QQX.of_type(value):
            if self.mode == GroundMode.QX:
                return value
            if not self.is_constant_in(value, QQX):
                raise GroundElementError("a coefficient depending on x cannot live in a field=Q ring")
            return QQ.convert_from(value.numer.LC, QQ) / QQ.convert_from(value.denom.LC, QQ)
        raise GroundElementError(f"cannot convert {value!r} to a ground element")

    def generator(self) -> Any:
        if self.mode != GroundMode.QX:
            raise GroundElementError("the ground variable x is only available with field=Qx")
        return self.domain.from_sympy(X)

    @staticmethod
    def is_constant_in(value: Any, domain: Any) -> bool:
        if domain is QQ:
            return True
        return value.numer.is_ground and value.denom.is_ground

    def is_constant(self, value: Any) -> bool:
        return self.is_constant_in(value, self.domain)

    def derivative(self, value: Any) -> Any:
        if self.mode == GroundMode.Q:
            return self.zero
        return value.diff(self.domain.field.gens[0])

    def numerator_denominator(self, value: Any) -> Tuple[Dict[int, Any], Dict[int, Any]]:
        """Coefficient maps of a reduced fraction with monic denominator"""
        if self.mode == GroundMode.Q:
            return ({0: value} if value else {}), {0: QQ.one}
        numer, denom = value.numer, value.denom
        lead = QQ.convert_from(denom.LC, QQ)
        numerator = {monom[0]: QQ.convert_from(c, QQ) / lead for monom, c in numer.items()}
        denominator = {monom[0]: QQ.convert_from(c, QQ) / lead for monom, c in denom.items()}
        return numerator, denominator

    def sign(self, value: Any) -> int:
        """Sign of the leading rational coefficient of the numerator"""
        numerator, _ = self.numerator_denominator(value)
        if not numerator:
            return 0
        return 1 if numerator[max(numerator)] > 0 else -1

    def rational_part(self, value: Any) -> Tuple[int, int]:
        """(integer numerator content, denominator lcm) of the numerator coefficients"""
        numerator, denominator = self.numerator_denominator(value)
        if any(k != 0 for k in denominator):
            return 1, 1
        scale = QQ.one / denominator[0]
        values = [c * scale for c in numerator.values()]
        content = ZZ.zero
        common = ZZ.one
        for c in values:
            content = ZZ.gcd(content, QQ.numer(c))
            common = ZZ.lcm(common, QQ.denom(c))
        return int(content), int(common)

    def is_product_safe(self, value: Any) -> bool:
        numerator, denominator = self.numerator_denominator(value)
        return len(numerator) <= 1 and len(denominator) == 1 and 0 in denominator

    def render(self, value: Any) -> str:
        numerator, denominator = self.numerator_denominator(value)
        top = render_univariate(numerator)
        if len(denominator) == 1 and 0 in denominator:
            return top
        bottom = render_univariate(denominator)
        if len(numerator) > 1:
            top = f"({top})"
        return f"({top}/({bottom}))"

    def render_factor(self, value: Any) -> str:
        """Rendering safe to use as one factor of a product"""
        numerator, denominator = self.numerator_denominator(value)
        text = self.render(value)
        if len(numerator) > 1 and len(denominator) == 1 and 0 in denominator:
            return f"({text})"
        return text

    def to_sympy(self, value: Any) -> Any:
        return self.domain.to_sympy(value)


@lru_cache(maxsize=None)
def ground_field(mode: GroundMode) -> GroundField:
    return GroundField(mode)
