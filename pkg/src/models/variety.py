"""Desk-scale algebraic projective varieties: points, linear spans and rational curves"""
import re
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Any, Dict, List, Tuple

import sympy
from sympy import QQ, Matrix, Poly

from ..errors import ParseError, UnsupportedVarietyError

S = sympy.Symbol("s")

_VECTOR = re.compile(r"\(([^()]*)\)")


class VarietyKind(str, Enum):
    POINT = "point"
    SPAN = "span"
    PARAM = "param"


def _rational(token: str) -> Any:
    try:
        return QQ.from_sympy(sympy.Rational(token))
    except (TypeError, ValueError, sympy.SympifyError):
        raise ParseError(f"expected a rational number, got {token!r}")


@dataclass(frozen=True)
class VarietySpec:
    """A variety V in P(n), irreducible over the constants.

    point: one coordinate tuple; span: the spanning vectors; param: one
    univariate polynomial in s per coordinate, as ascending coefficient tuples.
    """
    kind: VarietyKind
    data: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        if not self.data:
            raise UnsupportedVarietyError(f"a {self.kind.value} needs data")
        if self.kind == VarietyKind.POINT:
            if len(self.data) != 1 or not any(self.data[0]):
                raise UnsupportedVarietyError("a point needs one nonzero coordinate tuple")
        elif self.kind == VarietyKind.SPAN:
            if len({len(v) for v in self.data}) != 1:
                raise UnsupportedVarietyError("spanning vectors must have equal length")
            if Matrix(self.matrix()).rank() != len(self.data):
                raise UnsupportedVarietyError("spanning vectors must be linearly independent")
        else:
            if len(self.data) < 2:
                raise UnsupportedVarietyError("a parametrized curve needs at least two coordinates")
            polys = self.polys()
            if all(p.degree() <= 0 for p in polys):
                raise UnsupportedVarietyError("the parametrization is constant")
            if reduce(lambda a, b: a.gcd(b), [p for p in polys if not p.is_zero]).degree() > 0:
                raise UnsupportedVarietyError("the coordinate polynomials must have gcd 1")

    @property
    def arity(self) -> int:
        """n + 1"""
        return len(self.data) if self.kind == VarietyKind.PARAM else len(self.data[0])

    @property
    def n(self) -> int:
        return self.arity - 1

    @property
    def dim(self) -> int:
        if self.kind == VarietyKind.POINT:
            return 0
        if self.kind == VarietyKind.SPAN:
            return len(self.data) - 1
        return 1

    def matrix(self) -> List[List[sympy.Rational]]:
        return [[QQ.to_sympy(c) for c in v] for v in self.data]

    def polys(self) -> List[Poly]:
        """γ_j(s) as sympy polynomials"""
        return [Poly.from_list(list(reversed(coefficients)) or [0], S, domain=QQ)
                for coefficients in self.data]

    @property
    def param_degree(self) -> int:
        return max(p.degree() for p in self.polys())

    @classmethod
    def parse(cls, text: str) -> 'VarietySpec':
        """`point 1 2 3` | `span (1 0 0) (0 1 0)` | `param 1, s, s^2`"""
        keyword, _, rest = text.strip().partition(" ")
        keyword = keyword.lower()
        if keyword == VarietyKind.POINT.value:
            coords = tuple(_rational(token) for token in rest.split())
            return cls(VarietyKind.POINT, (coords,))
        if keyword == VarietyKind.SPAN.value:
            vectors = _VECTOR.findall(rest)
            if not vectors or _VECTOR.sub("", rest).strip():
                raise ParseError(f"malformed span {rest!r}; expected vectors like (1 0 0)")
            return cls(VarietyKind.SPAN, tuple(tuple(_rational(t) for t in v.replace(",", " ").split())
                                               for v in vectors))
        if keyword == VarietyKind.PARAM.value:
            return cls(VarietyKind.PARAM, tuple(_parse_coordinate(piece) for piece in rest.split(",")))
        raise ParseError(f"unknown variety kind {keyword!r}; expected point, span or param")

    def render(self) -> str:
        if self.kind == VarietyKind.POINT:
            return "point " + " ".join(str(QQ.to_sympy(c)) for c in self.data[0])
        if self.kind == VarietyKind.SPAN:
            return "span " + " ".join("(" + " ".join(str(QQ.to_sympy(c)) for c in v) + ")" for v in self.data)
        return "param " + ", ".join(str(p.as_expr()).replace("**", "^") for p in self.polys())

    def to_dict(self) -> Dict[str, Any]:
        return {'variety': self.render(), 'kind': self.kind.value, 'n': self.n, 'dim': self.dim}


def _parse_coordinate(text: str) -> Tuple[Any, ...]:
    """Ascending coefficients of one coordinate polynomial in s"""
    from ..algebra.parser import parse
    from .ring import RingDescriptor

    ring = RingDescriptor(param_count=1, constant_params=frozenset({0}))
    p = parse(text, ring)
    coefficients: Dict[int, Any] = {}
    for m, c in p.terms.items():
        degree = sum(e for _, e in m)
        coefficients[degree] = c
    top = max(coefficients, default=-1)
    return tuple(coefficients.get(k, QQ.zero) for k in range(top + 1))
