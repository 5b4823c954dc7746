"""Evaluation of differential polynomials at truncated power series points"""
import logging
from typing import Any, Dict, Mapping

from ..errors import PrecisionError, RingMismatchError
from ..models.polynomial import DiffPolynomial
from ..models.series import DiffPoint, TruncatedSeries
from ..models.variables import BaseVar, DerivVar, Family

logger = logging.getLogger(__name__)

DEFAULT_GUARD = 8


def evaluate(p: DiffPolynomial, values: Mapping[BaseVar, TruncatedSeries], precision: int,
             guard: int = DEFAULT_GUARD) -> TruncatedSeries:
    """p with every base variable replaced by a series and derivatives by series derivatives"""
    order = max(p.order(), 0)
    if precision < order + guard:
        raise PrecisionError(f"precision {precision} is below order {order} plus guard {guard}",
                             precision=precision, order=order, guard=guard)
    result_precision = precision - order
    derivatives: Dict[DerivVar, TruncatedSeries] = {}
    for v in p.variables():
        if v.base not in values:
            raise RingMismatchError(f"no value supplied for {v.base.name}")
        series = values[v.base].truncate(precision)
        for _ in range(v.order):
            series = series.derivative()
        derivatives[v] = series

    total = TruncatedSeries.constant(0, result_precision)
    for m, c in p.terms.items():
        term = TruncatedSeries.from_ground(c, p.ring.field, result_precision)
        for v, e in m:
            term = term * derivatives[v] ** e
        total = total + term
    return total.truncate(result_precision)


def eval_at(p: DiffPolynomial, pt: DiffPoint, guard: int = DEFAULT_GUARD) -> TruncatedSeries:
    """Evaluate a polynomial in y0..yn at a point with n+1 coordinates"""
    for base in p.bases():
        if base.family != Family.Y:
            raise RingMismatchError(f"{base.name} is not a coordinate; only y variables can be evaluated at a point")
        if base.var_index >= len(pt):
            raise RingMismatchError(f"{base.name} exceeds the point arity {len(pt)}")
    values = {BaseVar(Family.Y, 0, j): coord for j, coord in enumerate(pt.coords)}
    return evaluate(p, values, pt.precision, guard)


def vanishes_at(p: DiffPolynomial, pt: DiffPoint, guard: int = DEFAULT_GUARD) -> bool:
    return eval_at(p, pt, guard).is_zero()


def derivative_commutes(p: DiffPolynomial, pt: DiffPoint, guard: int = DEFAULT_GUARD) -> bool:
    """eval(δp) equals the derivative of eval(p) up to the joint precision"""
    left = eval_at(p.differentiate(), pt, guard)
    right = eval_at(p, pt, guard).derivative()
    return left == right


def evaluate_constants(p: DiffPolynomial, values: Mapping[BaseVar, Any]) -> Any:
    """p at constant values: proper derivatives vanish and coefficients stay in the ground field"""
    ground = p.ring.ground
    total = ground.zero
    for m, c in p.terms.items():
        term = c
        for v, e in m:
            if v.base not in values:
                raise RingMismatchError(f"no value supplied for {v.base.name}")
            term = term * (ground.convert(values[v.base]) ** e if v.order == 0 else ground.zero)
        total = total + term
    return total
