"""Conversions between DiffPolynomial and sympy Poly for elimination tasks"""
import logging
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy import QQ, Matrix, Poly

from ..errors import RingMismatchError
from ..models.polynomial import DiffPolynomial, ONE
from ..models.ring import RingDescriptor
from ..models.variables import DerivVar

logger = logging.getLogger(__name__)


def symbol_for(var: DerivVar) -> sympy.Symbol:
    return sympy.Symbol(var.name)


def _generators(polys: Iterable[DiffPolynomial], first: Optional[DerivVar] = None) -> List[DerivVar]:
    variables = set()
    for p in polys:
        variables |= p.variables()
    if first is not None:
        variables.discard(first)
        return [first] + sorted(variables)
    return sorted(variables)


def to_poly(p: DiffPolynomial, gens: Sequence[DerivVar]) -> Poly:
    index = {v: i for i, v in enumerate(gens)}
    rep = {}
    for m, c in p.terms.items():
        exponents = [0] * len(gens)
        for v, e in m:
            exponents[index[v]] = e
        rep[tuple(exponents)] = c
    symbols = [symbol_for(v) for v in gens] or [sympy.Symbol("_unit")]
    if not gens:
        rep = {(0,): c for _, c in rep.items()}
    return Poly.from_dict(rep, *symbols, domain=p.ring.ground.domain)


def from_poly(poly, gens: Sequence[DerivVar], ring: RingDescriptor) -> DiffPolynomial:
    """Inverse of to_poly; accepts a Poly over `gens` or a bare constant"""
    ground = ring.ground
    if not isinstance(poly, Poly):
        return DiffPolynomial.constant(ring, ground.domain.from_sympy(sympy.sympify(poly)))
    if len(poly.gens) != len(gens) and gens:
        raise RingMismatchError("generator count changed during a sympy computation")
    terms = {}
    for exponents, c in poly.as_dict(native=True).items():
        monomial = tuple((v, e) for v, e in zip(gens, exponents) if e)
        terms[tuple(sorted(monomial)) or ONE] = ground.convert(c)
    return DiffPolynomial(ring, terms)


def resultant(p: DiffPolynomial, q: DiffPolynomial, var: DerivVar) -> DiffPolynomial:
    """Res_var(p, q) by the subresultant PRS"""
    p._check_ring(q.ring)
    gens = _generators([p, q], first=var)
    result = to_poly(p, gens).resultant(to_poly(q, gens))
    return from_poly(result, gens[1:], p.ring)


def gcd(p: DiffPolynomial, q: DiffPolynomial) -> DiffPolynomial:
    p._check_ring(q.ring)
    gens = _generators([p, q])
    if not gens:
        return DiffPolynomial.one(p.ring) if (p or q) else DiffPolynomial.zero(p.ring)
    return from_poly(to_poly(p, gens).gcd(to_poly(q, gens)), gens, p.ring).normalized()


def squarefree_factors(p: DiffPolynomial) -> List[Tuple[DiffPolynomial, int]]:
    """Square-free decomposition without the constant content"""
    gens = _generators([p])
    if not gens:
        return []
    _, factors = to_poly(p, gens).sqf_list()
    return [(from_poly(f, gens, p.ring).normalized(), k) for f, k in factors]


def exact_quotient(p: DiffPolynomial, q: DiffPolynomial) -> Optional[DiffPolynomial]:
    """p / q when q divides p exactly, otherwise None"""
    p._check_ring(q.ring)
    if not q:
        return None
    if not p:
        return p
    gens = _generators([p, q])
    if not gens:
        return p / q
    quotient, remainder = to_poly(p, gens).div(to_poly(q, gens))
    if not remainder.is_zero:
        return None
    return from_poly(quotient, gens, p.ring)


def proportionality(p: DiffPolynomial, q: DiffPolynomial) -> Optional[object]:
    """The ground constant c with p = c·q, or None"""
    p._check_ring(q.ring)
    if not p or not q:
        return None
    monomial, coefficient = q.leading_display_term()
    if monomial not in p.terms:
        return None
    ratio = p.terms[monomial] / coefficient
    return ratio if p == q.mul_ground(ratio) else None


def determinant(rows: Sequence[Sequence[DiffPolynomial]], ring: RingDescriptor) -> DiffPolynomial:
    """Determinant of a square matrix of differential polynomials"""
    entries = [e for row in rows for e in row]
    gens = _generators(entries)
    if not gens:
        matrix = Matrix([[ring.ground.to_sympy(e.ground_value()) for e in row] for row in rows])
        return DiffPolynomial.constant(ring, ring.ground.domain.from_sympy(matrix.det(method="bareiss")))
    symbols = [symbol_for(v) for v in gens]
    matrix = Matrix([[to_poly(e, gens).as_expr() for e in row] for row in rows])
    value = sympy.expand(matrix.det(method="berkowitz"))
    if value == 0:
        return DiffPolynomial.zero(ring)
    return from_poly(Poly(value, *symbols, domain=ring.ground.domain), gens, ring)


def rational_nullspace(rows: Sequence[Sequence[object]]) -> List[List[object]]:
    """Basis of the right kernel of a rational matrix, as lists of sympy Rationals"""
    matrix = Matrix([[_rational(e) for e in row] for row in rows])
    result = []
    for vector in matrix.nullspace():
        scale = reduce(sympy.ilcm, [sympy.fraction(entry)[1] for entry in vector], 1)
        result.append([entry * scale for entry in vector])
    return result


def _rational(value: object) -> sympy.Rational:
    if QQ.of_type(value):
        return QQ.to_sympy(value)
    return sympy.Rational(value)
