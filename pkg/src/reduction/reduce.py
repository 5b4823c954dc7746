"""Ritt pseudo-reduction with initial/separant certificates"""
import logging
from typing import Dict, Iterable, List, Optional, Tuple

from ..errors import GroundElementError, PreconditionError
from ..models.charset import AutoreducedSet, ReductionResult
from ..models.polynomial import DiffPolynomial
from ..models.variables import BaseVar, DerivVar
from .ranking import Ranking

logger = logging.getLogger(__name__)

Reducer = Tuple[int, DerivVar, int]


def _reducers(elements: Iterable[DiffPolynomial], ranking: Ranking) -> Dict[BaseVar, Reducer]:
    table: Dict[BaseVar, Reducer] = {}
    for k, a in enumerate(elements):
        leader = ranking.leader(a)
        table[leader.base] = (k, leader, a.degree(leader))
    return table


def _next_reduction(f: DiffPolynomial, table: Dict[BaseVar, Reducer],
                    ranking: Ranking) -> Optional[Tuple[DerivVar, int, int]]:
    """Highest reducible derivative: proper derivatives of leaders first, then leader degrees"""
    proper: List[Tuple[DerivVar, int, int]] = []
    algebraic: List[Tuple[DerivVar, int, int]] = []
    for v in f.variables():
        entry = table.get(v.base)
        if entry is None:
            continue
        k, leader, degree = entry
        if v.order > leader.order:
            proper.append((v, k, v.order - leader.order))
        elif v == leader and f.degree(v) >= degree:
            algebraic.append((v, k, 0))
    candidates = proper or algebraic
    if not candidates:
        return None
    return max(candidates, key=lambda c: ranking.key(c[0]))


def is_reduced(p: DiffPolynomial, elements: Iterable[DiffPolynomial], ranking: Ranking) -> bool:
    return _next_reduction(p, _reducers(elements, ranking), ranking) is None


def is_partially_reduced(p: DiffPolynomial, elements: Iterable[DiffPolynomial], ranking: Ranking) -> bool:
    table = _reducers(elements, ranking)
    for v in p.variables():
        entry = table.get(v.base)
        if entry is not None and v.order > entry[1].order:
            return False
    return True


def pseudo_remainder(f: DiffPolynomial, A: AutoreducedSet, ranking: Optional[Ranking] = None,
                     with_cofactors: bool = False) -> ReductionResult:
    """Ritt reduction of f modulo A, multiplying only by the initial/separant powers needed"""
    ranking = ranking or A.ranking
    elements = list(A.elements)
    table = _reducers(elements, ranking)
    initial_powers = [0] * len(elements)
    separant_powers = [0] * len(elements)
    cofactors: Dict[Tuple[int, int], DiffPolynomial] = {}
    derivatives: Dict[Tuple[int, int], DiffPolynomial] = {}
    ring = f.ring
    multiplier = DiffPolynomial.one(ring)
    r = f

    while r:
        step = _next_reduction(r, table, ranking)
        if step is None:
            break
        v, k, e = step
        key = (k, e)
        if key not in derivatives:
            derivatives[key] = elements[k].differentiate(e)
        divisor = derivatives[key]
        divisor_degree = divisor.degree(v)
        lead = divisor.coefficients_in(v)[divisor_degree]
        ground_lead = lead.is_ground()

        while r and r.degree(v) >= divisor_degree:
            coefficients = r.coefficients_in(v)
            top = max(coefficients)
            quotient = coefficients[top] * DiffPolynomial.var(ring, v, top - divisor_degree)
            if ground_lead:
                quotient = quotient / lead
                r = r - quotient * divisor
            else:
                r = lead * r - quotient * divisor
                multiplier = multiplier * lead
                if e:
                    separant_powers[k] += 1
                else:
                    initial_powers[k] += 1
                if with_cofactors:
                    cofactors = {c: lead * poly for c, poly in cofactors.items()}
            if with_cofactors:
                cofactors[key] = cofactors.get(key, DiffPolynomial.zero(ring)) + quotient

    logger.debug(f"reduced {f.render()} to {r.render()} with initial powers {initial_powers} "
                 f"and separant powers {separant_powers}")
    return ReductionResult(
        remainder=r,
        initial_powers=tuple(initial_powers),
        separant_powers=tuple(separant_powers),
        multiplier=multiplier,
        cofactors={c: poly for c, poly in cofactors.items() if poly},
    )


def certificate_holds(f: DiffPolynomial, A: AutoreducedSet, result: ReductionResult) -> bool:
    """Expand M·f - r and compare it with the recorded combination of derivatives of A"""
    combination = DiffPolynomial.zero(f.ring)
    for (k, e), cofactor in result.cofactors.items():
        combination = combination + cofactor * A.elements[k].differentiate(e)
    return result.multiplier * f - result.remainder == combination


def rank_key(p: DiffPolynomial, ranking: Ranking) -> tuple:
    """Rank with the deterministic tie-break: fewer terms, then smaller rendering"""
    return ranking.rank(p), len(p), p.render()


def autoreduced_set(elements: Iterable[DiffPolynomial], ranking: Ranking) -> AutoreducedSet:
    """Sort by rank and check that every element is reduced with respect to the others"""
    ordered = sorted(elements, key=lambda p: rank_key(p, ranking))
    for p in ordered:
        if p.is_ground():
            raise GroundElementError(f"autoreduced sets cannot contain the ground element {p.render()}")
    for i, p in enumerate(ordered):
        for j, q in enumerate(ordered):
            if i != j and not is_reduced(p, [q], ranking):
                raise PreconditionError(f"{p.render()} is not reduced with respect to {q.render()}",
                                        ranking=ranking.describe())
    return AutoreducedSet(tuple(ordered), ranking)
