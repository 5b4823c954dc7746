"""Bridge between homogeneous (projective) and affine differential ideals"""
import logging
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra.substitution import Quotient, SubstitutionResult, substitute
from .errors import EngineInvariantError, HomogeneityError, PreconditionError
from .homogeneity import is_diff_homogeneous
from .models.charset import AutoreducedSet, CharSet, ReductionResult
from .models.polynomial import DiffPolynomial, monomial_without
from .models.reports import HomogenizationResult
from .models.ring import RingDescriptor
from .models.variables import BaseVar, Family, u, y
from .reduction.ranking import EliminationRanking, Ranking
from .reduction.reduce import autoreduced_set, certificate_holds, pseudo_remainder

logger = logging.getLogger(__name__)

Y0 = BaseVar(Family.Y, 0, 0)


def dehomogenize(p: DiffPolynomial) -> DiffPolynomial:
    """φ: y0 ↦ 1, so every derivative of y0 vanishes"""
    return substitute(p, {Y0: 1})


def dehomogenize_charset(A: CharSet) -> CharSet:
    """B_i = A_i(1, y1, ..., yn), with leaders preserved"""
    images: List[DiffPolynomial] = []
    for a in A:
        report = is_diff_homogeneous(a)
        if not report.homogeneous:
            raise HomogeneityError(f"{a.render()} is not differentially homogeneous",
                                   witness=report.witness.render() if report.witness is not None else None)
        leader = A.ranking.leader(a)
        if leader.base == Y0:
            raise PreconditionError(f"y0 is the leader variable of {a.render()}; it must rank lowest")
        b = dehomogenize(a)
        if not b or b.is_ground() or A.ranking.leader(b) != leader:
            raise PreconditionError(f"dehomogenizing {a.render()} does not preserve its leader {leader.name}")
        images.append(b.normalized())
    base = autoreduced_set(images, A.ranking)
    return CharSet(base=base, provenance=A.provenance, splitting_log=A.splitting_log)


def _strip_y0(p: DiffPolynomial) -> Tuple[DiffPolynomial, int]:
    """Divide out the largest power of y0 dividing every term"""
    y0 = y(0)
    common = min(dict(m).get(y0, 0) for m in p.terms)
    if not common:
        return p, 0
    return DiffPolynomial(p.ring, {monomial_without(m, y0, common): c for m, c in p.terms.items()}), common


def homogenize(r: DiffPolynomial) -> HomogenizationResult:
    """ψ: y0^l · r(y1/y0, ..., yn/y0) with the minimal l clearing all denominators"""
    if not r:
        raise PreconditionError("cannot homogenize the zero polynomial")
    if any(v.base == Y0 for v in r.variables()):
        raise PreconditionError(f"{r.render()} already involves y0")
    ring = r.ring
    if ring.y_count < 1:
        raise PreconditionError("homogenization needs y0 in the ring")
    denominator = DiffPolynomial.var(ring, y(0))
    mapping = {base: Quotient(DiffPolynomial.var(ring, base.derivative()), denominator)
               for base in ring.y_vars() if base != Y0}
    result = substitute(r, mapping)
    if isinstance(result, SubstitutionResult):
        numerator, power = result.numerator, result.power
    else:
        numerator, power = result, 0
    polynomial, stripped = _strip_y0(numerator)
    homogenized = HomogenizationResult(polynomial, power - stripped)
    if not is_diff_homogeneous(polynomial).homogeneous:
        raise EngineInvariantError(f"homogenization of {r.render()} produced a non-homogeneous polynomial")
    return homogenized


def homogenize_charset(B: CharSet, ranking: Optional[Ranking] = None) -> CharSet:
    """ψ applied elementwise to an affine characteristic set"""
    ranking = ranking or B.ranking
    images = [homogenize(b).polynomial.normalized() for b in B]
    base = autoreduced_set(images, ranking)
    return CharSet(base=base, provenance=B.provenance, splitting_log=B.splitting_log)


def wronskian_minor(i: int, j: int, ring: RingDescriptor) -> DiffPolynomial:
    """G_ij = y_i·y_j' - y_j·y_i'"""
    yi, yj = DiffPolynomial.var(ring, y(i)), DiffPolynomial.var(ring, y(j))
    return yi * yj.differentiate() - yj * yi.differentiate()


def vdelta_generators(algebraic_gens: Sequence[DiffPolynomial], n: int,
                      ring: Optional[RingDescriptor] = None) -> List[DiffPolynomial]:
    """The generators of V together with every Wronskian minor G_ij, 0 <= i < j <= n"""
    if ring is None:
        ring = algebraic_gens[0].ring if algebraic_gens else RingDescriptor(y_count=n + 1)
    if ring.y_count != n + 1:
        raise PreconditionError(f"the ring has {ring.y_count} y variables but n = {n}")
    for g in algebraic_gens:
        if g.order() > 0:
            raise PreconditionError(f"algebraic generator {g.render()} involves derivatives")
    result = [g.embed(ring) for g in algebraic_gens]
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            result.append(wronskian_minor(i, j, ring))
    return result


def prolong_hyperplane(s: int, ring: RingDescriptor, block: int = 0) -> DiffPolynomial:
    """Σ_j Σ_k C(s,k) u_bj^(k) y_j^(s-k), the s-th prolongation of P_b = Σ_j u_bj y_j"""
    if ring.u_blocks <= block:
        raise PreconditionError(f"the ring has no u block {block}")
    width = min(ring.u_width, ring.y_count)
    return DiffPolynomial.sum(ring, (
        DiffPolynomial.var(ring, u(block, j, k)) * DiffPolynomial.var(ring, y(j, s - k)) * comb(s, k)
        for j in range(width)
        for k in range(s + 1)
    ))


def prolong_hyperplanes(s_max: int, ring: RingDescriptor, block: int = 0) -> List[DiffPolynomial]:
    return [prolong_hyperplane(s, ring, block) for s in range(s_max + 1)]


def hm_polynomial(m: int, ring: Optional[RingDescriptor] = None) -> DiffPolynomial:
    """h_m in y = y0 from the recurrence; the s = 1 term uses y^(m-3)·y' for y^(m-2)·h_1"""
    if m < 2:
        raise PreconditionError(f"h_m is defined for m >= 2, got {m}")
    ring = ring or RingDescriptor(y_count=1)
    yv = DiffPolynomial.var(ring, y(0))
    table: Dict[int, DiffPolynomial] = {}
    for level in range(2, m + 1):
        total = DiffPolynomial.var(ring, y(0, level)) * yv ** (level - 2)
        for s in range(1, level):
            coefficient = comb(level - 1, s) - comb(level - 1, s - 1)
            if not coefficient:
                continue
            derivative = DiffPolynomial.var(ring, y(0, level - s))
            if s == 1:
                tail = yv ** (level - 3) * DiffPolynomial.var(ring, y(0, 1))
            else:
                tail = yv ** (level - s - 1) * table[s]
            total = total + derivative * tail * coefficient
        table[level] = total
    return table[m]


def hm_companion_remainder(m: int) -> DiffPolynomial:
    """Remainder of y^(m-1)·z^(m) - h_m(y)·z modulo y·z' - z·y' with y = y0, z = y1"""
    ring = RingDescriptor(y_count=2)
    ranking = EliminationRanking(ring.y_vars())
    wronskian = wronskian_minor(0, 1, ring)
    target = (DiffPolynomial.var(ring, y(0)) ** (m - 1) * DiffPolynomial.var(ring, y(1, m))
              - hm_polynomial(m, ring) * DiffPolynomial.var(ring, y(1)))
    A = AutoreducedSet((wronskian,), ranking)
    return pseudo_remainder(target, A).remainder


def prolongation_ranking(ring: RingDescriptor) -> Ranking:
    """y0 < ... < yn below u0n < ... < u01 < u00, so every initial and separant is y0"""
    precedence = ring.y_vars() + list(reversed(ring.u_block(0)))
    return EliminationRanking(precedence)


def prolongation_certificate(k: int, n: int) -> Tuple[ReductionResult, int]:
    """Cofactors showing y0^b·Σ_j u0j^(k)·yj ∈ [P0, G_0j], returned with b"""
    if k < 1:
        raise PreconditionError(f"prolongation certificates start at k = 1, got {k}")
    ring = RingDescriptor(y_count=n + 1, u_blocks=1, u_width=n + 1)
    ranking = prolongation_ranking(ring)
    generators = [wronskian_minor(0, j, ring) for j in range(1, n + 1)] + [prolong_hyperplane(0, ring)]
    A = autoreduced_set(generators, ranking)
    target = DiffPolynomial.sum(ring, (DiffPolynomial.var(ring, u(0, j, k)) * DiffPolynomial.var(ring, y(j))
                                       for j in range(n + 1)))
    result = pseudo_remainder(target, A, ranking, with_cofactors=True)
    if result.remainder:
        raise EngineInvariantError(f"Λ_{k} does not reduce to zero: remainder {result.remainder.render()}")
    b = result.multiplier.degree(y(0))
    if result.multiplier != DiffPolynomial.var(ring, y(0), b):
        raise EngineInvariantError(f"unexpected reduction multiplier {result.multiplier.render()}")
    if not certificate_holds(target, A, result):
        raise EngineInvariantError("prolongation certificate does not expand correctly")
    logger.info(f"prolongation certificate for k={k}, n={n}: b={b} with {len(result.cofactors)} cofactors")
    return result, b
