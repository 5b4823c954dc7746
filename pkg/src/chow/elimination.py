"""Differential Chow forms by eliminating the parameters of a generic point"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra.parser import parse
from ..algebra.substitution import Quotient, SubstitutionResult, substitute
from ..algebra.sympy_bridge import gcd, resultant, squarefree_factors
from ..config import DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER
from ..dimension import dimension_polynomial
from ..errors import EliminationError, EngineInvariantError, PreconditionError
from ..models.charset import CharSet, Provenance
from ..models.ground import GroundMode
from ..models.polynomial import DiffPolynomial
from ..models.reports import ChowForm
from ..models.ring import RingDescriptor
from ..models.variables import BaseVar, DerivVar, Family, u
from ..models.variety import VarietyKind, VarietySpec
from ..projective import vdelta_generators
from ..reduction.charset import charset
from ..reduction.ranking import Ranking
from .algebraic import algebraic_generators, chow_ring, coordinate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenericPoint:
    """Coordinates ξ_0..ξ_n as differential polynomials in the parameters of their ring"""
    coords: Tuple[DiffPolynomial, ...]
    dim: int

    def __post_init__(self):
        if not self.coords or not any(self.coords):
            raise PreconditionError("a generic point needs a nonzero coordinate")
        ring = self.coords[0].ring
        for c in self.coords:
            c._check_ring(ring)
            if not c.free_of(Family.Y) or not c.free_of(Family.U):
                raise PreconditionError(f"generic point coordinate {c.render()} may only involve parameters")

    @property
    def ring(self) -> RingDescriptor:
        return self.coords[0].ring

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def pivot(self) -> int:
        return next(j for j, c in enumerate(self.coords) if c)

    def render(self) -> List[str]:
        return [c.render() for c in self.coords]

    @classmethod
    def parse(cls, text: str, ring: RingDescriptor, dim: int) -> 'GenericPoint':
        """Comma-separated coordinates such as `1, s, 0`"""
        return cls(tuple(parse(piece, ring) for piece in text.split(",")), dim)


def generic_point(V: VarietySpec, field: GroundMode = GroundMode.Q) -> GenericPoint:
    """A generic point of V^δ: the points of V with constant parameters"""
    params = 0 if V.kind == VarietyKind.POINT else V.dim
    ring = RingDescriptor(y_count=V.arity, param_count=params, constant_params=frozenset(range(params)),
                          field=field)
    if V.kind == VarietyKind.POINT:
        coords = [DiffPolynomial.constant(ring, c) for c in V.data[0]]
    elif V.kind == VarietyKind.SPAN:
        coords = []
        for j in range(V.arity):
            base = DiffPolynomial.constant(ring, V.data[0][j])
            coords.append(base + DiffPolynomial.sum(ring, (
                DiffPolynomial.var(ring, DerivVar(Family.PARAM, 0, m - 1, 0)).mul_ground(V.data[m][j])
                for m in range(1, len(V.data)) if V.data[m][j])))
    else:
        coords = [coordinate(ring, gamma) for gamma in V.data]
    return GenericPoint(tuple(coords), 0)


def vdelta_charset(V: VarietySpec, field: GroundMode = GroundMode.Q) -> CharSet:
    """Characteristic set of I(V^δ) under the orderly ranking"""
    ring = RingDescriptor(y_count=V.arity, field=field)
    generators = vdelta_generators(algebraic_generators(V, ring), V.n, ring)
    return charset(generators, Ranking.orderly(ring), provenance=Provenance.ASSERTED_PRIME)


def check_generic_point(gp: GenericPoint, A: CharSet) -> None:
    """Every element of A vanishes at gp, checked symbolically"""
    mapping = {BaseVar(Family.Y, 0, j): c for j, c in enumerate(gp.coords)}
    for a in A:
        if a.ring.y_count != len(gp.coords):
            raise PreconditionError(f"the generic point has {len(gp.coords)} coordinates, the ideal "
                                    f"{a.ring.y_count} y variables")
        image = substitute(a.embed(gp.ring), mapping)
        if image:
            raise PreconditionError(f"{a.render()} does not vanish at the generic point",
                                    residual=image.render())


def _working_ring(gp: GenericPoint) -> RingDescriptor:
    return gp.ring.with_u_blocks(gp.dim + 1, width=len(gp.coords))


def incidence_equations(gp: GenericPoint, ring: RingDescriptor, order: int) -> List[DiffPolynomial]:
    """δ^k(Σ_j u_ij ξ_j) for every block i and k <= order"""
    equations = []
    for i in range(gp.dim + 1):
        E = DiffPolynomial.sum(ring, (DiffPolynomial.var(ring, u(i, j)) * c.embed(ring)
                                      for j, c in enumerate(gp.coords) if c))
        equations.extend(E.differentiate(k) for k in range(order + 1))
    return equations


def vanishes_generically(p: DiffPolynomial, gp: GenericPoint) -> bool:
    """p(u) = 0 after u_ik ↦ -Σ_(j≠k) u_ij ξ_j / ξ_k for the pivot k, in exact arithmetic"""
    ring = p.ring
    k = gp.pivot
    denominator = gp.coords[k].embed(ring)
    mapping = {}
    for i in range(gp.dim + 1):
        numerator = -DiffPolynomial.sum(ring, (DiffPolynomial.var(ring, u(i, j)) * c.embed(ring)
                                                for j, c in enumerate(gp.coords) if c and j != k))
        mapping[BaseVar(Family.U, i, k)] = Quotient(numerator, denominator)
    result = substitute(p, mapping)
    if isinstance(result, SubstitutionResult):
        return not result.numerator
    return not result


def eliminate(equations: Sequence[DiffPolynomial], unknowns: Sequence[DerivVar]) -> List[DiffPolynomial]:
    """Remove each unknown in turn by resultants against the lowest-degree equation holding it"""
    remaining = [e for e in equations if e]
    for v in unknowns:
        holders = [e for e in remaining if e.involves(v)]
        others = [e for e in remaining if not e.involves(v)]
        if len(holders) < 2:
            remaining = others
            continue
        pivot = min(holders, key=lambda e: (e.degree(v), len(e), e.render()))
        produced = []
        for e in holders:
            if e is pivot:
                continue
            r = resultant(pivot, e, v)
            if not r:
                logger.warning(f"dropped a zero resultant while eliminating {v.name}")
                continue
            if r.is_ground():
                logger.warning(f"eliminating {v.name} produced the constant {r.render()}")
                continue
            produced.append(r)
        logger.info(f"eliminated {v.name}: {len(produced)} resultants from {len(holders)} equations")
        remaining = others + produced
    return [e for e in remaining if e.free_of(Family.PARAM)]


def _candidates(relations: Sequence[DiffPolynomial]) -> List[DiffPolynomial]:
    result: List[DiffPolynomial] = []
    for r in relations:
        for factor, _ in squarefree_factors(r):
            if not factor.is_ground() and factor not in result:
                result.append(factor)
    return result


def _choose(vanishing: List[DiffPolynomial], gp: GenericPoint) -> DiffPolynomial:
    """Lowest (order, degree) vanishing factor, refined by gcds with the others"""
    key = lambda p: (p.order(), p.total_degree(), len(p), p.render())
    chosen = min(vanishing, key=key)
    for other in sorted(vanishing, key=key):
        common = gcd(chosen, other)
        if not common.is_ground() and common != chosen and vanishes_generically(common, gp):
            chosen = common
    return chosen.normalized()


def diff_chow(gp: GenericPoint, A: Optional[CharSet] = None, max_order: int = DEFAULT_MAX_ORDER,
              max_degree: int = DEFAULT_MAX_DEGREE) -> ChowForm:
    """The differential Chow form of the prime ideal with generic point gp"""
    if A is not None:
        check_generic_point(gp, A)
        expected = dimension_polynomial(A)
        if expected.dim != gp.dim:
            raise PreconditionError(f"the ideal has dimension {expected.dim}, the generic point {gp.dim}")
    ring = _working_ring(gp)

    F = None
    for h in range(max_order + 1):
        equations = incidence_equations(gp, ring, h)
        unknowns = sorted({v for e in equations for v in e.variables() if v.family == Family.PARAM},
                          key=lambda v: v.display_key(), reverse=True)
        if unknowns and len(equations) <= len(unknowns):
            continue
        relations = eliminate(equations, unknowns)
        vanishing = [c for c in _candidates(relations) if vanishes_generically(c, gp)]
        if vanishing:
            F = _choose(vanishing, gp)
            break
        logger.info(f"no vanishing relation among the order {h} incidence equations")
    if F is None:
        raise EliminationError(f"no Chow relation found up to order {max_order}",
                               max_order=max_order, max_degree=max_degree)
    if F.total_degree() > max_degree:
        raise EliminationError(f"the Chow relation has degree {F.total_degree()} above {max_degree}",
                               max_order=max_order, max_degree=max_degree)

    h = F.order()
    lead = u(0, 0, h)
    if not F.involves(lead):
        raise EngineInvariantError(f"{lead.name} does not occur in {F.render()}")
    target = chow_ring(gp.n, gp.dim + 1, ring.field)
    F = F.embed(target)
    if A is not None and expected.order != h:
        raise EngineInvariantError(f"Chow form order {h} differs from the ideal order {expected.order}")
    logger.info(f"differential Chow form of order {h}: {F.render()}")
    return ChowForm(polynomial=F, dim=gp.dim, order=h, n=gp.n, separant=F.partial(lead), ideal=A)


def diff_chow_variety(V: VarietySpec, field: GroundMode = GroundMode.Q, max_order: int = DEFAULT_MAX_ORDER,
                      max_degree: int = DEFAULT_MAX_DEGREE) -> ChowForm:
    """The differential Chow form of V^δ"""
    return diff_chow(generic_point(V, field), vdelta_charset(V, field), max_order, max_degree)
