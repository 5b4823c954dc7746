"""Differential dimension polynomials and generic hyperplane sections"""
import logging
from typing import List, Optional, Sequence

from .errors import EngineInvariantError, HomogeneityError, PreconditionError, SplittingAmbiguityError
from .homogeneity import is_homogeneous_ideal
from .models.charset import CharSet, Provenance
from .models.polynomial import DiffPolynomial
from .models.reports import AFFINE, PROJECTIVE, DimensionPolynomial, IntersectionResult
from .models.ring import RingDescriptor
from .models.variables import BaseVar, DerivVar, Family, u, y
from .projective import dehomogenize_charset
from .reduction.charset import charset
from .reduction.ranking import Ranking
from .reduction.reduce import pseudo_remainder

logger = logging.getLogger(__name__)


def counted_variables(ring: RingDescriptor, mode: str) -> List[BaseVar]:
    """y0..yn in projective form, y1..yn in affine form"""
    variables = ring.y_vars()
    return variables if mode == PROJECTIVE else variables[1:]


def _y_leaders(A: CharSet) -> List[DerivVar]:
    leaders = A.base.leaders()
    for leader in leaders:
        if leader.family != Family.Y:
            raise PreconditionError(f"leader {leader.name} is not a y derivative")
    bases = [leader.base for leader in leaders]
    if len(set(bases)) != len(bases):
        raise PreconditionError("leaders of the characteristic set share a variable")
    return leaders


def free_derivative_count(leaders: Sequence[DerivVar], variables: Sequence[BaseVar], t: int) -> int:
    """Derivatives of order <= t that are not derivatives of any leader"""
    count = 0
    for base in variables:
        for k in range(t + 1):
            if not any(leader.base == base and k >= leader.order for leader in leaders):
                count += 1
    return count


def _orderly_charset(A: CharSet, ring: RingDescriptor) -> CharSet:
    if A.ranking.is_orderly_on(ring.y_vars()):
        return A
    ranking = Ranking.orderly(ring)
    logger.info(f"recomputing the characteristic set under {ranking.describe()} to read off its dimension")
    recomputed = charset(A.elements, ranking, provenance=A.provenance)
    return recomputed


def dimension_polynomial(A: CharSet, mode: str = PROJECTIVE, ring: Optional[RingDescriptor] = None,
                         check_range: int = 3) -> DimensionPolynomial:
    """ω(t) = (N - L)(t+1) + Σ ord(leaders), cross-checked against the lattice count"""
    if mode not in (PROJECTIVE, AFFINE):
        raise PreconditionError(f"unknown normal form {mode!r}")
    ring = ring or A.base.ring
    if ring is None:
        raise PreconditionError("an empty characteristic set needs an explicit ring")
    if len(A):
        A = _orderly_charset(A, ring)
    leaders = _y_leaders(A) if len(A) else []
    variables = counted_variables(ring, mode)
    if mode == AFFINE and any(leader.var_index == 0 for leader in leaders):
        raise PreconditionError("an affine characteristic set cannot have a y0 leader")
    a1 = len(variables) - len(leaders)
    a0 = sum(leader.order for leader in leaders)
    threshold = max(0, max((leader.order for leader in leaders), default=0) - 1)
    result = DimensionPolynomial(a1=a1, a0=a0, stability_threshold=threshold, form=mode)
    for t in range(threshold, threshold + check_range + 1):
        if result.value(t) != free_derivative_count(leaders, variables, t):
            raise EngineInvariantError(f"closed form and lattice count disagree at t={t}")
    return result


def check_sum_formula(A_proj: CharSet, check_range: int = 10) -> bool:
    """ω_I(t) = (t+1) + ω_φ(I)(t) as polynomials, each side checked against the lattice count"""
    ring = A_proj.base.ring
    A_proj = _orderly_charset(A_proj, ring)
    A_aff = dehomogenize_charset(A_proj)
    projective = dimension_polynomial(A_proj, PROJECTIVE)
    affine = dimension_polynomial(A_aff, AFFINE, ring=ring)
    leaders_proj, leaders_aff = _y_leaders(A_proj), _y_leaders(A_aff)
    for t in range(check_range + 1):
        left = free_derivative_count(leaders_proj, counted_variables(ring, PROJECTIVE), t)
        right = free_derivative_count(leaders_aff, counted_variables(ring, AFFINE), t)
        if t >= projective.stability_threshold and left != projective.value(t):
            return False
        if t >= affine.stability_threshold and right != affine.value(t):
            return False
    return projective.a1 == affine.a1 + 1 and projective.a0 == affine.a0


def parametric_set(A: CharSet, ring: Optional[RingDescriptor] = None) -> List[BaseVar]:
    """y variables that are not leader variables"""
    ring = ring or A.base.ring
    leader_bases = {leader.base for leader in A.base.leaders()}
    result = [base for base in ring.y_vars() if base not in leader_bases]
    if not result and len(A) and is_homogeneous_ideal(A):
        raise EngineInvariantError("a homogeneous prime ideal must have a nonempty parametric set")
    return result


def generic_hyperplane(ring: RingDescriptor, block: int, affine: bool = False) -> DiffPolynomial:
    """Σ_j u_bj·y_j, or u_b0 + Σ_(j>=1) u_bj·y_j in affine form"""
    terms = []
    for j in range(ring.y_count):
        coefficient = DiffPolynomial.var(ring, u(block, j))
        if affine and j == 0:
            terms.append(coefficient)
        else:
            terms.append(coefficient * DiffPolynomial.var(ring, y(j)))
    return DiffPolynomial.sum(ring, terms)


def intersect_generic_hyperplane(A: CharSet, affine: bool = False) -> IntersectionResult:
    """Adjoin a generic hyperplane with fresh lowest-ranked coefficients and recompute the characteristic set"""
    if not len(A):
        raise PreconditionError("the intersection needs a nonempty characteristic set")
    mode = AFFINE if affine else PROJECTIVE
    ring = A.base.ring
    if affine:
        if any(v.base == BaseVar(Family.Y, 0, 0) for p in A for v in p.variables()):
            raise PreconditionError("an affine characteristic set must be free of y0")
    elif not is_homogeneous_ideal(A):
        raise HomogeneityError("the characteristic set is not differentially homogeneous")
    before = dimension_polynomial(A, mode)
    if before.dim < 1:
        raise PreconditionError(f"cannot cut a dimension {before.dim} variety by a generic hyperplane")

    block = ring.u_blocks
    extended = ring.with_u_blocks(block + 1, width=ring.y_count)
    ranking = A.ranking.with_lowest(extended.u_block(block))
    hyperplane = generic_hyperplane(extended, block, affine)
    generators = [p.embed(extended) for p in A] + [hyperplane]
    result = charset(generators, ranking, provenance=Provenance.ASSERTED_PRIME)

    for factor in result.splitting_log:
        if not pseudo_remainder(factor, result.base).remainder:
            raise SplittingAmbiguityError(f"the logged factor {factor.render()} lies in the computed ideal",
                                          factor=factor.render())
    after = dimension_polynomial(result, mode)
    if after.dim != before.dim - 1 or after.order != before.order:
        raise EngineInvariantError(
            f"generic intersection gave dim {after.dim}, order {after.order}; "
            f"expected dim {before.dim - 1}, order {before.order}")
    logger.info(f"generic intersection: dim {before.dim} -> {after.dim}, order {after.order}")
    return IntersectionResult(
        charset_out=result,
        hyperplane=hyperplane,
        dim_before=before.dim,
        dim_after=after.dim,
        order_before=before.order,
        order_after=after.order,
    )


def intersect_generic_hyperplanes(A: CharSet, count: int, affine: bool = False) -> List[IntersectionResult]:
    """Cut by `count` generic hyperplanes with blocks u0, u1, ... in turn"""
    if count < 1:
        raise PreconditionError(f"count must be positive, got {count}")
    mode = AFFINE if affine else PROJECTIVE
    dim = dimension_polynomial(A, mode).dim
    if count > dim:
        raise PreconditionError(f"cannot cut a dimension {dim} variety by {count} hyperplanes")
    results = []
    current = A
    for _ in range(count):
        step = intersect_generic_hyperplane(current, affine)
        results.append(step)
        current = step.charset_out
    return results
