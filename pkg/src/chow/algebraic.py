"""Algebraic Chow forms of desk-scale varieties and Kolchin's linear-dependence polynomial R_V"""
import logging
import random
from typing import Any, Dict, List, Optional, Sequence

from sympy import QQ

from ..algebra.evaluation import evaluate_constants
from ..algebra.sympy_bridge import determinant, rational_nullspace, resultant, squarefree_factors
from ..errors import EngineInvariantError, PreconditionError, UnsupportedVarietyError
from ..homogeneity import is_diff_homogeneous
from ..models.ground import GroundMode
from ..models.polynomial import DiffPolynomial, monomial_without
from ..models.reports import ChowForm
from ..models.ring import RingDescriptor
from ..models.variables import BaseVar, DerivVar, Family, s, u, y
from ..models.variety import VarietyKind, VarietySpec

logger = logging.getLogger(__name__)

CERTIFICATION_TRIALS = 3


def chow_ring(n: int, blocks: int, field: GroundMode = GroundMode.Q) -> RingDescriptor:
    """F{y0..yn, u_i0..u_in for i < blocks}"""
    return RingDescriptor(y_count=n + 1, u_blocks=blocks, u_width=n + 1, field=field)


def _arity(V: VarietySpec, n: Optional[int]) -> int:
    if n is None:
        return V.n
    if n != V.n:
        raise PreconditionError(f"the variety lives in P({V.n}), not P({n})")
    return n


def pairing(ring: RingDescriptor, block: int, vector: Sequence[Any]) -> DiffPolynomial:
    """<u_block, c> = Σ_j c_j u_block,j"""
    return DiffPolynomial.sum(ring, (DiffPolynomial.var(ring, u(block, j)).mul_ground(c)
                                     for j, c in enumerate(vector) if c))


def coordinate(ring: RingDescriptor, coefficients: Sequence[Any]) -> DiffPolynomial:
    """γ(s) = Σ_k c_k s^k with s the first parameter of `ring`"""
    return DiffPolynomial.sum(ring, (DiffPolynomial.var(ring, s(0), k).mul_ground(c)
                                     for k, c in enumerate(coefficients) if c))


def curve_pairing(ring: RingDescriptor, block: int, V: VarietySpec) -> DiffPolynomial:
    """<u_block, γ(s)>"""
    return DiffPolynomial.sum(ring, (DiffPolynomial.var(ring, u(block, j)) * coordinate(ring, gamma)
                                     for j, gamma in enumerate(V.data)))


def _strip_power(p: DiffPolynomial, var: DerivVar) -> DiffPolynomial:
    common = min(dict(m).get(var, 0) for m in p.terms)
    if not common:
        return p
    return DiffPolynomial(p.ring, {monomial_without(m, var, common): c for m, c in p.terms.items()})


def _squarefree_part(p: DiffPolynomial) -> DiffPolynomial:
    factors = squarefree_factors(p)
    if any(k > 1 for _, k in factors):
        logger.warning(f"dropping repeated factors of {p.render()}")
    result = DiffPolynomial.one(p.ring)
    for factor, _ in factors:
        result = result * factor
    return result.normalized()


def _curve_chow(V: VarietySpec, ring: RingDescriptor) -> DiffPolynomial:
    work = ring.with_params(1, frozenset({0}))
    first, second = curve_pairing(work, 0, V), curve_pairing(work, 1, V)
    R = resultant(first, second, s(0))
    if not R:
        raise UnsupportedVarietyError("the resultant vanishes identically; the parametrization is degenerate")
    return _squarefree_part(R).embed(ring)


def _random_point(V: VarietySpec, rng: random.Random) -> List[Any]:
    if V.kind == VarietyKind.POINT:
        return list(V.data[0])
    if V.kind == VarietyKind.SPAN:
        while True:
            weights = [QQ(rng.randint(-9, 9)) for _ in V.data]
            point = [sum((w * v[j] for w, v in zip(weights, V.data)), QQ.zero) for j in range(V.arity)]
            if any(point):
                return point
    polys = V.polys()
    while True:
        value = rng.randint(-9, 9)
        point = [QQ.from_sympy(p.eval(value)) if not p.is_zero else QQ.zero for p in polys]
        if any(point):
            return point


def _orthogonal(point: Sequence[Any], rng: random.Random) -> List[Any]:
    """A random vector r with <r, point> = 0"""
    pivot = next(j for j, c in enumerate(point) if c)
    vector = [QQ(rng.randint(-9, 9)) for _ in point]
    rest = sum((vector[j] * c for j, c in enumerate(point) if j != pivot), QQ.zero)
    vector[pivot] = -rest / point[pivot]
    return vector


def certify_chow(F: DiffPolynomial, V: VarietySpec, seed: int = 0,
                 trials: int = CERTIFICATION_TRIALS) -> bool:
    """F vanishes whenever the hyperplanes u_0..u_d share a point of V, and not identically"""
    rng = random.Random(seed)
    blocks = V.dim + 1
    for _ in range(trials):
        point = _random_point(V, rng)
        values: Dict[BaseVar, Any] = {}
        for i in range(blocks):
            for j, c in enumerate(_orthogonal(point, rng)):
                values[BaseVar(Family.U, i, j)] = c
        if evaluate_constants(F, values):
            logger.warning(f"{F.render()} does not vanish at an incident configuration")
            return False
    for _ in range(trials):
        values = {BaseVar(Family.U, i, j): QQ(rng.randint(-9, 9))
                  for i in range(blocks) for j in range(V.arity)}
        if evaluate_constants(F, values):
            return True
    return False


def algebraic_chow(V: VarietySpec, n: Optional[int] = None, field: GroundMode = GroundMode.Q,
                   seed: int = 0) -> ChowForm:
    """The order-0 Chow form in the blocks u_0..u_d"""
    n = _arity(V, n)
    d = V.dim
    ring = chow_ring(n, d + 1, field)
    if V.kind == VarietyKind.POINT:
        F = pairing(ring, 0, V.data[0])
    elif V.kind == VarietyKind.SPAN:
        rows = [[pairing(ring, i, c) for c in V.data] for i in range(d + 1)]
        F = determinant(rows, ring)
    else:
        F = _curve_chow(V, ring)
    F = F.normalized()
    if not certify_chow(F, V, seed):
        raise EngineInvariantError(f"the Chow form {F.render()} of {V.render()} failed certification")
    logger.info(f"algebraic Chow form of {V.render()}: {F.render()}")
    return ChowForm(polynomial=F, dim=d, order=0, n=n, kind="algebraic")


def algebraic_generators(V: VarietySpec, ring: Optional[RingDescriptor] = None) -> List[DiffPolynomial]:
    """Defining polynomials of V in y0..yn"""
    ring = ring or RingDescriptor(y_count=V.arity)
    if ring.y_count != V.arity:
        raise PreconditionError(f"the ring has {ring.y_count} y variables, the variety needs {V.arity}")
    ys = [DiffPolynomial.var(ring, y(j)) for j in range(V.arity)]
    result: List[DiffPolynomial] = []

    def keep(p: DiffPolynomial) -> None:
        if not p or p.is_ground():
            return
        p = p.normalized()
        if p not in result:
            result.append(p)

    if V.kind == VarietyKind.POINT:
        c = V.data[0]
        k = next(j for j, value in enumerate(c) if value)
        for j in range(V.arity):
            if j != k:
                keep(ys[j].mul_ground(c[k]) - ys[k].mul_ground(c[j]))
    elif V.kind == VarietyKind.SPAN:
        for w in rational_nullspace(V.matrix()):
            keep(DiffPolynomial.sum(ring, (ys[j].mul_ground(QQ.from_sympy(c)) for j, c in enumerate(w) if c)))
    else:
        work = ring.with_params(1, frozenset({0}))
        k = next(j for j, gamma in enumerate(V.data) if gamma)
        gamma_k = coordinate(work, V.data[k])
        yk = DiffPolynomial.var(work, y(k))
        forms = [gamma_k * DiffPolynomial.var(work, y(j)) - coordinate(work, V.data[j]) * yk
                 for j in range(V.arity) if j != k]
        moving = []
        for form in forms:
            if form.free_of(Family.PARAM):
                keep(form.embed(ring))
            else:
                moving.append(form)
        for a in range(len(moving)):
            for b in range(a + 1, len(moving)):
                r = resultant(moving[a], moving[b], s(0))
                if r:
                    keep(_strip_power(r, y(k)).embed(ring))
    return result


def kolchin_rv(V: VarietySpec, n: Optional[int] = None, field: GroundMode = GroundMode.Q,
               seed: int = 0) -> DiffPolynomial:
    """R_V: the algebraic Chow form with block u_i replaced by the row (y0^(i), ..., yn^(i))"""
    chow = algebraic_chow(V, n, field, seed)
    ring = RingDescriptor(y_count=chow.n + 1, field=field)
    mapping = {u(i, j): DiffPolynomial.var(ring, y(j, i)) for i in range(chow.dim + 1) for j in range(chow.n + 1)}
    R = chow.polynomial.compose(mapping, ring).normalized()
    if not R:
        raise EngineInvariantError(f"R_V of {V.render()} vanishes identically")
    if not is_diff_homogeneous(R).homogeneous:
        raise EngineInvariantError(f"R_V = {R.render()} is not differentially homogeneous")
    return R


def rv_as_chow_form(R: DiffPolynomial, n: int) -> ChowForm:
    """Read R_V in the block u_0 via y_j^(k) ↦ u0j^(k)"""
    ring = chow_ring(n, 1, R.ring.field)
    mapping = {v: DiffPolynomial.var(ring, u(0, v.var_index, v.order)) for v in R.variables()}
    F = R.compose(mapping, ring)
    h = max(F.order(), 0)
    return ChowForm(polynomial=F, dim=0, order=h, n=n, separant=F.partial(u(0, 0, h)), kind="kolchin")
