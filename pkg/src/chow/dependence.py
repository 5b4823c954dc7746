"""Linear-dependence verdicts, S_F witnesses and the R_V / Chow form comparison"""
import logging
from typing import Dict, List, Optional, Sequence

from sympy import QQ

from ..algebra.evaluation import DEFAULT_GUARD, eval_at, evaluate, vanishes_at
from ..algebra.sympy_bridge import exact_quotient, proportionality
from ..config import DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER
from ..errors import EngineInvariantError, InconclusiveError, PreconditionError, RingMismatchError
from ..models.ground import GroundMode
from ..models.polynomial import DiffPolynomial
from ..models.ring import RingDescriptor
from ..models.reports import ChowForm, DependenceVerdict, Verdict, WitnessResult
from ..models.series import DiffPoint, TruncatedSeries
from ..models.variables import BaseVar, Family, u, y
from ..models.variety import VarietySpec
from ..projective import vdelta_generators
from .algebraic import algebraic_generators, kolchin_rv, rv_as_chow_form
from .elimination import diff_chow_variety
from .properties import chow_ideal_charset

logger = logging.getLogger(__name__)


def render_coordinate(series: TruncatedSeries) -> str:
    """A constant series as its rational value, anything else as a series"""
    if all(not series.coefficient(k) for k in range(1, series.precision)):
        return str(QQ.to_sympy(series.coefficient(0)))
    return series.render()


def _hyperplane_values(hyperplanes: Sequence[DiffPoint]) -> Dict[BaseVar, TruncatedSeries]:
    return {BaseVar(Family.U, i, j): coord
            for i, point in enumerate(hyperplanes) for j, coord in enumerate(point.coords)}


def sf_witness(chow: ChowForm, hyperplanes: Sequence[DiffPoint],
               generators: Optional[Sequence[DiffPolynomial]] = None,
               guard: int = DEFAULT_GUARD) -> WitnessResult:
    """ȳ0 = 1, ȳρ = (∂F/∂u0ρ^(h))(v) / S_F(v), verified against V and the hyperplanes"""
    F, h = chow.polynomial, chow.order
    if len(hyperplanes) != chow.dim + 1:
        raise PreconditionError(f"expected {chow.dim + 1} hyperplanes, got {len(hyperplanes)}")
    if any(len(point) != chow.n + 1 for point in hyperplanes):
        raise RingMismatchError(f"every hyperplane needs {chow.n + 1} coefficients")
    precision = min(point.precision for point in hyperplanes)
    values = _hyperplane_values(hyperplanes)

    value = evaluate(F, values, precision, guard)
    if not value.is_zero():
        raise PreconditionError(f"F does not vanish at the hyperplanes: {value.render()}", value=value.render())
    separant = chow.separant if chow.separant is not None else F.partial(chow.lead_variable)
    separant_value = evaluate(separant, values, precision, guard)
    if separant_value.is_zero():
        raise InconclusiveError("S_F vanishes at the hyperplanes; no witness can be built")

    coords = [TruncatedSeries.constant(1, separant_value.precision)]
    for rho in range(1, chow.n + 1):
        coords.append(evaluate(F.partial(u(0, rho, h)), values, precision, guard) / separant_value)
    common = min(c.precision for c in coords)
    point = DiffPoint(tuple(c.truncate(common) for c in coords), common)

    checks = {
        'generators': all(vanishes_at(g, point, guard) for g in generators or ()),
        'hyperplanes': all(
            sum((plane[j] * point[j] for j in range(1, chow.n + 1)), plane[0] * point[0]).is_zero()
            for plane in hyperplanes),
    }
    joint = dict(values)
    joint.update({BaseVar(Family.Y, 0, j): coord for j, coord in enumerate(point.coords)})
    A = chow_ideal_charset(chow)
    checks['chow_ideal'] = all(evaluate(a, joint, min(common, precision), guard).is_zero() for a in A)
    if not all(checks.values()):
        raise EngineInvariantError("the witness failed verification", **checks)
    rendered = tuple(render_coordinate(c) for c in point.coords)
    logger.info(f"witness ({', '.join(rendered)}) verified")
    return WitnessResult(point=point.coords, rendered=rendered, verified=True, checks=checks)


def lindep_test(V: VarietySpec, v: DiffPoint, guard: int = DEFAULT_GUARD,
                field: GroundMode = GroundMode.Q) -> DependenceVerdict:
    """Do v0..vn satisfy a linear relation with coefficients on V? Decided by R_V(v) and its separant"""
    if len(v) != V.arity:
        raise RingMismatchError(f"the point has {len(v)} coordinates, the variety lives in P({V.n})")
    R = kolchin_rv(V, field=field)
    value = eval_at(R, v, guard)
    h = max(R.order(), 0)
    separant = R.partial(y(0, h))
    separant_value = eval_at(separant, v, guard) if separant else TruncatedSeries.constant(0, value.precision)

    if not value.is_zero():
        return DependenceVerdict(value, separant_value, Verdict.INDEPENDENT)
    if separant_value.is_zero():
        logger.warning(f"R_V and its separant both vanish at {v.render()}; the verdict is inconclusive")
        return DependenceVerdict(value, separant_value, Verdict.INCONCLUSIVE)

    witness = sf_witness(rv_as_chow_form(R, V.n), [v], witness_generators(V, field), guard)
    point = DiffPoint(tuple(witness.point), witness.point[0].precision)
    return DependenceVerdict(value, separant_value, Verdict.DEPENDENT, witness=point)


def verify_thm_5_4(V: VarietySpec, field: GroundMode = GroundMode.Q, max_order: int = DEFAULT_MAX_ORDER,
                   max_degree: int = DEFAULT_MAX_DEGREE) -> bool:
    """R_V read in u_0 equals the differential Chow form of V^δ up to a nonzero constant"""
    R = kolchin_rv(V, field=field)
    chow = diff_chow_variety(V, field, max_order, max_degree)
    renamed = rv_as_chow_form(R, V.n).polynomial.embed(chow.polynomial.ring)
    quotient = exact_quotient(renamed, chow.polynomial)
    ratio = proportionality(renamed, chow.polynomial)
    equal = ratio is not None and quotient is not None and quotient.is_ground()
    if equal:
        logger.info(f"R_V = {R.render()} matches the Chow form of V^δ for {V.render()}")
    else:
        logger.warning(f"R_V = {R.render()} differs from the Chow form {chow.polynomial.render()}")
    return equal


def witness_generators(V: VarietySpec, field: GroundMode = GroundMode.Q) -> List[DiffPolynomial]:
    """Defining polynomials of V^δ, used to verify witnesses"""
    ring = RingDescriptor(y_count=V.arity, field=field)
    return vdelta_generators(algebraic_generators(V, ring), V.n, ring)
