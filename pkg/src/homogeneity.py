"""Differential homogeneity tests through a fresh scaling indeterminate t"""
import logging
from math import comb
from typing import Dict, Iterable, List, Sequence

from .errors import PreconditionError
from .models.charset import CharSet
from .models.polynomial import DiffPolynomial
from .models.reports import HomogeneityReport, VariableBlock, Y_BLOCK
from .models.variables import DerivVar, Family, t
from .reduction.ranking import Ranking

logger = logging.getLogger(__name__)


def scale_substitute(f: DiffPolynomial, block: VariableBlock = Y_BLOCK) -> DiffPolynomial:
    """f with every v^(k) of the block replaced by Σ_i C(k,i) t^(i) v^(k-i)"""
    if not f.free_of(Family.T):
        raise PreconditionError("scale_substitute needs a polynomial free of t")
    ring = f.ring.with_scaling()
    lifted = f.embed(ring)
    images: Dict[DerivVar, DiffPolynomial] = {}
    for v in f.variables():
        if not block.contains(v):
            continue
        images[v] = DiffPolynomial.sum(ring, (
            DiffPolynomial.var(ring, t(i)) * DiffPolynomial.var(ring, v.base.derivative(v.order - i)) * comb(v.order, i)
            for i in range(v.order + 1)
        ))
    return lifted.compose(images, ring)


def is_diff_homogeneous(f: DiffPolynomial, block: VariableBlock = Y_BLOCK) -> HomogeneityReport:
    """f(tY) = t^m f(Y) with m the common degree of the terms in the block"""
    if not f:
        raise PreconditionError("homogeneity is undefined for the zero polynomial")
    degrees = f.term_degrees(block.contains)
    m = max(degrees)
    scaled = scale_substitute(f, block)
    ring = scaled.ring
    residual = scaled - DiffPolynomial.var(ring, t(0), m) * f.embed(ring)
    if len(degrees) > 1:
        logger.debug(f"{f.render()} mixes degrees {sorted(degrees)} in block {block.name}")
        return HomogeneityReport(block, False, witness=residual)
    if residual:
        return HomogeneityReport(block, False, witness=residual)
    return HomogeneityReport(block, True, degree=m)


def is_p_homogeneous(f: DiffPolynomial, blocks: Sequence[VariableBlock]) -> List[HomogeneityReport]:
    """One report per block; f is p-homogeneous when all of them are positive"""
    if len(set(blocks)) != len(blocks):
        raise PreconditionError("blocks must be pairwise distinct")
    return [is_diff_homogeneous(f, block) for block in blocks]


def check_separant_initial_homogeneous(f: DiffPolynomial, ranking: Ranking,
                                       block: VariableBlock = Y_BLOCK) -> bool:
    """The separant is homogeneous of degree m-1 and the initial is homogeneous"""
    report = is_diff_homogeneous(f, block)
    if not report.homogeneous or not report.degree:
        raise PreconditionError(f"{f.render()} is not differentially homogeneous of positive degree")
    separant = ranking.separant(f)
    initial = ranking.initial(f)
    separant_report = is_diff_homogeneous(separant, block)
    initial_report = is_diff_homogeneous(initial, block)
    ok = separant_report.homogeneous and separant_report.degree == report.degree - 1 and initial_report.homogeneous
    if not ok:
        logger.warning(f"separant/initial homogeneity failed for {f.render()} under {ranking.describe()}")
    return ok


def check_partials_homogeneous(f: DiffPolynomial, block: VariableBlock = Y_BLOCK) -> bool:
    """∂f/∂v^(o) is homogeneous of degree d-1 for every v of the block, o = ord(f) in the block"""
    report = is_diff_homogeneous(f, block)
    if not report.homogeneous or not report.degree:
        raise PreconditionError(f"{f.render()} is not differentially homogeneous of positive degree")
    variables = [v for v in f.variables() if block.contains(v)]
    order = max(v.order for v in variables)
    for base in sorted({v.base for v in variables}):
        partial = f.partial(base.derivative(order))
        if not partial:
            continue
        partial_report = is_diff_homogeneous(partial, block)
        if not partial_report.homogeneous or partial_report.degree != report.degree - 1:
            logger.warning(f"∂/∂{base.derivative(order).name} of {f.render()} is not homogeneous of degree "
                           f"{report.degree - 1}")
            return False
    return True


def homogeneity_degrees(f: DiffPolynomial, blocks: Sequence[VariableBlock]) -> List[int]:
    """Degrees of a p-homogeneous polynomial, raising when some block fails"""
    reports = is_p_homogeneous(f, blocks)
    failed = [r.block.name for r in reports if not r.homogeneous]
    if failed:
        raise PreconditionError(f"{f.render()} is not homogeneous in {', '.join(failed)}")
    return [r.degree for r in reports]


def is_homogeneous_ideal(A: CharSet, blocks: Iterable[VariableBlock] = (Y_BLOCK,)) -> bool:
    """A prime ideal is p-homogeneous iff every element of its characteristic set is"""
    blocks = list(blocks)
    return all(r.homogeneous for p in A for r in is_p_homogeneous(p, blocks))
