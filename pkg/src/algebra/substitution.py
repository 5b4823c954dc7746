"""Substitution of differential polynomials and quotients for indeterminates"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from ..errors import DivisionByZeroError, PreconditionError
from ..models.polynomial import DiffPolynomial
from ..models.ring import RingDescriptor
from ..models.variables import BaseVar, DerivVar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Quotient:
    """numerator / denominator with both in one ring"""
    numerator: DiffPolynomial
    denominator: DiffPolynomial

    def __post_init__(self):
        if not self.denominator:
            raise DivisionByZeroError("quotient with the zero polynomial as denominator")
        self.numerator._check_ring(self.denominator.ring)

    @property
    def ring(self) -> RingDescriptor:
        return self.numerator.ring

    def derivative_numerators(self, up_to: int) -> List[DiffPolynomial]:
        """N_k with δ^k(N/b) = N_k / b^(k+1), via N_(k+1) = b·δN_k - (k+1)·δb·N_k"""
        b = self.denominator
        db = b.differentiate()
        numerators = [self.numerator]
        for k in range(up_to):
            current = numerators[-1]
            numerators.append(b * current.differentiate() - db * current * (k + 1))
        return numerators


@dataclass(frozen=True)
class SubstitutionResult:
    """numerator / denominator^power"""
    numerator: DiffPolynomial
    denominator: DiffPolynomial
    power: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'numerator': self.numerator.render(),
            'denominator': self.denominator.render(),
            'power': self.power,
        }


Image = Union[DiffPolynomial, Quotient, int]


def _target_ring(p: DiffPolynomial, mapping: Mapping[BaseVar, Image]) -> RingDescriptor:
    for image in mapping.values():
        if isinstance(image, (DiffPolynomial, Quotient)):
            return image.ring
    return p.ring


def _as_polynomial(image: Image, ring: RingDescriptor) -> Union[DiffPolynomial, Quotient]:
    if isinstance(image, Quotient):
        image.numerator._check_ring(ring)
        return image
    if isinstance(image, DiffPolynomial):
        image._check_ring(ring)
        return image
    return DiffPolynomial.constant(ring, image)


def substitute(p: DiffPolynomial, mapping: Mapping[BaseVar, Image],
               ring: Optional[RingDescriptor] = None) -> Union[DiffPolynomial, SubstitutionResult]:
    """Replace base variables by images; derivatives of the images follow by differentiation"""
    target = ring or _target_ring(p, mapping)
    images = {base: _as_polynomial(image, target) for base, image in mapping.items()}
    quotients = [image for image in images.values() if isinstance(image, Quotient)]

    if not quotients:
        derivative_images: Dict[DerivVar, DiffPolynomial] = {}
        for v in p.variables():
            image = images.get(v.base)
            if image is not None:
                derivative_images[v] = image.differentiate(v.order)
        return p.compose(derivative_images, target)

    denominators = {q.denominator for q in quotients}
    if len(denominators) > 1:
        raise PreconditionError("quotient images must share a single denominator")
    b = quotients[0].denominator

    pieces: Dict[DerivVar, Tuple[DiffPolynomial, int]] = {}
    numerator_cache: Dict[BaseVar, List[DiffPolynomial]] = {}
    for v in p.variables():
        image = images.get(v.base)
        if image is None:
            pieces[v] = (DiffPolynomial.var(target, v), 0)
        elif isinstance(image, Quotient):
            if v.base not in numerator_cache:
                numerator_cache[v.base] = image.derivative_numerators(p.order(v.base))
            pieces[v] = (numerator_cache[v.base][v.order], v.order + 1)
        else:
            pieces[v] = (image.differentiate(v.order), 0)

    terms: List[Tuple[DiffPolynomial, int]] = []
    ground = target.ground
    for m, c in p.terms.items():
        numerator = DiffPolynomial.constant(target, ground.convert(c))
        power = 0
        for v, e in m:
            piece, weight = pieces[v]
            numerator = numerator * piece ** e
            power += weight * e
        terms.append((numerator, power))

    top = max(power for _, power in terms)
    b_powers: Dict[int, DiffPolynomial] = {}
    total = DiffPolynomial.zero(target)
    for numerator, power in terms:
        gap = top - power
        if gap not in b_powers:
            b_powers[gap] = b ** gap
        total = total + numerator * b_powers[gap]
    return SubstitutionResult(total, b, top)
