"""Result records returned by the engine operations"""
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from ..errors import ParseError, PreconditionError
from .charset import CharSet
from .polynomial import DiffPolynomial
from .series import DiffPoint, TruncatedSeries
from .variables import DerivVar, Family

PROJECTIVE = "projective"
AFFINE = "affine"


@dataclass(frozen=True, order=True)
class VariableBlock:
    """A block of indeterminates that is scaled together: Y, or one u block"""
    family: Family
    block_index: int = 0

    def contains(self, var: DerivVar) -> bool:
        return var.family == self.family and var.block_index == self.block_index

    @property
    def name(self) -> str:
        if self.family == Family.Y:
            return "Y"
        if self.family == Family.U:
            return f"u{self.block_index}"
        return self.family.name

    @classmethod
    def parse(cls, text: str) -> 'VariableBlock':
        text = text.strip()
        if text in ("Y", "y"):
            return cls(Family.Y)
        if text.startswith("u") and text[1:].isdigit():
            return cls(Family.U, int(text[1:]))
        raise ParseError(f"unknown variable block {text!r}; expected Y or u<i>")


Y_BLOCK = VariableBlock(Family.Y)


@dataclass(frozen=True)
class HomogeneityReport:
    """Outcome of the scaling test for one block"""
    block: VariableBlock
    homogeneous: bool
    degree: Optional[int] = None
    witness: Optional[DiffPolynomial] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {'homogeneous': self.homogeneous}
        if self.homogeneous:
            payload['degree'] = self.degree
        else:
            payload['witness'] = self.witness.render() if self.witness is not None else None
        return payload


@dataclass(frozen=True)
class HomogenizationResult:
    """y0^l · r(y1/y0, ..., yn/y0) together with the denomination l"""
    polynomial: DiffPolynomial
    denomination: int

    def to_dict(self) -> Dict[str, Any]:
        return {'polynomial': self.polynomial.render(), 'denomination': self.denomination}


@dataclass(frozen=True)
class DimensionPolynomial:
    """ω(t) = a1·(t+1) + a0"""
    a1: int
    a0: int
    stability_threshold: int
    form: str = PROJECTIVE

    def __post_init__(self):
        if self.a1 < 0:
            raise PreconditionError(f"a dimension polynomial needs a1 >= 0, got {self.a1}")

    def value(self, t: int) -> int:
        return self.a1 * (t + 1) + self.a0

    @property
    def dim(self) -> int:
        if self.form == PROJECTIVE:
            if self.a1 == 0:
                raise PreconditionError("a projective dimension polynomial needs a1 >= 1")
            return self.a1 - 1
        return self.a1

    @property
    def order(self) -> int:
        return self.a0

    def to_dict(self) -> Dict[str, Any]:
        return {'a1': self.a1, 'a0': self.a0, 'dim': self.dim, 'order': self.order, 'form': self.form}


@dataclass(frozen=True)
class IntersectionResult:
    """Characteristic set of the variety cut by a generic hyperplane"""
    charset_out: CharSet
    hyperplane: DiffPolynomial
    dim_before: int
    dim_after: int
    order_before: int
    order_after: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'charset': self.charset_out.base.render(),
            'hyperplane': self.hyperplane.render(),
            'dim_before': self.dim_before,
            'dim_after': self.dim_after,
            'order_before': self.order_before,
            'order_after': self.order_after,
            'splitting_log': [p.render() for p in self.charset_out.splitting_log],
        }


@dataclass(frozen=True)
class ChowForm:
    """A (differential) Chow form in the coefficient blocks u0..ud"""
    polynomial: DiffPolynomial
    dim: int
    order: int
    n: int
    separant: Optional[DiffPolynomial] = None
    ideal: Optional[CharSet] = None
    kind: str = "differential"

    @property
    def lead_variable(self) -> DerivVar:
        """u00^(h)"""
        return DerivVar(Family.U, 0, 0, self.order)

    @property
    def g(self) -> int:
        return self.polynomial.degree(self.lead_variable)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            'chow': self.polynomial.render(),
            'dim': self.dim,
            'order': self.order,
            'g': self.g,
            'kind': self.kind,
        }
        if self.separant is not None:
            payload['separant'] = self.separant.render()
        return payload


class Verdict(str, Enum):
    DEPENDENT = "dependent"
    INDEPENDENT = "independent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DependenceVerdict:
    """F and its separant evaluated at a point, with the resulting verdict"""
    value_of_F: TruncatedSeries
    separant_value: Optional[TruncatedSeries]
    verdict: Verdict
    witness: Optional[DiffPoint] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            'verdict': self.verdict.value,
            'value': self.value_of_F.render(),
            'separant_value': self.separant_value.render() if self.separant_value is not None else None,
        }
        if self.witness is not None:
            payload['witness'] = self.witness.render()
        return payload


@dataclass(frozen=True)
class WitnessResult:
    """A point on V and on every specialized hyperplane"""
    point: Tuple[Any, ...]
    rendered: Tuple[str, ...]
    verified: bool
    checks: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {'witness': list(self.rendered), 'verified': self.verified, 'checks': dict(self.checks)}


@dataclass
class PropertyReport:
    """Named checks with their outcomes; a string outcome means the check was not decided"""
    checks: Dict[str, Any] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    def record(self, name: str, outcome: Any) -> None:
        self.checks[name] = outcome
        if outcome is False:
            self.failures.append(name)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {'checks': dict(self.checks), 'failures': list(self.failures), 'passed': self.passed}
