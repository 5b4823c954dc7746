"""Autoreduced sets, characteristic sets and reduction certificates"""
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from .polynomial import DiffPolynomial
from .ring import RingDescriptor
from .variables import DerivVar

if TYPE_CHECKING:
    from ..reduction.ranking import Ranking


class Provenance(str, Enum):
    ASSERTED_PRIME = "asserted-prime"
    COMPUTED = "computed"


@dataclass(frozen=True)
class AutoreducedSet:
    """Elements sorted by increasing rank, pairwise reduced"""
    elements: Tuple[DiffPolynomial, ...]
    ranking: 'Ranking'

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> DiffPolynomial:
        return self.elements[index]

    @property
    def ring(self) -> Optional[RingDescriptor]:
        return self.elements[0].ring if self.elements else None

    def leaders(self) -> List[DerivVar]:
        return [self.ranking.leader(p) for p in self.elements]

    def initials(self) -> List[DiffPolynomial]:
        return [self.ranking.initial(p) for p in self.elements]

    def separants(self) -> List[DiffPolynomial]:
        return [self.ranking.separant(p) for p in self.elements]

    def ranks(self) -> List[tuple]:
        return [self.ranking.rank(p) for p in self.elements]

    def render(self) -> List[str]:
        return [p.render() for p in self.elements]


@dataclass(frozen=True)
class CharSet:
    """A characteristic set together with how it was obtained"""
    base: AutoreducedSet
    provenance: Provenance = Provenance.COMPUTED
    splitting_log: Tuple[DiffPolynomial, ...] = ()
    rank_history: Tuple[Tuple[tuple, ...], ...] = ()

    def __iter__(self):
        return iter(self.base)

    def __len__(self) -> int:
        return len(self.base)

    @property
    def elements(self) -> Tuple[DiffPolynomial, ...]:
        return self.base.elements

    @property
    def ranking(self) -> 'Ranking':
        return self.base.ranking

    def to_dict(self) -> Dict[str, Any]:
        return {
            'charset': self.base.render(),
            'provenance': self.provenance.value,
            'splitting_log': [p.render() for p in self.splitting_log],
            'ranking': self.ranking.describe(),
        }


@dataclass(frozen=True)
class ReductionResult:
    """Remainder r with (∏ I_k^a_k S_k^b_k)·f - r = Σ cofactor_(k,e)·δ^e(A_k)"""
    remainder: DiffPolynomial
    initial_powers: Tuple[int, ...]
    separant_powers: Tuple[int, ...]
    multiplier: DiffPolynomial
    cofactors: Dict[Tuple[int, int], DiffPolynomial] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'remainder': self.remainder.render(),
            'initial_powers': list(self.initial_powers),
            'separant_powers': list(self.separant_powers),
            'multiplier': self.multiplier.render(),
        }
