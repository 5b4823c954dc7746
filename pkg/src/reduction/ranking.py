"""Rankings on derivatives and leader/initial/separant extraction"""
import logging
import random
from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import GroundElementError, ParseError, RankingError
from ..models.polynomial import DiffPolynomial
from ..models.ring import RingDescriptor
from ..models.variables import BaseVar, DerivVar, Family

logger = logging.getLogger(__name__)

Rank = Tuple[tuple, int]
GROUND_RANK: Rank = ((-1,), 0)


def default_precedence(ring: RingDescriptor) -> List[BaseVar]:
    """Parameters, then t, then the u blocks, then y0 < y1 < ... (lowest first)"""
    return ring.base_vars()


class Ranking(ABC):
    """A total order on derivatives with δθ > θ and θ <= θ' implying δθ <= δθ'"""

    kind = ""

    @abstractmethod
    def key(self, var: DerivVar) -> tuple:
        """Sort key; larger means higher ranked"""
        pass

    @property
    @abstractmethod
    def blocks(self) -> List[List[BaseVar]]:
        """Variable blocks lowest first; orderly inside a block, elimination across blocks"""
        pass

    def position(self, base: BaseVar) -> Tuple[int, int]:
        try:
            return self._positions[base]
        except KeyError:
            raise RankingError(f"variable {base.name} is not covered by the {self.kind} ranking")

    def _index(self):
        self._positions: Dict[BaseVar, Tuple[int, int]] = {}
        for b, block in enumerate(self.blocks):
            for i, base in enumerate(block):
                if base in self._positions:
                    raise RankingError(f"variable {base.name} listed twice in a ranking")
                self._positions[base] = (b, i)

    def bases(self) -> List[BaseVar]:
        return [base for block in self.blocks for base in block]

    def compare(self, a: DerivVar, b: DerivVar) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def highest(self, variables: Iterable[DerivVar]) -> DerivVar:
        return max(variables, key=self.key)

    def leader(self, p: DiffPolynomial) -> DerivVar:
        variables = p.variables()
        if not variables:
            raise GroundElementError(f"{p.render()} lies in the ground field and has no leader")
        return self.highest(variables)

    def initial(self, p: DiffPolynomial) -> DiffPolynomial:
        leader = self.leader(p)
        coefficients = p.coefficients_in(leader)
        return coefficients[max(coefficients)]

    def separant(self, p: DiffPolynomial) -> DiffPolynomial:
        return p.partial(self.leader(p))

    def rank(self, p: DiffPolynomial) -> Rank:
        """(key of the leader, degree in the leader); ground elements rank lowest"""
        if p.is_ground():
            return GROUND_RANK
        leader = self.leader(p)
        return self.key(leader), p.degree(leader)

    def is_orderly_on(self, bases: Iterable[BaseVar]) -> bool:
        """All given variables share one block, so orders compare first among them"""
        return len({self.position(base)[0] for base in bases}) <= 1

    def with_lowest(self, bases: Sequence[BaseVar]) -> 'Ranking':
        """A block ranking with `bases` as a new lowest block, the rest unchanged"""
        moved = set(bases)
        rest = [[b for b in block if b not in moved] for block in self.blocks]
        return BlockRanking([list(bases)] + [block for block in rest if block])

    def restricted(self, ring: RingDescriptor) -> 'Ranking':
        """Same ranking with variables absent from `ring` dropped"""
        blocks = [[b for b in block if ring.contains(b)] for block in self.blocks]
        return ranking_from_blocks([block for block in blocks if block], self.kind)

    def check_axioms(self, variables: Sequence[DerivVar], samples: int, seed: int = 0) -> bool:
        """δθ > θ and monotonicity on random pairs drawn from `variables`"""
        rng = random.Random(seed)
        for _ in range(samples):
            a, b = rng.choice(variables), rng.choice(variables)
            if not self.key(a.shifted(1)) > self.key(a):
                logger.warning(f"ranking {self.kind} fails δθ > θ at {a.name}")
                return False
            if self.key(a) <= self.key(b) and not self.key(a.shifted(1)) <= self.key(b.shifted(1)):
                logger.warning(f"ranking {self.kind} fails monotonicity at {a.name}, {b.name}")
                return False
        return True

    def describe(self) -> str:
        if self.kind == "block":
            return "block:" + "|".join(",".join(b.name for b in block) for block in self.blocks)
        return f"{self.kind}:" + "<".join(b.name for b in self.bases())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ranking) and self.kind == other.kind and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.kind, tuple(tuple(block) for block in self.blocks)))

    def __repr__(self) -> str:
        return f"Ranking({self.describe()})"

    @classmethod
    def orderly(cls, ring: RingDescriptor) -> 'Ranking':
        """Orderly on Y; other families form a lower block when present"""
        ys = ring.y_vars()
        others = [b for b in default_precedence(ring) if b.family != Family.Y]
        if not others:
            return OrderlyRanking(ys)
        return BlockRanking([others, ys])

    @classmethod
    def elimination(cls, ring: RingDescriptor) -> 'Ranking':
        return EliminationRanking(default_precedence(ring))

    @classmethod
    def parse(cls, text: str, ring: RingDescriptor) -> 'Ranking':
        """`orderly`, `elimination`, `orderly:y0<y1`, `elimination:u00<u01<y0<y1` or `block:u00,u01|y0,y1`"""
        kind, _, spec = text.strip().partition(":")
        kind = kind.strip().lower()
        if kind not in ("orderly", "elimination", "block"):
            raise ParseError(f"unknown ranking kind {kind!r}")
        if not spec:
            return cls.orderly(ring) if kind in ("orderly", "block") else cls.elimination(ring)
        from ..algebra.parser import parse_base_var
        if kind == "block":
            blocks = [[parse_base_var(name, ring) for name in chunk.split(",") if name.strip()]
                      for chunk in spec.split("|")]
            return BlockRanking([block for block in blocks if block])
        names = [parse_base_var(name, ring) for name in spec.split("<") if name.strip()]
        return OrderlyRanking(names) if kind == "orderly" else EliminationRanking(names)


class OrderlyRanking(Ranking):
    """Order first, then variable precedence"""

    kind = "orderly"

    def __init__(self, precedence: Sequence[BaseVar]):
        self.precedence = list(precedence)
        self._index()

    @property
    def blocks(self) -> List[List[BaseVar]]:
        return [list(self.precedence)]

    def key(self, var: DerivVar) -> tuple:
        return (var.order, self.position(var.base)[1])


class EliminationRanking(Ranking):
    """Variable precedence first, then order"""

    kind = "elimination"

    def __init__(self, precedence: Sequence[BaseVar]):
        self.precedence = list(precedence)
        self._index()

    @property
    def blocks(self) -> List[List[BaseVar]]:
        return [[base] for base in self.precedence]

    def key(self, var: DerivVar) -> tuple:
        return (self.position(var.base)[0], var.order)


class BlockRanking(Ranking):
    """Elimination across blocks, orderly inside each block"""

    kind = "block"

    def __init__(self, blocks: Sequence[Sequence[BaseVar]]):
        self._blocks = [list(block) for block in blocks]
        self._index()

    @property
    def blocks(self) -> List[List[BaseVar]]:
        return [list(block) for block in self._blocks]

    def key(self, var: DerivVar) -> tuple:
        block, index = self.position(var.base)
        return (block, var.order, index)


def ranking_from_blocks(blocks: List[List[BaseVar]], kind: Optional[str] = None) -> Ranking:
    if kind == "orderly" and len(blocks) == 1:
        return OrderlyRanking(blocks[0])
    if kind == "elimination" and all(len(block) == 1 for block in blocks):
        return EliminationRanking([block[0] for block in blocks])
    return BlockRanking(blocks)
