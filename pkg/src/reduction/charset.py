"""Wu-Ritt characteristic sets and saturation membership"""
import logging
from typing import Iterable, List, Sequence

from ..errors import EngineInvariantError, PreconditionError, UnitIdealError
from ..models.charset import AutoreducedSet, CharSet, Provenance
from ..models.polynomial import DiffPolynomial
from .ranking import Ranking
from .reduce import autoreduced_set, is_reduced, pseudo_remainder, rank_key

logger = logging.getLogger(__name__)


def compare_rank_sequences(a: Sequence[tuple], b: Sequence[tuple]) -> int:
    """Ritt's order: first differing rank decides; otherwise the longer sequence is lower"""
    for ra, rb in zip(a, b):
        if ra < rb:
            return -1
        if ra > rb:
            return 1
    if len(a) > len(b):
        return -1
    if len(a) < len(b):
        return 1
    return 0


def rank_compare(A: AutoreducedSet, B: AutoreducedSet) -> int:
    """-1 when A is lower than B, 0 when equal in rank, 1 when higher"""
    return compare_rank_sequences(A.ranks(), B.ranks())


def basic_set(pool: Iterable[DiffPolynomial], ranking: Ranking) -> AutoreducedSet:
    """A lowest-rank autoreduced subset, chosen greedily with deterministic tie-breaks"""
    chosen: List[DiffPolynomial] = []
    for p in sorted((p for p in pool if not p.is_ground()), key=lambda p: rank_key(p, ranking)):
        if all(is_reduced(p, [q], ranking) for q in chosen):
            chosen.append(p)
    return AutoreducedSet(tuple(chosen), ranking)


def splitting_log(A: AutoreducedSet) -> List[DiffPolynomial]:
    """Non-ground initials and separants the saturation divides by"""
    log: List[DiffPolynomial] = []
    for p in A:
        for factor in (A.ranking.initial(p), A.ranking.separant(p)):
            if factor.is_ground():
                continue
            factor = factor.normalized()
            if factor not in log:
                log.append(factor)
    return log


def charset(generators: Iterable[DiffPolynomial], ranking: Ranking,
            provenance: Provenance = Provenance.COMPUTED) -> CharSet:
    """Iterate basic set selection and reduction until every pool element reduces to zero"""
    pool: List[DiffPolynomial] = []
    for g in generators:
        if not g:
            continue
        if g.is_ground():
            raise UnitIdealError(f"the generators contain the nonzero ground element {g.render()}")
        g = g.normalized()
        if g not in pool:
            pool.append(g)
    if not pool:
        raise PreconditionError("charset needs at least one nonzero generator")

    history: List[tuple] = []
    while True:
        basic = basic_set(pool, ranking)
        ranks = tuple(basic.ranks())
        if history and compare_rank_sequences(ranks, history[-1]) >= 0:
            raise EngineInvariantError("characteristic set iteration failed to lower the rank")
        history.append(ranks)
        logger.info(f"charset iteration {len(history)}: basic set {basic.render()}")

        remainders: List[DiffPolynomial] = []
        for f in pool:
            if f in basic.elements:
                continue
            r = pseudo_remainder(f, basic, ranking).remainder
            if not r:
                continue
            if r.is_ground():
                raise UnitIdealError(f"{f.render()} reduces to the nonzero ground element {r.render()}")
            r = r.normalized()
            if r not in pool and r not in remainders:
                remainders.append(r)
        if not remainders:
            break
        pool.extend(remainders)

    return CharSet(
        base=basic,
        provenance=provenance,
        splitting_log=tuple(splitting_log(basic)),
        rank_history=tuple(history),
    )


def asserted_charset(elements: Iterable[DiffPolynomial], ranking: Ranking) -> CharSet:
    """Take elements as the characteristic set of a prime ideal, checking autoreducedness only"""
    base = autoreduced_set((p.normalized() for p in elements if p), ranking)
    return CharSet(base=base, provenance=Provenance.ASSERTED_PRIME,
                   splitting_log=tuple(splitting_log(base)), rank_history=(tuple(base.ranks()),))


def sat_membership(f: DiffPolynomial, A: CharSet) -> bool:
    """f ∈ sat(A) for a characteristic set of a prime ideal"""
    if not f:
        return True
    return not pseudo_remainder(f, A.base).remainder
