import random

import pytest

from src.algebra.parser import parse
from src.errors import PreconditionError, UnitIdealError
from src.models.variables import y
from src.projective import hm_companion_remainder, hm_polynomial, prolongation_certificate
from src.reduction.charset import asserted_charset, charset, compare_rank_sequences, sat_membership
from src.reduction.ranking import BlockRanking, EliminationRanking, OrderlyRanking, Ranking
from src.reduction.reduce import autoreduced_set, certificate_holds, is_reduced, pseudo_remainder


def test_orderly_and_elimination_leaders(P, ring2):
    p = P("y1^2 + y0''")
    assert Ranking.orderly(ring2).leader(p) == y(0, 2)
    assert Ranking.elimination(ring2).leader(p) == y(1)
    assert Ranking.elimination(ring2).initial(p) == P("1")
    assert Ranking.elimination(ring2).separant(p) == P("2*y1")


def test_ranking_parse(ring3):
    assert Ranking.parse("orderly", ring3) == OrderlyRanking(ring3.y_vars())
    ranking = Ranking.parse("elimination:y2<y0<y1", ring3)
    assert isinstance(ranking, EliminationRanking)
    assert ranking.leader(parse("y0^(3) + y1", ring3)) == y(1)
    block = Ranking.parse("block:y0|y1,y2", ring3)
    assert isinstance(block, BlockRanking)
    assert block.leader(parse("y0' + y2", ring3)) == y(2)


@pytest.mark.parametrize("name", ["orderly", "elimination", "block:y0|y1,y2"])
def test_ranking_axioms(ring3, name):
    variables = [y(j, k) for j in range(3) for k in range(6)]
    assert Ranking.parse(name, ring3).check_axioms(variables, samples=10_000, seed=1)


def test_reduction_by_wronskian(P, ring2):
    A = autoreduced_set([P("y0*y1' - y1*y0'")], EliminationRanking(ring2.y_vars()))
    result = pseudo_remainder(P("y0*y1'' - y1*y0''"), A)
    assert not result.remainder
    assert result.separant_powers == (1,)


def test_reduction_with_ground_leading_coefficient(P, ring2):
    A = autoreduced_set([P("y1 - y0^2")], Ranking.orderly(ring2))
    result = pseudo_remainder(P("y1' - 2*y0*y0'"), A)
    assert not result.remainder
    assert result.multiplier == P("1")


def test_cofactors_reconstruct_the_reduction(P, ring2):
    A = autoreduced_set([P("y0*y1' - y1*y0'")], EliminationRanking(ring2.y_vars()))
    f = P("y0^2*y1^(3) + y1*y0'")
    result = pseudo_remainder(f, A, with_cofactors=True)
    assert certificate_holds(f, A, result)
    assert is_reduced(result.remainder, A.elements, A.ranking)


def test_certificates_on_random_pairs(ring2, random_polynomial):
    rng = random.Random(5)
    rankings = [Ranking.orderly(ring2), Ranking.elimination(ring2)]
    for k in range(100):
        ranking = rankings[k % 2]
        a = random_polynomial(rng, ring2, [0, 1], max_degree=2, max_order=2, max_terms=2)
        f = random_polynomial(rng, ring2, [0, 1], max_degree=3, max_order=3, max_terms=3)
        A = autoreduced_set([a], ranking)
        result = pseudo_remainder(f, A, with_cofactors=True)
        assert certificate_holds(f, A, result)
        assert is_reduced(result.remainder, A.elements, ranking)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_hm_identity_reduces_to_zero(m):
    assert not hm_companion_remainder(m)


def test_hm_closed_form():
    for m in range(2, 7):
        assert hm_polynomial(m) == parse(f"y0^{m - 2}*y0^({m})", hm_polynomial(m).ring)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_prolongation_certificate(k, n):
    result, b = prolongation_certificate(k, n)
    assert not result.remainder
    assert b >= 1


def test_charset_of_wronskian_system(ring3):
    generators = [parse(text, ring3) for text in ("y2", "y0*y1' - y1*y0'", "y0*y2' - y2*y0'")]
    A = charset(generators, Ranking.orderly(ring3))
    assert A.base.render() == ["y2", "y0*y1' - y1*y0'"]
    assert [p.render() for p in A.splitting_log] == ["y0"]
    assert A.to_dict()['provenance'] == "computed"


@pytest.mark.parametrize("ranking_name", ["orderly", "elimination"])
def test_charset_invariants_on_random_generators(ring2, random_polynomial, ranking_name):
    rng = random.Random(17)
    ranking = Ranking.parse(ranking_name, ring2)
    computed = 0
    for _ in range(25):
        generators = [random_polynomial(rng, ring2, [0, 1], max_degree=2, max_order=1, max_terms=2)
                      for _ in range(2)]
        try:
            A = charset(generators, ranking)
        except UnitIdealError:
            continue
        computed += 1
        for g in generators:
            assert not pseudo_remainder(g, A.base).remainder
        history = A.rank_history
        assert all(compare_rank_sequences(later, earlier) < 0 for earlier, later in zip(history, history[1:]))
        assert tuple(A.base.ranks()) == history[-1]
    assert computed


def test_charset_detects_unit_ideal(P, ring2):
    with pytest.raises(UnitIdealError):
        charset([P("y0"), P("y0 + 1")], Ranking.orderly(ring2))


def test_sat_membership(P, ring2):
    A = asserted_charset([P("y0*y1' - y1*y0'")], Ranking.orderly(ring2))
    assert sat_membership(P("y0*y1'' - y1*y0''"), A)
    assert not sat_membership(P("y1'"), A)


def test_asserted_charset_rejects_non_autoreduced(P, ring2):
    with pytest.raises(PreconditionError):
        asserted_charset([P("y1"), P("y1' + y0")], Ranking.orderly(ring2))
