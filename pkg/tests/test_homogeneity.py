import random

import pytest

from src.algebra.parser import parse
from src.errors import PreconditionError
from src.homogeneity import (
    check_partials_homogeneous,
    check_separant_initial_homogeneous,
    homogeneity_degrees,
    is_diff_homogeneous,
    is_homogeneous_ideal,
    is_p_homogeneous,
    scale_substitute,
)
from src.models.polynomial import DiffPolynomial
from src.models.reports import VariableBlock
from src.models.ring import RingDescriptor
from src.models.variables import y
from src.projective import homogenize
from src.reduction.charset import asserted_charset
from src.reduction.ranking import Ranking


def test_derivative_is_not_homogeneous(P):
    report = is_diff_homogeneous(P("y0'"))
    assert not report.homogeneous
    assert report.to_dict() == {'homogeneous': False, 'witness': "t'*y0"}


def test_wronskian_is_homogeneous_of_degree_two(P):
    report = is_diff_homogeneous(P("y0*y1' - y1*y0'"))
    assert report.homogeneous and report.degree == 2
    assert report.to_dict() == {'homogeneous': True, 'degree': 2}


def test_algebraically_homogeneous_but_mixed_orders(P):
    assert not is_diff_homogeneous(P("y0*y1' + y1^2")).homogeneous


def test_scale_substitute_expands_leibniz(P):
    scaled = scale_substitute(P("y0''"))
    assert scaled == parse("t*y0'' + 2*t'*y0' + t''*y0", scaled.ring)


def test_p_homogeneity_over_blocks():
    ring = RingDescriptor.parse("Y=2 U=2x2")
    F = parse("u00*u11 - u01*u10", ring)
    reports = is_p_homogeneous(F, [VariableBlock.parse("u0"), VariableBlock.parse("u1")])
    assert [r.degree for r in reports] == [1, 1]
    assert homogeneity_degrees(F, [VariableBlock.parse("u0"), VariableBlock.parse("u1")]) == [1, 1]
    with pytest.raises(PreconditionError):
        homogeneity_degrees(parse("u00' + u10", ring), [VariableBlock.parse("u0")])
    with pytest.raises(PreconditionError):
        is_p_homogeneous(F, [VariableBlock.parse("u0"), VariableBlock.parse("u0")])


def test_zero_polynomial_has_no_degree(P):
    with pytest.raises(PreconditionError):
        is_diff_homogeneous(P("0"))


def test_homogeneous_ideal_criterion(P, ring2):
    ranking = Ranking.orderly(ring2)
    assert is_homogeneous_ideal(asserted_charset([P("y0*y1' - y1*y0'")], ranking))
    assert not is_homogeneous_ideal(asserted_charset([P("y1' - y0")], ranking))


def _affine_polynomial(rng: random.Random, ring: RingDescriptor) -> DiffPolynomial:
    """Up to two terms of degree <= 4 whose derivative orders add up to at most 3"""
    n = ring.y_count - 1
    while True:
        terms = []
        for _ in range(rng.randint(1, 2)):
            degree = rng.randint(1, 4)
            orders = [0] * degree
            for _ in range(rng.randint(0, 3)):
                orders[rng.randrange(degree)] += 1
            term = DiffPolynomial.constant(ring, rng.choice([-2, -1, 1, 3]))
            for order in orders:
                term = term * DiffPolynomial.var(ring, y(rng.randint(1, n), order))
            terms.append(term)
        if rng.random() < 0.5:
            terms.append(DiffPolynomial.constant(ring, rng.randint(1, 5)))
        p = DiffPolynomial.sum(ring, terms)
        if p and not p.is_ground():
            return p


def test_homogenized_corpus_satisfies_separant_and_partial_checks():
    rng = random.Random(2024)
    for k in range(200):
        ring = RingDescriptor(y_count=2 + k % 3)
        f = homogenize(_affine_polynomial(rng, ring)).polynomial
        assert is_diff_homogeneous(f).homogeneous
        for ranking in (Ranking.orderly(ring), Ranking.elimination(ring)):
            assert check_separant_initial_homogeneous(f, ranking)
        assert check_partials_homogeneous(f)


def _homogeneous_corpus(seed: int, count: int):
    rng = random.Random(seed)
    for k in range(count):
        ring = RingDescriptor(y_count=2 + k % 3)
        yield rng, homogenize(_affine_polynomial(rng, ring)).polynomial


def test_products_add_degrees():
    for rng, f in _homogeneous_corpus(11, 60):
        g = homogenize(_affine_polynomial(rng, f.ring)).polynomial
        m, n = is_diff_homogeneous(f).degree, is_diff_homogeneous(g).degree
        report = is_diff_homogeneous(f * g)
        assert report.homogeneous
        assert report.degree == m + n


def test_derivatives_keep_the_degree():
    for _, f in _homogeneous_corpus(12, 60):
        report = is_diff_homogeneous(f.differentiate())
        assert report.homogeneous
        assert report.degree == is_diff_homogeneous(f).degree


def test_scaling_commutes_with_the_derivation(ring3, random_polynomial):
    rng = random.Random(13)
    for _ in range(100):
        f = random_polynomial(rng, ring3, [0, 1, 2], max_degree=3, max_order=2, max_terms=3)
        assert scale_substitute(f).differentiate() == scale_substitute(f.differentiate())
    for _, f in _homogeneous_corpus(14, 40):
        assert scale_substitute(f).differentiate(2) == scale_substitute(f.differentiate(2))
