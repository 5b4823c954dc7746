import pytest

from src.algebra.parser import parse
from src.dimension import (
    check_sum_formula,
    dimension_polynomial,
    free_derivative_count,
    generic_hyperplane,
    intersect_generic_hyperplane,
    intersect_generic_hyperplanes,
    parametric_set,
)
from src.errors import HomogeneityError, PreconditionError
from src.models.reports import AFFINE
from src.models.ring import RingDescriptor
from src.models.variables import y
from src.projective import dehomogenize_charset
from src.reduction.charset import asserted_charset
from src.reduction.ranking import Ranking

# (y count, characteristic set) pairs of homogeneous prime ideals, y0 never a leader
SUM_FORMULA_CORPUS = [
    (2, ["y0*y1' - y1*y0'"]),
    (3, ["y2"]),
    (4, ["y3", "y2"]),
    (3, ["y0*y2' - y2*y0'"]),
    (3, ["y0*y2 - y1^2"]),
    (2, ["y0^2*y1'' - y0*y1*y0'' - 2*y0*y0'*y1' + 2*y1*y0'^2"]),
    (3, ["y2", "y0*y1' - y1*y0'"]),
    (3, ["y1*y2' - y2*y1'"]),
    (4, ["y3", "y0*y2' - y2*y0'"]),
    (3, ["y1 - y0"]),
    (3, ["y2 - 2*y1", "y0*y1' - y1*y0'"]),
    (4, ["y0*y3' - y3*y0'", "y0*y2' - y2*y0'"]),
]


def _charset(y_count, texts, ranking_text="orderly"):
    ring = RingDescriptor(y_count=y_count)
    return asserted_charset([parse(text, ring) for text in texts], Ranking.parse(ranking_text, ring))


def test_wronskian_dimension_polynomial():
    result = dimension_polynomial(_charset(2, ["y0*y1' - y1*y0'"]))
    assert result.to_dict() == {'a1': 1, 'a0': 1, 'dim': 0, 'order': 1, 'form': "projective"}


def test_hyperplane_dimension_polynomial():
    result = dimension_polynomial(_charset(3, ["y2"]))
    assert (result.a1, result.a0, result.dim, result.order) == (2, 0, 1, 0)


def test_affine_normal_form():
    A = dehomogenize_charset(_charset(2, ["y0*y1' - y1*y0'"]))
    result = dimension_polynomial(A, AFFINE)
    assert (result.a1, result.a0, result.dim) == (0, 1, 0)


def test_affine_form_rejects_y0_leader():
    with pytest.raises(PreconditionError):
        dimension_polynomial(_charset(2, ["y0 - y1"], "orderly:y1<y0"), AFFINE)


def test_non_orderly_ranking_is_recomputed():
    A = _charset(3, ["y2 - y1'"], "elimination")
    result = dimension_polynomial(A)
    assert (result.dim, result.order) == (1, 1)


def test_lattice_count():
    leaders = [y(1, 1)]
    assert [free_derivative_count(leaders, [y(0).base, y(1).base], t) for t in range(4)] == [2, 3, 4, 5]


@pytest.mark.parametrize("y_count,texts", SUM_FORMULA_CORPUS)
def test_sum_formula(y_count, texts):
    assert check_sum_formula(_charset(y_count, texts))


def test_parametric_set():
    assert parametric_set(_charset(3, ["y2"])) == [y(0).base, y(1).base]


@pytest.mark.parametrize("y_count,texts", SUM_FORMULA_CORPUS)
def test_generic_intersection_over_the_corpus(y_count, texts):
    A = _charset(y_count, texts)
    before = dimension_polynomial(A)
    assert len(parametric_set(A)) == before.dim + 1
    if before.dim < 1:
        with pytest.raises(PreconditionError):
            intersect_generic_hyperplane(A)
        return
    result = intersect_generic_hyperplane(A)
    assert (result.dim_before, result.order_before) == (before.dim, before.order)
    assert (result.dim_after, result.order_after) == (before.dim - 1, before.order)
    assert len(parametric_set(result.charset_out)) == before.dim


def test_intersection_of_a_plane():
    result = intersect_generic_hyperplane(_charset(3, ["y2"]))
    assert (result.dim_before, result.dim_after, result.order_after) == (1, 0, 0)
    assert len(result.charset_out) == 2
    assert result.hyperplane.render() == "u02*y2 + u01*y1 + u00*y0"


def test_intersection_of_a_line_in_p3():
    result = intersect_generic_hyperplane(_charset(4, ["y3", "y2"]))
    assert (result.dim_after, result.order_after) == (0, 0)


def test_intersection_keeps_the_order():
    result = intersect_generic_hyperplane(_charset(3, ["y1*y2' - y2*y1'"]))
    assert (result.dim_before, result.order_before, result.dim_after, result.order_after) == (1, 1, 0, 1)


def test_intersection_needs_positive_dimension():
    with pytest.raises(PreconditionError):
        intersect_generic_hyperplane(_charset(2, ["y0*y1' - y1*y0'"]))


def test_intersection_needs_homogeneous_input():
    with pytest.raises(HomogeneityError):
        intersect_generic_hyperplane(_charset(3, ["y2 - y1'"]))


def test_repeated_intersection_reaches_dimension_zero():
    steps = intersect_generic_hyperplanes(_charset(4, ["y3"]), 2)
    assert [step.dim_after for step in steps] == [1, 0]
    assert all(step.order_after == 0 for step in steps)
    with pytest.raises(PreconditionError):
        intersect_generic_hyperplanes(_charset(4, ["y3"]), 3)


def test_affine_intersection():
    ring = RingDescriptor(y_count=3)
    A = asserted_charset([parse("y2", ring)], Ranking.orderly(ring))
    result = intersect_generic_hyperplane(A, affine=True)
    assert (result.dim_before, result.dim_after) == (1, 0)


def test_affine_hyperplane_shape():
    ring = RingDescriptor.parse("Y=2 U=1x2")
    assert generic_hyperplane(ring, 0, affine=True) == parse("u00 + u01*y1", ring)
