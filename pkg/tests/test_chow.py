import pytest

from src.algebra.parser import parse
from src.chow.algebraic import algebraic_chow, algebraic_generators, chow_ring, kolchin_rv, rv_as_chow_form
from src.chow.elimination import (
    GenericPoint,
    check_generic_point,
    diff_chow,
    diff_chow_variety,
    generic_point,
    vanishes_generically,
    vdelta_charset,
)
from src.chow.properties import (
    chow_ideal_charset,
    chow_property_suite,
    intersection_count,
    poisson_factor_check,
    swap_blocks,
)
from src.dimension import dimension_polynomial
from src.errors import EliminationError, PreconditionError, UnsupportedVarietyError
from src.models.reports import ChowForm, VariableBlock
from src.models.ring import RingDescriptor
from src.models.variety import VarietyKind, VarietySpec
from src.homogeneity import is_p_homogeneous
from src.reduction.charset import asserted_charset
from src.reduction.ranking import Ranking

POINT = "point 1 2 3"
LINE = "span (1 0 0) (0 1 0)"
P1 = "span (1 0) (0 1)"
CONIC = "param 1, s, s^2"


def test_variety_parsing():
    V = VarietySpec.parse(CONIC)
    assert V.kind == VarietyKind.PARAM
    assert (V.n, V.dim, V.param_degree) == (2, 1, 2)
    assert VarietySpec.parse(LINE).dim == 1
    assert VarietySpec.parse(POINT).dim == 0
    with pytest.raises(UnsupportedVarietyError):
        VarietySpec.parse("span (1 0 0) (2 0 0)")
    with pytest.raises(UnsupportedVarietyError):
        VarietySpec.parse("point 0 0")
    with pytest.raises(UnsupportedVarietyError):
        VarietySpec.parse("param s, s^2")


def test_point_chow_form():
    chow = algebraic_chow(VarietySpec.parse(POINT))
    assert chow.polynomial.render() == "3*u02 + 2*u01 + u00"
    assert (chow.dim, chow.order, chow.g) == (0, 0, 1)


def test_line_chow_form_is_a_determinant():
    chow = algebraic_chow(VarietySpec.parse(LINE))
    ring = chow_ring(2, 2)
    assert chow.polynomial == parse("u00*u11 - u01*u10", ring)
    assert swap_blocks(chow.polynomial, 0, 1) == -chow.polynomial


def test_conic_chow_form_has_degree_two_per_block():
    chow = algebraic_chow(VarietySpec.parse(CONIC))
    reports = is_p_homogeneous(chow.polynomial, [VariableBlock.parse("u0"), VariableBlock.parse("u1")])
    assert [r.degree for r in reports] == [2, 2]
    assert chow.g == 2


def test_rv_of_a_line():
    R = kolchin_rv(VarietySpec.parse(LINE), n=2)
    assert R.render() == "y0*y1' - y1*y0'"
    with pytest.raises(PreconditionError):
        kolchin_rv(VarietySpec.parse(LINE), n=3)


def test_rv_of_a_point_is_linear():
    R = kolchin_rv(VarietySpec.parse(POINT))
    assert R.render() == "3*y2 + 2*y1 + y0"


def test_rv_read_as_chow_form():
    chow = rv_as_chow_form(kolchin_rv(VarietySpec.parse(P1)), 1)
    assert chow.order == 1
    assert chow.separant == parse("-u01", chow.polynomial.ring)


def test_algebraic_generators():
    ring = RingDescriptor(y_count=3)
    assert algebraic_generators(VarietySpec.parse(POINT), ring) == [
        parse("y1 - 2*y0", ring), parse("y2 - 3*y0", ring)]
    assert algebraic_generators(VarietySpec.parse(LINE), ring) == [parse("y2", ring)]
    assert algebraic_generators(VarietySpec.parse(CONIC), ring) == [parse("y0*y2 - y1^2", ring)]


@pytest.mark.parametrize("text,order", [(POINT, 0), (LINE, 1), (P1, 1)])
def test_vdelta_dimension_and_order(text, order):
    A = vdelta_charset(VarietySpec.parse(text))
    result = dimension_polynomial(A)
    assert (result.dim, result.order) == (0, order)


def test_generic_point_of_a_line():
    gp = generic_point(VarietySpec.parse(LINE))
    assert gp.render() == ["1", "s0", "0"]
    check_generic_point(gp, vdelta_charset(VarietySpec.parse(LINE)))


def test_differential_chow_form_of_a_line():
    chow = diff_chow_variety(VarietySpec.parse(LINE))
    ring = chow.polynomial.ring
    assert chow.polynomial in (parse("u00*u01' - u01*u00'", ring), parse("u01*u00' - u00*u01'", ring))
    assert (chow.dim, chow.order, chow.g) == (0, 1, 1)


def test_chow_form_from_charset_and_generic_point():
    ring = RingDescriptor.parse("Y=3 S=1")
    A = asserted_charset([parse("y2", ring)], Ranking.orderly(ring))
    gp = GenericPoint.parse("1, s, 0", ring, dimension_polynomial(A).dim)
    chow = diff_chow(gp, A)
    assert chow.polynomial.render() == "u00*u11 - u01*u10"
    assert (chow.dim, chow.order) == (1, 0)
    assert chow.separant.render() == "u11"


def test_generic_point_must_lie_on_the_ideal():
    ring = RingDescriptor.parse("Y=3 S=1")
    A = asserted_charset([parse("y2", ring)], Ranking.orderly(ring))
    with pytest.raises(PreconditionError):
        check_generic_point(GenericPoint.parse("1, s, 1", ring, 1), A)


def test_elimination_bounds_are_reported():
    with pytest.raises(EliminationError) as info:
        diff_chow_variety(VarietySpec.parse(LINE), max_order=0)
    assert info.value.details == {'max_order': 0, 'max_degree': 8}


def test_generic_vanishing():
    gp = generic_point(VarietySpec.parse(LINE))
    ring = gp.ring.with_u_blocks(1, width=3)
    assert vanishes_generically(parse("u00*u01' - u01*u00'", ring), gp)
    assert not vanishes_generically(parse("u00", ring), gp)


@pytest.mark.parametrize("text", [POINT, LINE, P1])
def test_property_suite_on_vdelta_chow_forms(text):
    V = VarietySpec.parse(text)
    report = chow_property_suite(diff_chow_variety(V), V, seed=0)
    assert report.passed, report.failures
    assert report.checks['block_swap_sign'] == "skipped: one block"
    assert report.checks['poisson_factorization'] is True


@pytest.mark.parametrize("text", [POINT, LINE, P1])
def test_property_suite_on_rv(text):
    V = VarietySpec.parse(text)
    report = chow_property_suite(rv_as_chow_form(kolchin_rv(V), V.n))
    assert report.passed, report.failures


def test_property_suite_on_algebraic_forms():
    V = VarietySpec.parse(LINE)
    report = chow_property_suite(algebraic_chow(V), V, seed=0)
    assert report.passed, report.failures
    assert report.checks['block_swap_sign'] is True
    assert report.checks['block_degrees'] == [1, 1]


def test_unverified_poisson_case_is_recorded():
    report = chow_property_suite(algebraic_chow(VarietySpec.parse(CONIC)))
    assert report.checks['poisson_factorization'] == "unverified for g = 2"
    assert report.checks['g'] == 2


def test_intersection_count():
    assert intersection_count(VarietySpec.parse(POINT)) == 1
    assert intersection_count(VarietySpec.parse(LINE), seed=4) == 1


def test_chow_ideal_charset_of_a_line():
    chow = diff_chow_variety(VarietySpec.parse(LINE))
    A = chow_ideal_charset(chow)
    assert len(A) == 3
    assert chow.polynomial in A.elements
    assert {v.name for v in A.base.leaders()} == {"u00'", "y1", "y2"}


@pytest.mark.parametrize("make", [
    lambda: algebraic_chow(VarietySpec.parse(POINT)),
    lambda: algebraic_chow(VarietySpec.parse(LINE)),
    lambda: diff_chow_variety(VarietySpec.parse(LINE)),
    lambda: rv_as_chow_form(kolchin_rv(VarietySpec.parse(P1)), 1),
])
def test_degree_one_forms_factor_through_their_point(make):
    assert poisson_factor_check(make())


def test_factor_point_must_lie_on_every_hyperplane():
    ring = chow_ring(2, 2)
    # linear in the top row, but (S : S1 : S2) = (u11 : u11 - u10 : 0) misses u1
    F = parse("u00*u11 - u01*u10 + u01*u11", ring)
    chow = ChowForm(polynomial=F, dim=1, order=0, n=2, kind="algebraic")
    assert chow.g == 1
    assert not poisson_factor_check(chow)
    report = chow_property_suite(chow)
    assert report.checks['poisson_factorization'] is False
    assert "poisson_factorization" in report.failures


def test_factor_check_rejects_a_nonlinear_top_row():
    ring = chow_ring(1, 1)
    chow = ChowForm(polynomial=parse("u00*u01 + u01^2", ring), dim=0, order=0, n=1, kind="algebraic")
    assert not poisson_factor_check(chow)
    assert not poisson_factor_check(algebraic_chow(VarietySpec.parse(CONIC)))
