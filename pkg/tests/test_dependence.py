import pytest
from sympy import QQ

from src.algebra.parser import parse_ground
from src.chow.dependence import lindep_test, render_coordinate, sf_witness, verify_thm_5_4, witness_generators
from src.chow.elimination import diff_chow_variety
from src.errors import InconclusiveError, PrecisionError, PreconditionError, RingMismatchError
from src.models.reports import Verdict
from src.models.series import DiffPoint, TruncatedSeries
from src.models.variety import VarietySpec

LINE = VarietySpec.parse("span (1 0 0) (0 1 0)")
P1 = VarietySpec.parse("span (1 0) (0 1)")


def _point(text, precision=16):
    return DiffPoint.of([parse_ground(piece) for piece in text.split(",")], precision)


def test_independent_pair():
    verdict = lindep_test(P1, _point("x, x^2"))
    assert verdict.verdict == Verdict.INDEPENDENT
    assert verdict.value_of_F == TruncatedSeries.from_coefficients([0, 0, 1], 15)
    assert verdict.value_of_F.precision == 15
    assert verdict.witness is None


def test_dependent_pair_gets_a_witness():
    verdict = lindep_test(P1, _point("2*x, 3*x"))
    assert verdict.verdict == Verdict.DEPENDENT
    assert verdict.value_of_F.is_zero()
    assert not verdict.separant_value.is_zero()
    assert verdict.witness[0].coefficient(0) == QQ(1)
    assert verdict.witness[1].coefficient(0) == QQ(-2, 3)
    assert verdict.to_dict()['verdict'] == "dependent"


def test_vanishing_separant_is_inconclusive():
    verdict = lindep_test(P1, _point("x, 0"))
    assert verdict.verdict == Verdict.INCONCLUSIVE
    assert verdict.witness is None


def test_lindep_checks_arity_and_precision():
    with pytest.raises(RingMismatchError):
        lindep_test(P1, _point("x, x^2, 1"))
    with pytest.raises(PrecisionError):
        lindep_test(P1, _point("x, x^2", precision=5))


def test_witness_on_a_line():
    chow = diff_chow_variety(LINE)
    result = sf_witness(chow, [_point("2*x, 3*x, 5")], witness_generators(LINE))
    assert result.rendered == ("1", "-2/3", "0")
    assert result.verified
    assert result.checks == {'generators': True, 'hyperplanes': True, 'chow_ideal': True}


def test_witness_preconditions():
    chow = diff_chow_variety(LINE)
    with pytest.raises(PreconditionError):
        sf_witness(chow, [_point("1, x, 0")])
    with pytest.raises(InconclusiveError):
        sf_witness(chow, [_point("x, 0, 1")])
    with pytest.raises(PreconditionError):
        sf_witness(chow, [_point("2*x, 3*x, 5"), _point("2*x, 3*x, 5")])
    with pytest.raises(RingMismatchError):
        sf_witness(chow, [_point("2*x, 3*x")])


@pytest.mark.parametrize("text", ["point 1 2 3", "span (1 0 0) (0 1 0)", "span (1 0) (0 1)"])
def test_rv_matches_the_chow_form_of_vdelta(text):
    assert verify_thm_5_4(VarietySpec.parse(text))


def test_render_coordinate():
    assert render_coordinate(TruncatedSeries.constant(QQ(-2, 3), 5)) == "-2/3"
    assert render_coordinate(TruncatedSeries.from_coefficients([1, 0, -2], 4)) == "1 - 2*x^2 + O(x^4)"
