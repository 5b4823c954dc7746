import pytest

from src.algebra.parser import parse
from src.errors import HomogeneityError, PreconditionError
from src.models.ring import RingDescriptor
from src.projective import (
    dehomogenize,
    dehomogenize_charset,
    homogenize,
    homogenize_charset,
    prolong_hyperplane,
    vdelta_generators,
    wronskian_minor,
)
from src.reduction.charset import asserted_charset
from src.reduction.ranking import Ranking


def test_dehomogenize_sets_y0_to_one(P):
    assert dehomogenize(P("y0*y1' - y1*y0'")) == P("y1'")
    assert dehomogenize(P("y0^2*y1 + y0''")) == P("y1")


def test_homogenize_records_the_denomination(P):
    result = homogenize(P("y1'"))
    assert result.polynomial == P("y0*y1' - y1*y0'")
    assert result.denomination == 2
    assert homogenize(P("y1 + 1")).to_dict() == {'polynomial': "y1 + y0", 'denomination': 1}


def test_homogenize_rejects_y0(P):
    with pytest.raises(PreconditionError):
        homogenize(P("y0 + y1"))


def test_charset_round_trip(ring3):
    ranking = Ranking.orderly(ring3)
    affine = asserted_charset([parse("y2 - y1^2", ring3), parse("y1'", ring3)], ranking)
    projective = homogenize_charset(affine)
    assert projective.base.render() == ["y0*y2 - y1^2", "y0*y1' - y1*y0'"]
    back = dehomogenize_charset(projective)
    assert back.elements == affine.elements


def test_dehomogenize_charset_needs_homogeneous_elements(P, ring2):
    with pytest.raises(HomogeneityError):
        dehomogenize_charset(asserted_charset([P("y1' - y0")], Ranking.orderly(ring2)))


def test_dehomogenize_charset_rejects_y0_leader(P, ring2):
    ranking = Ranking.parse("orderly:y1<y0", ring2)
    with pytest.raises(PreconditionError):
        dehomogenize_charset(asserted_charset([P("y0*y1' - y1*y0'")], ranking))


def test_vdelta_generators_add_all_wronskian_minors(ring3):
    generators = vdelta_generators([parse("y2", ring3)], 2, ring3)
    assert [g.render() for g in generators] == [
        "y2", "y0*y1' - y1*y0'", "y0*y2' - y2*y0'", "y1*y2' - y2*y1'"]
    assert wronskian_minor(1, 0, ring3) == -wronskian_minor(0, 1, ring3)


def test_vdelta_generators_must_be_algebraic(ring3):
    with pytest.raises(PreconditionError):
        vdelta_generators([parse("y2'", ring3)], 2, ring3)


def test_prolonged_hyperplane():
    ring = RingDescriptor.parse("Y=2 U=1x2")
    assert prolong_hyperplane(1, ring) == parse("u00*y0' + u01*y1' + u00'*y0 + u01'*y1", ring)
