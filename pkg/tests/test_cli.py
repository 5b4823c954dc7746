import json

import pytest

from src.cli import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE, CommandLine, run
from src.config import Config
from src.models.ground import GroundMode

WRONSKIAN = "y0*y1' - y1*y0'"


def _run(capsys, *argv):
    code = run(list(argv), Config())
    return code, capsys.readouterr().out


def _json(capsys, *argv):
    code, out = _run(capsys, *argv)
    return code, json.loads(out)


def test_dimpoly_output_is_exact(capsys):
    code, out = _run(capsys, "dimpoly", "--ring", "Y=2 field=Q", "--charset", WRONSKIAN)
    assert code == EXIT_OK
    assert out == '{"a1":1,"a0":1,"dim":0,"order":1,"form":"projective"}\n'


def test_rv_output_is_exact(capsys):
    code, out = _run(capsys, "rv", "--variety", "span (1 0 0) (0 1 0)", "--n", "2")
    assert code == EXIT_OK
    assert out == '{"rv":"y0*y1\' - y1*y0\'"}\n'


def test_homog_check_output_is_exact(capsys):
    code, out = _run(capsys, "homog-check", "--ring", "Y=2 field=Q", "y0'")
    assert code == EXIT_OK
    assert out == '{"homogeneous":false,"witness":"t\'*y0"}\n'


def test_identical_invocations_are_byte_identical(capsys):
    argv = ["chow", "--variety", "span (1 0 0) (0 1 0)", "--properties", "--seed", "3"]
    first = _run(capsys, *argv)
    second = _run(capsys, *argv)
    assert first == second


def test_pretty_output(capsys):
    code, out = _run(capsys, "dimpoly", "--ring", "Y=2", "--charset", WRONSKIAN, "--pretty")
    assert code == EXIT_OK
    assert out.startswith('{\n  "a1": 1,')
    assert json.loads(out)['order'] == 1


def test_homogenize_round_trips_through_the_parser(capsys):
    code, payload = _json(capsys, "homogenize", "--ring", "Y=2", "y1'")
    assert payload == {'polynomial': WRONSKIAN, 'denomination': 2}
    code, payload = _json(capsys, "dehomogenize", "--ring", "Y=2", payload['polynomial'])
    assert payload == {'polynomial': "y1'"}


def test_reduce_with_cofactors(capsys):
    code, payload = _json(capsys, "reduce", "--ring", "Y=2", "--ranking", "elimination",
                          "--charset", WRONSKIAN, "--cofactors", "y0*y1'' - y1*y0''")
    assert code == EXIT_OK
    assert payload['remainder'] == "0"
    assert payload['separant_powers'] == [1]
    assert payload['cofactors']


def test_charset_command(capsys):
    code, payload = _json(capsys, "charset", "--ring", "Y=3", "y2", WRONSKIAN, "y0*y2' - y2*y0'")
    assert code == EXIT_OK
    assert payload['charset'] == ["y2", WRONSKIAN]
    assert payload['provenance'] == "computed"


def test_vdelta_command(capsys):
    code, payload = _json(capsys, "vdelta", "--variety", "span (1 0) (0 1)")
    assert payload['generators'] == [WRONSKIAN]
    assert payload['dimension']['dim'] == 0
    assert payload['dimension']['order'] == 1


def test_intersect_command(capsys):
    code, payload = _json(capsys, "intersect", "--ring", "Y=3", "--charset", "y2")
    assert code == EXIT_OK
    assert (payload['dim_before'], payload['dim_after'], payload['order_after']) == (1, 0, 0)
    assert payload['hyperplane'] == "u02*y2 + u01*y1 + u00*y0"


def test_algebraic_chow_command(capsys):
    code, payload = _json(capsys, "chow", "--variety", "point 1 2 3", "--algebraic")
    assert payload['chow'] == "3*u02 + 2*u01 + u00"
    assert payload['kind'] == "algebraic"


def test_chow_from_a_generic_point(capsys):
    code, payload = _json(capsys, "chow", "--ring", "Y=3 S=1", "--charset", "y2", "--point", "1, s, 0")
    assert code == EXIT_OK
    assert payload['chow'] == "u00*u11 - u01*u10"
    assert payload['separant'] == "u11"


def test_lindep_command(capsys):
    code, payload = _json(capsys, "lindep", "--variety", "span (1 0) (0 1)", "--point", "x, x^2")
    assert payload['verdict'] == "independent"
    assert payload['value'] == "x^2 + O(x^15)"
    code, payload = _json(capsys, "lindep", "--variety", "span (1 0) (0 1)", "--point", "2*x, 3*x")
    assert payload['verdict'] == "dependent"


def test_witness_command(capsys):
    code, payload = _json(capsys, "witness", "--variety", "span (1 0 0) (0 1 0)", "--point", "2*x, 3*x, 5")
    assert code == EXIT_OK
    assert payload['witness'] == ["1", "-2/3", "0"]
    assert payload['verified'] is True


def test_verify54_command(capsys):
    code, payload = _json(capsys, "verify54", "--variety", "point 1 2 3")
    assert payload == {'verified': True}


def test_ring_line_in_an_input_file(capsys, tmp_path):
    path = tmp_path / "wronskian.txt"
    path.write_text(f"ring Y=2 field=Q\n# the Wronskian of y0, y1\n{WRONSKIAN}\n", encoding="utf-8")
    code, out = _run(capsys, "dimpoly", "--charset", f"@{path}")
    assert code == EXIT_OK
    assert out == '{"a1":1,"a0":1,"dim":0,"order":1,"form":"projective"}\n'


@pytest.mark.parametrize("argv,error", [
    (["homog-check", "y0'"], "config_error"),
    (["homog-check", "--ring", "Y=2", "y0 +"], "parse_error"),
    (["homog-check", "--ring", "Y=2 T=1", "t*y0"], "parse_error"),
    (["homog-check", "--ring", "Y=2", "y5"], "unknown_variable"),
    (["homog-check", "--ring", "Y=2", "@/nonexistent/input.txt"], "file_not_found"),
    (["homogenize", "--ring", "Y=2", "y0 + y1"], "precondition"),
    (["chow", "--variety", "span (1 0 0) (0 1 0)", "--max-order", "0"], "elimination_failed"),
    (["rv", "--variety", "span (1 0 0) (2 0 0)"], "unsupported_variety"),
])
def test_domain_errors_exit_with_json(capsys, argv, error):
    code, payload = _json(capsys, *argv)
    assert code == EXIT_DOMAIN_ERROR
    assert payload['error'] == error
    assert payload['detail']


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["dimpoly", "--ring", "Y=2"],
    ["lindep", "--variety", "point 1 2", "--point", "1, 2", "--precision", "0"],
    ["chow", "--field", "R"],
])
def test_usage_errors_exit_with_two(capsys, argv):
    code, out = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""


def test_flags_override_the_configuration():
    cli = CommandLine(Config(precision=16))
    args = cli.parser.parse_args(["lindep", "--variety", "point 1 2", "--point", "1, 2",
                                  "--precision", "24", "--field", "Qx", "--ring", "Y=2"])
    session = cli.session(args)
    assert session.config.precision == 24
    assert session.config.field == GroundMode.QX
    assert session.ring.field == GroundMode.QX
