"""Tests for the kfc v1 codec."""

import pytest

from knotfloer.complexes import figure_eight, parse, read_complex, serialize, trefoil
from knotfloer.utils.errors import ComplexValidationError, DomainError, KfcSyntaxError

TREFOIL_TEXT = """\
# kfc v1
field F2
generator a grw 0 grz -2
generator b grw -1 grz -1
generator c grw -2 grz 0
edge b a U 1 V 0
edge b c U 0 V 1
"""


def test_serialize_is_canonical():
    assert serialize(trefoil()) == TREFOIL_TEXT


def test_parse_accepts_comments_and_any_order():
    text = """\
# kfc v1
# right-handed trefoil
field F2

generator c grw -2 grz 0
generator b grw -1 grz -1
generator a grw 0 grz -2
edge b c U 0 V 1
edge b a U 1 V 0
"""
    assert parse(text) == trefoil()


def test_parse_serialize_agree_on_fixtures():
    C = figure_eight()
    assert parse(serialize(C)) == C


def test_rational_gradings():
    text = "# kfc v1\nfield F2\ngenerator x grw 1/2 grz 1/2\n"
    (g,) = parse(text).generators
    assert g.alexander == 0


@pytest.mark.parametrize(
    "text,line",
    [
        ("field F2\n", 1),
        ("# kfc v1\nfield Z\n", 2),
        ("# kfc v1\nfield F2\nfield F2\n", 3),
        ("# kfc v1\nfield F2\ngenerator a grw 0\n", 3),
        ("# kfc v1\nfield F2\ngenerator a grw 0.5 grz 0\n", 3),
        ("# kfc v1\nfield F2\ngenerator a grw 0 grz 0\ngenerator a grw 0 grz 0\n", 4),
        ("# kfc v1\nfield F2\ngenerator a grw 0 grz 0\nedge a b U 0 V 0\n", 4),
        ("# kfc v1\nfield F2\ngenerator a grw 0 grz 0\nedge a a U -1 V 0\n", 4),
        ("# kfc v1\nfield F2\nvertex a\n", 3),
        ("# kfc v1\ngenerator a grw 0 grz 0\n", 2),
    ],
)
def test_syntax_errors_carry_line_numbers(text, line):
    with pytest.raises(KfcSyntaxError) as excinfo:
        parse(text)
    assert excinfo.value.line_number == line
    assert excinfo.value.exit_code == 2


def test_invalid_complex_is_rejected():
    text = TREFOIL_TEXT.replace("generator a grw 0 grz -2", "generator a grw 1 grz -2")
    with pytest.raises(ComplexValidationError) as excinfo:
        parse(text)
    assert [v.kind for v in excinfo.value.violations] == ["homogeneity"]


def test_read_complex(trefoil_file, tmp_path):
    assert read_complex(trefoil_file) == trefoil()
    with pytest.raises(DomainError):
        read_complex(tmp_path / "missing.kfc")
