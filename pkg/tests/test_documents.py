"""Input document parsing: happy paths and line-numbered rejections."""

import pytest

from scaleflat.cli.documents import (
    DocumentError,
    family_from_document,
    load_text,
    parse_document,
    system_from_document,
)

SYSTEM_DOC = """\
# quadratic example
f11 = z1^2
f12 = 0   # trailing comment
f22 = 0
"""


def test_parse_document_basics():
    table = parse_document(SYSTEM_DOC)
    assert table == {"f11": ("z1^2", 2), "f12": ("0", 3), "f22": ("0", 4)}


def test_parse_document_skips_blank_and_comment_lines():
    assert parse_document("\n# only a comment\n\n") == {}


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("f11\n", 1, "expected 'key = expression'"),
        ("= z1\n", 1, "missing key"),
        ("f11 =\n", 1, "missing expression"),
        ("f11 = 1\nf11 = 2\n", 2, "duplicate key"),
    ],
)
def test_parse_document_rejections(text, line, fragment):
    with pytest.raises(DocumentError) as err:
        parse_document(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_system_from_document():
    sys = system_from_document(SYSTEM_DOC)
    assert str(sys.f11) == "z1^2"
    assert sys.f12.is_zero and sys.f22.is_zero


def test_system_document_missing_keys_are_listed():
    with pytest.raises(DocumentError, match="missing keys: f12, f22"):
        system_from_document("f11 = 0\n")


def test_system_document_unknown_key():
    with pytest.raises(DocumentError, match="unknown key 'f21'"):
        system_from_document("f11 = 0\nf21 = 0\nf12 = 0\nf22 = 0\n")


def test_system_document_bad_expression_carries_key_and_line():
    with pytest.raises(DocumentError, match="line 2: f12:"):
        system_from_document("f11 = 0\nf12 = )(\nf22 = 0\n")


def test_system_document_rejects_solution_chart_names():
    with pytest.raises(DocumentError, match="f11"):
        system_from_document("f11 = Z1\nf12 = 0\nf22 = 0\n")


def test_family_from_document():
    family = family_from_document(
        "h = X1*x1 + X2*x2 + Y\ninverse.x1 = -Z1\ninverse.x2 = -Z2\n"
    )
    assert family.inverse is not None
    assert str(family.inverse["x1"]) == "-Z1"


def test_family_without_inverse():
    family = family_from_document("h = X1*x1 + X2*x2 + Y\n")
    assert family.inverse is None


def test_family_inverse_must_come_paired():
    with pytest.raises(DocumentError, match="pair"):
        family_from_document("h = X1*x1 + X2*x2 + Y\ninverse.x1 = -Z1\n")


def test_family_needs_h():
    with pytest.raises(DocumentError, match="missing key: h"):
        family_from_document("inverse.x1 = -Z1\ninverse.x2 = -Z2\n")


def test_load_text_missing_file():
    with pytest.raises(DocumentError, match="cannot read"):
        load_text("/nonexistent/input.sys")


def test_load_text_roundtrip(tmp_path):
    target = tmp_path / "sys.txt"
    target.write_text(SYSTEM_DOC)
    assert load_text(str(target)) == SYSTEM_DOC
