import pytest

from conftest import FIXTURES, fixture_text, load, published_table
from primhom.errors import GrammarError, MalformedTable, SemanticError
from primhom.formats import (
    decision_section,
    emit_group_file,
    emit_table_file,
    parse_group_file,
    parse_report,
    parse_table_file,
    render_report,
)
from primhom.decide import decide_property_ii


@pytest.mark.parametrize("name", FIXTURES)
def test_group_file_round_trip(name):
    gf = parse_group_file(fixture_text(name + ".grp"))
    text = emit_group_file(gf)
    again = parse_group_file(text)
    assert again == gf
    assert emit_group_file(again) == text


@pytest.mark.parametrize("name", FIXTURES)
def test_table_file_round_trip(name):
    _, _, _, t = load(name)
    text = emit_table_file(t, comment="round trip")
    back = parse_table_file(text)
    assert back.values == t.values
    assert back.class_sizes == t.class_sizes
    assert back.element_orders == t.element_orders
    assert back.power_map.table == t.power_map.table
    assert emit_table_file(back, comment="round trip") == text
    # the approximate column is a comment and does not affect parsing
    assert parse_table_file(emit_table_file(t, approx=True)).values == t.values


def test_published_table_round_trip():
    t = published_table()
    assert parse_table_file(emit_table_file(t)).values == t.values


def test_permutation_file_parses_to_the_cyclic_group():
    gf = parse_group_file("format: permutation\nprime: 2\ndegree: 4\ngenerator: 1 2 3 0\n")
    g = gf.build()
    assert g.order == 4 and g.is_abelian()


def test_q8_presentation_file():
    text = ("format: presentation\nprime: 2\ngenerators: x, y\n"
            "relation: x^4\nrelation: x^2*y^-2\nrelation: y*x*y^-1*x\n")
    assert parse_group_file(text).build().order == 8


def test_g128_presentation_file():
    gf, g, _, _ = load("g128")
    assert g.order == 128
    assert gf.generator_names == ["a", "b", "c"]


@pytest.mark.parametrize("text,line,column", [
    ("format: presentation\nprime: 2\ngenerators: x\nrelation: x^^2\n", 4, 13),
    ("format: presentation\nprime: 2\ngenerators: x\nrelation: (x^2\n", 4, 15),
    ("format: permutation\nprime: 2\ndegree: two\n", 3, 9),
    ("prime: 2\n", 1, 1),
    ("format: permutation\nprime 2\n", 2, 1),
])
def test_grammar_errors_carry_positions(text, line, column):
    with pytest.raises(GrammarError) as info:
        parse_group_file(text)
    assert info.value.line == line
    assert info.value.column == column
    assert f"line {line}" in str(info.value)


def test_semantic_errors():
    with pytest.raises(SemanticError):
        parse_group_file("format: presentation\nprime: 2\ngenerators: x\nrelation: y^2\n")
    with pytest.raises(SemanticError):
        parse_group_file("format: permutation\nprime: 2\ndegree: 3\ngenerator: 0 0 1\n")
    with pytest.raises(SemanticError):
        parse_group_file("format: permutation\nprime: 4\ndegree: 2\ngenerator: 1 0\n")


def test_corrupted_table_is_rejected():
    text = emit_table_file(load("q8")[3])
    bad = text.replace("X.5: 2, -2", "X.5: 2, 2")
    with pytest.raises(MalformedTable):
        parse_table_file(bad)
    # a wrong power map is caught by the Galois check on linear rows
    lines = text.splitlines()
    i = next(k for k, ln in enumerate(lines) if ln.startswith("class 3:"))
    lines[i] = lines[i].replace("p3=3", "p3=4")
    with pytest.raises(MalformedTable):
        parse_table_file("\n".join(lines) + "\n")


def test_table_missing_power_map():
    text = emit_table_file(load("q8")[3])
    stripped = "\n".join(ln.split(" p2=")[0] if ln.startswith("class") else ln for ln in text.splitlines())
    with pytest.raises(SemanticError):
        parse_table_file(stripped + "\n")


def test_report_is_machine_readable():
    t = load("q8")[3]
    rep = decide_property_ii(t)
    text = render_report(rep, source="q8.grp", text="x", group_info={"nilpotency_class": "2"},
                         elapsed=0.1)
    parsed = parse_report(text)
    assert list(parsed) == ["input", "decision", "group", "timing"]
    assert parsed["decision"]["has_property_ii"] == "true"
    assert parsed["decision"]["imprimitive_irreps"] == "X.5"
    assert decision_section(text).startswith("[decision]\norder: 8")
    # field order is stable
    assert render_report(rep, source="q8.grp", text="x") == render_report(rep, source="q8.grp", text="x")
