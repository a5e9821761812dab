from __future__ import annotations

import pytest

from fdimlab import (
    QQ,
    GF,
    AdmissibleOrder,
    AlgebraElement,
    AlgebraSpecError,
    Ordering,
    Path,
    compare,
    compose,
    corpus,
    format_presentation,
    parse_algebra_spec,
    parse_expression,
)


def test_composition_reads_right_to_left():
    q = corpus.load("C3").quiver
    a1, a2 = q.arrow("a1"), q.arrow("a2")
    p = compose(a2, a1)
    assert p is not None and p.arrows == (0, 1)
    assert compose(a1, a2) is None
    assert q.format_path(p) == "a2*a1"
    assert q.path("a2*a1") == p


def test_trivial_paths_are_units():
    q = corpus.load("C3").quiver
    a1 = q.arrow("a1")
    assert compose(a1, q.trivial("1")) == a1
    assert compose(q.trivial("2"), a1) == a1
    assert compose(q.trivial("3"), a1) is None


def test_order_is_length_first_then_precedence():
    q = corpus.load("D4").quiver
    order = AdmissibleOrder.default(q)
    assert compare(order, q.path("b*a"), q.arrow("a")) == Ordering.GT
    assert compare(order, q.arrow("a"), q.arrow("a")) == Ordering.EQ
    flipped = AdmissibleOrder.from_names(q, ["e", "d", "g", "b", "a"])
    x, y = q.path("b*a"), q.path("d*g")
    assert compare(order, x, y) != compare(flipped, x, y)


def test_precedence_must_list_every_arrow():
    q = corpus.load("D4").quiver
    with pytest.raises(ValueError):
        AdmissibleOrder.from_names(q, ["a", "b"])


def test_parse_round_trip_for_every_builtin():
    for name in corpus.names():
        pres = corpus.load(name)
        again = parse_algebra_spec(format_presentation(pres), name=name)
        assert again.quiver == pres.quiver
        assert set(again.relations) == set(pres.relations)


def test_non_uniform_input_is_split():
    text = """
field GF(3)
vertices 1 2 3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow c : 2 -> 1
relations:
  b*a + a*c;
"""
    pres = parse_algebra_spec(text)
    assert pres.field == GF(3)
    assert len(pres.relations) == 2
    assert all(r.is_uniform() for r in pres.relations)


def test_expression_arithmetic():
    q = corpus.load("D4").quiver
    x = parse_expression("2*b*a - 1/2*d*g", q)
    y = parse_expression("b*a", q)
    assert (x - y.scale(2)).terms == {q.path("d*g"): QQ(-1) / 2}
    prod = parse_expression("e", q) * parse_expression("b*a", q)
    assert prod.terms == {q.path("e*b*a"): 1}
    assert (parse_expression("a", q) * parse_expression("b", q)).is_zero()


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices 1 2\narrow a : 1 -> 3\n", 2),
        ("field RR\nvertices 1\n", 1),
        ("vertices 1 2\narrow a : 1 -> 2\nrelations:\n  a;\n", 4),
        ("vertices 1 2\narrow a : 1 -> 2\nrelations:\n  a*a;\n", 4),
        ("arrow a : 1 -> 2\n", 1),
        ("vertices 1 1\n", 1),
        ("vertices 1\nbogus line\n", 2),
    ],
)
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(AlgebraSpecError) as info:
        parse_algebra_spec(text)
    assert info.value.line == line


def test_presentation_field_change_keeps_relations():
    pres = corpus.load("D4")
    g = pres.with_field(GF(5))
    assert g.field == GF(5) and len(g.relations) == len(pres.relations)


def test_element_helper_reads_vertex_idempotents():
    pres = corpus.load("A2")
    x = pres.element("e(1)")
    assert x.terms == {Path(0, 0, ()): 1}
    assert isinstance(x, AlgebraElement)
