import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from d5roof.bundles import (
    O,
    U_PLUS,
    V,
    Atom,
    Composite,
    Dual,
    Extension,
    Irr,
    Rep,
    Space,
    Sum,
    Sym,
    Tensor,
    Twist,
    Wedge,
)
from d5roof.chessboard import ChessObject, Script, Step, Via
from d5roof.cli import resolve_script_path
from d5roof.script import ParseError, format_expr, format_script, parse_expr, parse_script

small = st.integers(-9, 9)
nonneg = st.integers(0, 4)


def irr_weight(space):
    free = {Space.ROOF: (3, 4), Space.PLUS: (3,), Space.MINUS: (4,)}[space]
    return st.tuples(*[small if i in free else nonneg for i in range(5)])


@st.composite
def irreducibles(draw):
    space = draw(st.sampled_from(list(Space)))
    return Irr(draw(irr_weight(space)), space)


leaves = st.one_of(
    st.sampled_from([Atom(n) for n in ("O", "U+", "U-", "V")]),
    st.sampled_from([Composite(n) for n in ("Ttilde", "Ttilde-", "T4", "Ttilde4", "F")]),
    irreducibles(),
    st.tuples(nonneg, nonneg, nonneg, nonneg, nonneg).map(Rep),
)


def extend(children):
    return st.one_of(
        st.builds(Dual, children),
        st.builds(Twist, children, small, small),
        st.builds(Wedge, nonneg, children),
        st.builds(Sym, nonneg, children),
        st.builds(Sum, children, children),
        st.builds(Tensor, children, children),
        st.builds(Extension, children, children),
    )


exprs = st.recursive(leaves, extend, max_leaves=8)
ids = st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,6}", fullmatch=True).filter(lambda s: s not in ("both",))
positions = st.tuples(small, small)
objects = st.builds(ChessObject, ids, exprs, positions)
vias = st.builds(Via, st.from_regex(r"[A-Z][A-Z0-9_]{0,10}", fullmatch=True), positions, st.booleans())
labels = st.from_regex(r"[a-z][a-z0-9 .(),-]{0,12}[a-z0-9)]", fullmatch=True)
id_lists = st.lists(ids, min_size=1, max_size=4).map(tuple)


@st.composite
def steps(draw):
    kind = draw(st.sampled_from(["serre", "serre_inverse", "reorder", "move", "exchange", "orth",
                                 "mutate_left", "mutate_right", "regroup"]))
    label = draw(labels)
    if kind in ("serre", "serre_inverse", "reorder"):
        return Step(kind, draw(id_lists), label=label)
    if kind == "move":
        where = draw(st.sampled_from(["front", "end", "before", "after"]))
        anchor = draw(ids) if where in ("before", "after") else ""
        return Step("move", draw(id_lists), where=where, anchor=anchor, label=label)
    if kind in ("exchange", "orth"):
        where = draw(st.sampled_from(["", "both"])) if kind == "orth" else ""
        return Step(kind, draw(id_lists), draw(id_lists), where=where, label=label)
    if kind == "regroup":
        return Step("regroup", draw(id_lists), objects=tuple(draw(st.lists(objects, min_size=1, max_size=3))),
                    vias=tuple(draw(st.lists(vias, max_size=3))), label=label)
    via = draw(st.one_of(st.none(), vias))
    return Step(kind, (draw(ids),), draw(id_lists), new=draw(objects), via=via, label=label)


scripts = st.builds(
    Script,
    st.lists(objects, max_size=5).map(tuple),
    st.lists(steps(), max_size=8).map(tuple),
    st.lists(objects, max_size=3).map(tuple),
    st.sampled_from(["blowup", "cayley"]),
    positions,
    st.from_regex(r"[a-z][a-z0-9_]{0,8}", fullmatch=True),
)


def test_expression_examples():
    assert parse_expr("wedge2(dual(V))(0,0)") == Twist(Wedge(2, Dual(V)), 0, 0)
    assert parse_expr("dual(U+)(-1,1)") == Twist(Dual(U_PLUS), -1, 1)
    assert parse_expr("E[1 0 0 -1 1]") == Irr((1, 0, 0, -1, 1))
    assert parse_expr(" O ( 1 , -2 ) * U+ + V") == Sum(Tensor(Twist(O, 1, -2), U_PLUS), V)


@pytest.mark.parametrize(
    "text, col",
    [("dual(U+", 8), ("Foo(1,2)", 1), ("O(1 2)", 5), ("E[1 2 3]", 1), ("O + Bar", 5), ("", 1)],
)
def test_expression_errors(text, col):
    with pytest.raises(ParseError) as err:
        parse_expr(text)
    assert err.value.col == col


def test_unknown_atom_is_named():
    with pytest.raises(ParseError, match="Bar"):
        parse_expr("O + Bar")


def test_script_error_has_line():
    with pytest.raises(ParseError) as err:
        parse_script("mode blowup\nobject a O @ 0 0\nobject b dual(Q) @ 0 0\n")
    assert err.value.line == 3 and err.value.col > 1
    with pytest.raises(ParseError, match="unknown directive"):
        parse_script("frobnicate a b\n")
    with pytest.raises(ParseError):
        parse_script("exchange a b\n")


@pytest.mark.parametrize("name", ["d5_flop.script", "d5_cayley.script"])
def test_shipped_scripts_round_trip(name):
    text = resolve_script_path(name).read_text(encoding="utf-8")
    s = parse_script(text)
    assert format_script(s) == text
    assert parse_script(format_script(s)) == s
    assert len(s.objects) == 64 and len(s.target) == 64


@given(exprs)
def test_expression_round_trip(e):
    assert parse_expr(format_expr(e)) == e


@given(exprs)
def test_expressions_are_whitespace_insensitive(e):
    text = format_expr(e)
    assert parse_expr(re.sub(r"([(),*])", r"  \1 ", text)) == e
    if "[" not in text:
        assert parse_expr(text.replace(" ", "")) == e


@settings(max_examples=100)
@given(scripts)
def test_script_round_trip(s):
    text = format_script(s)
    parsed = parse_script(text)
    assert parsed == s
    assert format_script(parsed) == text
