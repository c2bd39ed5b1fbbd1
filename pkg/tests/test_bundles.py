from collections import Counter
from math import comb

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from d5roof.bundles import (
    O,
    U_MINUS,
    U_PLUS,
    V,
    BundleError,
    Dual,
    Irr,
    Space,
    SpaceMismatch,
    Sum,
    Sym,
    Tensor,
    Twist,
    Wedge,
    as_expr,
    dictionary,
    euler_char,
    levi_dim,
    normalize,
    rank,
    to_weight,
)
from d5roof.gl import gl_dim, lr_tensor

TAUT = {Space.ROOF: V, Space.PLUS: U_PLUS, Space.MINUS: U_MINUS}


def naive_rank(e) -> int:
    """Rank straight from the expression tree, without any representation theory."""
    name = type(e).__name__
    if name == "Atom":
        return {"O": 1, "V": 4, "U+": 5, "U-": 5}[e.name]
    if name in ("Twist", "Dual"):
        return naive_rank(e.expr)
    if name == "Wedge":
        return comb(naive_rank(e.expr), e.k)
    if name == "Sym":
        r = naive_rank(e.expr)
        return comb(r + e.k - 1, e.k)
    if name == "Sum":
        return naive_rank(e.left) + naive_rank(e.right)
    if name == "Tensor":
        return naive_rank(e.left) * naive_rank(e.right)
    raise AssertionError(name)


def twist_for(space):
    t = st.integers(-3, 3)
    if space is Space.PLUS:
        return st.tuples(t, st.just(0))
    if space is Space.MINUS:
        return st.tuples(st.just(0), t)
    return st.tuples(t, t)


@st.composite
def exprs(draw, space=None, depth=2):
    space = space or draw(st.sampled_from(list(Space)))
    taut = TAUT[space]
    leaf = st.sampled_from([O, taut, Dual(taut)])
    if depth == 0:
        e = draw(leaf)
    else:
        op = draw(st.sampled_from(["leaf", "twist", "dual", "sum", "tensor", "wedge", "sym"]))
        sub = exprs(space, depth - 1)
        if op == "leaf":
            e = draw(leaf)
        elif op == "twist":
            e = Twist(draw(sub), *draw(twist_for(space)))
        elif op == "dual":
            e = Dual(draw(sub))
        elif op == "sum":
            e = Sum(draw(sub), draw(sub))
        elif op == "tensor":
            e = Tensor(draw(sub), draw(sub))
        elif op == "wedge":
            e = Wedge(draw(st.integers(0, 3)), draw(leaf))
        else:
            e = Sym(draw(st.integers(0, 2)), draw(leaf))
    return e


def test_dictionary_examples():
    assert dictionary(Space.ROOF, "wedge", 2).as_dict() == {(0, 1, 0, 0, 0): 1}
    assert dictionary(Space.ROOF, "wedge", 4).as_dict() == {(0, 0, 0, 1, 1): 1}
    assert dictionary(Space.PLUS, "sym", 0).as_dict() == {(0, 0, 0, 0, 0): 1}


def test_wedge4_dual_u_plus():
    # the stray coordinate is resolved to (a+1) w4 + w5
    assert normalize(Twist(Wedge(4, Dual(U_PLUS)), 3, 0)).as_dict() == {(0, 0, 0, 4, 1): 1}


def test_product_decompositions():
    k2 = normalize(Tensor(U_MINUS, Twist(Wedge(2, Dual(U_MINUS)), 0, -2)))
    assert k2.as_dict() == {(0, 1, 0, 1, -3): 1, (1, 0, 0, 0, -2): 1}
    k5 = normalize(Tensor(U_MINUS, Twist(Wedge(5, Dual(U_MINUS)), 0, -8)))
    assert k5.as_dict() == {(0, 0, 0, 1, -7): 1}


def test_line_bundles_add():
    assert normalize(Tensor(Twist(O, 1, -2), Twist(O, 3, 5))).as_dict() == {(0, 0, 0, 4, 3): 1}


def test_ranks_and_chi():
    assert rank(U_PLUS) == 5
    assert rank(V) == 4
    assert euler_char(O) == 1


def test_lr_examples():
    assert lr_tensor((1, 0, 0, 0), (0, 0, 0, -1), 4) == Counter({(1, 0, 0, -1): 1, (0, 0, 0, 0): 1})
    out = lr_tensor((1, 1, 1, 1, 0), (1, 1, 1, 1, 0), 5)
    assert sum(gl_dim(m) * c for m, c in out.items()) == 25
    assert lr_tensor((0, 0, 0), (2, 1, 0), 3) == Counter({(2, 1, 0): 1})


def test_sym2_from_lr():
    full = lr_tensor((1, 0, 0, 0, 0), (1, 0, 0, 0, 0), 5)
    full.subtract({(1, 1, 0, 0, 0): 1})
    sym2 = {to_weight(Space.PLUS, mu): m for mu, m in full.items() if m}
    assert sym2 == normalize(Sym(2, Dual(U_PLUS))).as_dict() == {(2, 0, 0, 0, 0): 1}


def test_mixed_spaces_are_rejected():
    with pytest.raises(SpaceMismatch):
        normalize(Tensor(V, U_PLUS))
    assert rank(Tensor(V, U_PLUS)) == 20


def test_as_expr_of_zero():
    with pytest.raises(BundleError):
        as_expr(normalize(Wedge(6, U_PLUS)))


@given(exprs())
def test_rank_is_conserved(e):
    assume(naive_rank(e) <= 400)
    ms = normalize(e)
    assert rank(e) == naive_rank(e) == sum(m * levi_dim(ms.space, lam) for lam, m in ms.items)


@given(exprs())
def test_normalize_is_idempotent(e):
    assume(naive_rank(e) <= 400)
    ms = normalize(e)
    assume(len(ms))
    assert normalize(as_expr(ms)) == ms


@given(exprs())
def test_double_dual(e):
    assume(naive_rank(e) <= 400)
    assert normalize(Dual(Dual(e))) == normalize(e)


@given(st.sampled_from(list(Space)), st.data())
def test_irreducible_atoms_roundtrip(space, data):
    ms = normalize(data.draw(exprs(space, depth=1)))
    for lam, _ in ms.items:
        assert normalize(Irr(lam, ms.space)).as_dict() == {lam: 1}


@given(exprs(), exprs())
def test_rank_on_mixed_expressions(a, b):
    assume(naive_rank(a) * naive_rank(b) <= 400)
    assert rank(Tensor(a, b)) == naive_rank(a) * naive_rank(b)
