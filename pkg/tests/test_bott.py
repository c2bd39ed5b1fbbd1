from hypothesis import given
from hypothesis import strategies as st

from d5roof.bott import bott, bott_oracle, euler_characteristic
from d5roof.weights import is_dominant, weyl_dim

box = st.tuples(*[st.integers(-8, 8)] * 5)


def test_examples():
    r = bott((0, 0, 0, 0, 0))
    assert (r.degree, r.weight, r.dim) == (0, (0, 0, 0, 0, 0), 1)
    r = bott((0, 0, 0, 1, 1))
    assert (r.degree, r.weight, r.dim) == (0, (0, 0, 0, 1, 1), 210)
    assert bott((1, 0, 0, -1, 1)).is_zero
    assert bott_oracle((1, 0, 0, -1, 1)).is_zero


def test_oracle_on_lemma_weights():
    for lam in [(0, 0, 0, -6, 1), (0, 0, 0, -5, 1), (0, 0, 0, -4, 1), (0, 0, 0, -5, 2), (0, 0, 0, 0, 0)]:
        assert bott(lam) == bott_oracle(lam)
    assert bott((0, 0, 0, -6, 1)).is_zero


def test_top_degree():
    # K of the full flag variety is -2 rho, with H^20 = C
    r = bott((-2, -2, -2, -2, -2))
    assert (r.degree, r.dim) == (20, 1)


@given(box)
def test_bott_matches_oracle(lam):
    assert bott(lam) == bott_oracle(lam)


@given(box)
def test_result_shape(lam):
    r = bott(lam)
    if not r.is_zero:
        assert 0 <= r.degree <= 20
        assert is_dominant(r.weight)
        assert r.dim == weyl_dim(r.weight)


@given(box)
def test_full_flag_serre_duality(lam):
    # omega = O(-2 rho) and dim = 20: H^d(lam) is dual to H^{20-d}(-lam - 2 rho)
    a, b = bott(lam), bott(tuple(-x - 2 for x in lam))
    assert a.is_zero == b.is_zero
    if not a.is_zero:
        assert a.degree + b.degree == 20 and a.dim == b.dim
    assert euler_characteristic(lam) == euler_characteristic(tuple(-x - 2 for x in lam))
