import random
from fractions import Fraction

import flint
import pytest
from hypothesis import given
from hypothesis import strategies as st

from d5roof.bott import bott
from d5roof.bundles import normalize
from d5roof.cy_pairs import (
    CYError,
    as_matrix,
    charpoly_squarefree,
    commutant_transpose,
    dimension_count,
    hoppe_check,
    hoppe_terms,
    involution_action,
    kleiman_suite,
    normalizing_twist,
    random_generic_section,
    roof_count,
    unique_section_check,
    unique_section_terms,
)


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def test_identity_commutant_is_everything():
    assert commutant_transpose(identity(16)).dimension == 256


def test_kleiman_small_suite():
    for s in kleiman_suite(samples=3, seed=7):
        assert s.generic and s.dimension == 16 and s.symmetric


def test_generic_sample_is_reproducible():
    a = random_generic_section(random.Random(3), n=4)
    b = random_generic_section(random.Random(3), n=4)
    assert a == b and charpoly_squarefree(a)


def test_exact_inputs_only():
    with pytest.raises(CYError):
        as_matrix([[0.5]])
    assert as_matrix([[Fraction(1, 3)]])[0, 0] == flint.fmpq(1, 3)


def test_involution_action():
    S = [[1, 2], [3, 4]]
    M = [[0, 1], [1, 0]]
    assert involution_action(S, M) == as_matrix([[4, 2], [3, 1]])
    with pytest.raises(CYError):
        involution_action(S, [[1, 1], [1, 1]])


def test_dimension_count():
    dc = dimension_count(16, 210, 45, printed_bound=174)
    assert (dc.sym, dc.bound, dc.holds) == (136, 74, True)
    assert any("174" in n for n in dc.notes)
    assert roof_count().bound == 74
    with pytest.raises(CYError):
        dimension_count(0, 210, 45)


def test_unique_section():
    assert unique_section_check().ok
    assert normalize(unique_section_terms(5)).as_dict() == {(0, 0, 0, 1, -7): 1}
    r = bott((0, 0, 0, 1, -7))
    assert r.is_zero or r.degree >= 5
    assert unique_section_check(ks=[6]).verdicts == []


def test_hoppe_literal_fails_only_at_4_0():
    fails = hoppe_check().failures()
    assert [(v.label, v.weight, v.degree) for v in fails] == [("k=4, l=0", (0, 0, 0, 1, 0), 0)]
    # wedge^4 U-^vee(-1) is U-(0,1), whose sections are the 16-dimensional spinor representation
    assert normalize(hoppe_terms(4, 0)).as_dict() == {(0, 0, 0, 1, 0): 1}
    assert bott((0, 0, 0, 1, 0)).dim == 16


def test_hoppe_normalized():
    assert [normalizing_twist(k) for k in range(1, 5)] == [1, 1, 2, 2]
    assert hoppe_check(normalized=True).ok
    assert hoppe_check(ks=[1], ls=[0]).ok
    assert hoppe_check(ks=[4], ls=[5], normalized=True).ok
    with pytest.raises(CYError):
        hoppe_check(ks=[0])


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(matrices)
def test_commutant_solves_the_equation(rows):
    S = as_matrix(rows)
    sol = commutant_transpose(S)
    for K in sol.basis:
        assert S * K == K * S.transpose()
    if charpoly_squarefree(S):
        assert sol.dimension == S.nrows() and sol.all_symmetric()
