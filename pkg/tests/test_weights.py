from hypothesis import given
from hypothesis import strategies as st

from d5roof.weights import (
    CARTAN,
    RHO,
    character,
    enumerate_weyl_group,
    fundamental,
    is_singular,
    is_strictly_dominant,
    longest_element,
    positive_roots,
    reflect,
    swap_spin,
    weyl_dim,
)

coords = st.integers(-20, 20)
vectors = st.tuples(coords, coords, coords, coords, coords)
dominant = st.tuples(*[st.integers(0, 3)] * 5)
index = st.integers(1, 5)


def test_reflection_examples():
    assert reflect(1, (1, 2, 3, 4, 5)) == (-1, 3, 3, 4, 5)
    assert reflect(4, (0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0)
    assert reflect(5, (0, 0, 1, 0, 2)) == (0, 0, 3, 0, -2)


def test_dominance_predicates():
    assert is_strictly_dominant((1, 1, 1, 1, 1))
    assert is_singular((2, 1, 1, 0, 2))
    assert is_strictly_dominant(tuple(a + b for a, b in zip((0,) * 5, RHO)))


def test_dimensions():
    assert weyl_dim(fundamental(1)) == 10
    assert weyl_dim(fundamental(4)) == 16
    assert weyl_dim(fundamental(2)) == 45
    assert weyl_dim(tuple(a + b for a, b in zip(fundamental(4), fundamental(5)))) == 210
    assert weyl_dim((0,) * 5) == 1


def test_weyl_group():
    group = enumerate_weyl_group()
    assert len(group) == 1920
    assert len({w(RHO) for w in group}) == 1920
    ident = [w for w in group if w.length == 0]
    assert len(ident) == 1 and ident[0](RHO) == RHO
    w0 = longest_element()
    assert w0.length == 20 == len(positive_roots())


def test_length_counts_inversions():
    for w in sorted(enumerate_weyl_group(), key=lambda e: e.word)[::37]:
        assert w.length == w.inversions()


@given(index, vectors)
def test_reflection_is_involution(i, w):
    assert reflect(i, reflect(i, w)) == w


@given(index, vectors)
def test_reflection_follows_cartan_matrix(i, w):
    r = reflect(i, w)
    for j in range(5):
        if j == i - 1:
            assert r[j] == -w[j]
        else:
            assert r[j] == w[j] - CARTAN[i - 1][j] * w[i - 1]
    # nodes 4 and 5 hang off node 3 and not off each other
    assert CARTAN[3][4] == CARTAN[4][3] == 0
    assert CARTAN[2][3] == CARTAN[2][4] == -1


@given(dominant)
def test_weyl_dim_spin_symmetry(lam):
    assert weyl_dim(lam) == weyl_dim(swap_spin(lam))


small = st.tuples(*[st.integers(0, 2)] * 5).filter(lambda w: sum(w) <= 2)


@given(small)
def test_weyl_dim_matches_character(lam):
    # Freudenthal multiplicities are an independent route to the dimension
    assert sum(character(lam).values()) == weyl_dim(lam)
