"""The D5 weight lattice in fundamental-weight coordinates.

A weight is a plain tuple of five ints ``(a1, ..., a5)`` meaning
``a1*w1 + ... + a5*w5`` (Bourbaki labelling: nodes 4 and 5 are the two
spin nodes, both attached to node 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

RANK = 5
N_POSITIVE_ROOTS = 20
WEYL_ORDER = 1920

Weight = tuple  # tuple[int, int, int, int, int]

ZERO: Weight = (0, 0, 0, 0, 0)
RHO: Weight = (1, 1, 1, 1, 1)

# Cartan matrix of D5; row i = simple root alpha_i in fundamental coordinates.
CARTAN = (
    (2, -1, 0, 0, 0),
    (-1, 2, -1, 0, 0),
    (0, -1, 2, -1, -1),
    (0, 0, -1, 2, 0),
    (0, 0, -1, 0, 2),
)


def weight(*coords) -> Weight:
    """Validate and build a weight; accepts ``weight(1, 0, 0, 0, 0)`` or ``weight([..])``."""
    if len(coords) == 1 and not isinstance(coords[0], int):
        coords = tuple(coords[0])
    if len(coords) != RANK:
        raise ValueError(f"a D5 weight has {RANK} coordinates, got {len(coords)}")
    out = []
    for c in coords:
        if isinstance(c, bool) or not isinstance(c, (int, np.integer)):
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            else:
                raise TypeError(f"weight coordinates must be integers, got {c!r}")
        out.append(int(c))
    return tuple(out)


def fundamental(i: int) -> Weight:
    if not 1 <= i <= RANK:
        raise ValueError(f"fundamental weight index must be in 1..{RANK}")
    return tuple(1 if j == i - 1 else 0 for j in range(RANK))


def add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, u: Weight) -> Weight:
    return tuple(k * a for a in u)


def reflect(i: int, w: Weight) -> Weight:
    """Simple reflection s_i: w - <w, alpha_i^vee> alpha_i."""
    if not 1 <= i <= RANK:
        raise ValueError(f"reflection index must be in 1..{RANK}, got {i}")
    a = w[i - 1]
    if a == 0:
        return tuple(w)
    root = CARTAN[i - 1]
    return tuple(x - a * r for x, r in zip(w, root))


def swap_spin(w: Weight) -> Weight:
    """Outer diagram automorphism of D5 exchanging nodes 4 and 5."""
    return (w[0], w[1], w[2], w[4], w[3])


def is_dominant(w: Weight) -> bool:
    return all(a >= 0 for a in w)


def is_strictly_dominant(w: Weight) -> bool:
    return all(a > 0 for a in w)


def is_singular(w: Weight) -> bool:
    """True iff ``w`` lies on a reflecting hyperplane (some Weyl translate has a zero coordinate)."""
    v = tuple(w)
    for _ in range(N_POSITIVE_ROOTS + 1):
        if any(a == 0 for a in v):
            return True
        neg = next((k for k, a in enumerate(v) if a < 0), None)
        if neg is None:
            return False
        v = reflect(neg + 1, v)
    raise RuntimeError(f"dominance walk did not terminate for {w}")


# ---------------------------------------------------------------------------
# epsilon basis, positive roots, Weyl dimension

_FUND_EPS = (
    (Fraction(1), 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (1, 1, 1, 0, 0),
    (Fraction(1, 2),) * 4 + (Fraction(-1, 2),),
    (Fraction(1, 2),) * 5,
)


def to_epsilon(w: Weight) -> tuple:
    """Orthonormal epsilon coordinates (exact Fractions)."""
    return tuple(
        sum((Fraction(w[i]) * _FUND_EPS[i][j] for i in range(RANK)), Fraction(0))
        for j in range(RANK)
    )


def from_epsilon(e) -> Weight:
    """Inverse of :func:`to_epsilon`; raises if ``e`` is not in the weight lattice."""
    e = [Fraction(x) for x in e]
    a4 = e[3] - e[4]
    a5 = e[3] + e[4]
    a3 = e[2] - e[3]
    a2 = e[1] - e[2]
    a1 = e[0] - e[1]
    coords = (a1, a2, a3, a4, a5)
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"{tuple(e)} is not a D5 weight")
    return tuple(int(c) for c in coords)


@lru_cache(maxsize=None)
def positive_roots_epsilon() -> tuple:
    roots = []
    for i, j in combinations(range(RANK), 2):
        for sign in (-1, 1):
            r = [0] * RANK
            r[i] = 1
            r[j] = sign
            roots.append(tuple(r))
    return tuple(roots)


@lru_cache(maxsize=None)
def positive_roots() -> tuple:
    """The 20 positive roots in fundamental-weight coordinates."""
    return tuple(from_epsilon(r) for r in positive_roots_epsilon())


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@lru_cache(maxsize=4096)
def weyl_dim(lam: Weight) -> int:
    """Dimension of the irreducible D5-module of highest weight ``lam``."""
    lam = weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"weyl_dim needs a dominant weight, got {lam}")
    lr = to_epsilon(add(lam, RHO))
    r = to_epsilon(RHO)
    num = Fraction(1)
    for alpha in positive_roots_epsilon():
        num *= Fraction(_dot(lr, alpha)) / _dot(r, alpha)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# Weyl group


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element, identified by where it sends rho.

    ``word`` is a reduced word (w = s_{word[0]} ... s_{word[-1]}, acting
    right-to-left); two elements are equal iff they move rho identically.
    """

    word: tuple
    image_of_rho: Weight

    @property
    def length(self) -> int:
        return len(self.word)

    def __call__(self, w: Weight) -> Weight:
        for i in reversed(self.word):
            w = reflect(i, w)
        return w

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.image_of_rho == other.image_of_rho

    def __hash__(self):
        return hash(self.image_of_rho)

    def inversions(self) -> int:
        """Number of positive roots sent to negative roots."""
        pos = set(positive_roots())
        return sum(1 for r in pos if self(r) not in pos)


@lru_cache(maxsize=None)
def enumerate_weyl_group() -> frozenset:
    """Breadth-first closure of rho under s1..s5; BFS depth is the length."""
    seen = {RHO: ()}
    frontier = [RHO]
    while frontier:
        nxt = []
        for v in frontier:
            word = seen[v]
            for i in range(1, RANK + 1):
                u = reflect(i, v)
                if u not in seen:
                    # new letter applied last, i.e. leftmost in the word
                    seen[u] = (i,) + word
                    nxt.append(u)
        frontier = nxt
    return frozenset(WeylElement(word, img) for img, word in seen.items())


@lru_cache(maxsize=None)
def weyl_matrices() -> tuple:
    """(matrices, lengths) with matrices[k] @ v = w_k(v) for all 1920 elements."""
    elements = sorted(enumerate_weyl_group(), key=lambda e: (e.length, e.word))
    basis = [fundamental(i) for i in range(1, RANK + 1)]
    mats = np.empty((len(elements), RANK, RANK), dtype=np.int64)
    for k, el in enumerate(elements):
        cols = [el(b) for b in basis]
        mats[k] = np.array(cols, dtype=np.int64).T
    lengths = np.array([el.length for el in elements], dtype=np.int64)
    return mats, lengths, tuple(elements)


def longest_element() -> WeylElement:
    return max(enumerate_weyl_group(), key=lambda e: e.length)


# ---------------------------------------------------------------------------
# characters and Levi restriction


# 2 * epsilon coordinates of the fundamental weights, as integers
_FUND_EPS2 = tuple(tuple(int(2 * x) for x in row) for row in _FUND_EPS)


def _eps2(w: Weight) -> tuple:
    return tuple(sum(w[i] * _FUND_EPS2[i][j] for i in range(RANK)) for j in range(RANK))


@lru_cache(maxsize=64)
def character(lam: Weight) -> dict:
    """Weight multiplicities of V_lam (Freudenthal's recursion), keyed by weight."""
    lam = weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"character needs a dominant weight, got {lam}")
    # all inner products below are 4x the true ones
    pos = [(alpha, _eps2(alpha)) for alpha in positive_roots()]
    rho2 = _eps2(RHO)

    def norm4(mu2):
        return sum((a + r) ** 2 for a, r in zip(mu2, rho2))

    top = norm4(_eps2(lam))
    mult = {lam: 1}
    layer = [lam]
    while layer:
        candidates = {sub(mu, CARTAN[i]) for mu in layer for i in range(RANK)}
        layer = []
        for mu in sorted(candidates):
            if mu in mult:
                continue
            acc = 0
            for alpha, alpha2 in pos:
                nu = add(mu, alpha)
                while nu in mult:
                    acc += mult[nu] * _dot(_eps2(nu), alpha2)
                    nu = add(nu, alpha)
            denom = top - norm4(_eps2(mu))
            if denom == 0:
                continue
            m, rem = divmod(2 * acc, denom)
            assert rem == 0
            if m > 0:
                mult[mu] = m
                layer.append(mu)
    assert sum(mult.values()) == weyl_dim(lam)
    return mult


@lru_cache(maxsize=None)
def parabolic_weyl_group(nodes: tuple) -> tuple:
    """(element-as-image-of-rho, sign) pairs for the subgroup generated by s_i, i in nodes."""
    seen = {RHO: 0}
    frontier = [RHO]
    while frontier:
        nxt = []
        for v in frontier:
            for i in nodes:
                u = reflect(i, v)
                if u not in seen:
                    seen[u] = seen[v] + 1
                    nxt.append(u)
        frontier = nxt
    return tuple((img, (-1) ** ln) for img, ln in seen.items())


def levi_restriction(lam: Weight, levi_nodes: tuple) -> dict:
    """Multiplicities of Levi-irreducibles in V_lam restricted to the Levi with the given simple roots.

    c_nu = sum_{w in W_L} sign(w) m(nu + rho - w rho), over Levi-dominant nu.
    """
    mult = character(lam)
    out = {}
    group = parabolic_weyl_group(tuple(levi_nodes))
    for nu in mult:
        if any(nu[i - 1] < 0 for i in levi_nodes):
            continue
        c = 0
        for w_rho, sign in group:
            c += sign * mult.get(add(nu, sub(RHO, w_rho)), 0)
        if c:
            out[nu] = c
    return out
