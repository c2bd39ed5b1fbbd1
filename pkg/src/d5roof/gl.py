"""GL(r) highest weights: dimensions, Littlewood-Richardson products, branching.

GL weights are weakly decreasing integer tuples; negative entries are allowed
and handled by shifting to partitions and back.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product


def is_gl_dominant(mu) -> bool:
    return all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1))


def check_gl(mu, r=None):
    mu = tuple(int(x) for x in mu)
    if r is not None and len(mu) != r:
        raise ValueError(f"expected a GL({r}) weight, got {mu}")
    if not is_gl_dominant(mu):
        raise ValueError(f"{mu} is not weakly decreasing")
    return mu


def gl_dim(mu) -> int:
    r = len(mu)
    num = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            num *= Fraction(mu[i] - mu[j] + j - i, j - i)
    return int(num)


def _horizontal_strips(shape, n, r):
    """All shapes nu containing ``shape`` with nu/shape a horizontal strip of n boxes."""
    shape = list(shape) + [0] * (r - len(shape))

    def rec(j, left, cur):
        if j == r:
            if left == 0:
                yield tuple(cur)
            return
        cap = left if j == 0 else min(left, shape[j - 1] - shape[j])
        for add in range(cap, -1, -1):
            cur.append(shape[j] + add)
            yield from rec(j + 1, left - add, cur)
            cur.pop()

    yield from rec(0, n, [])


@lru_cache(maxsize=1 << 14)
def lr_partitions(alpha, beta, r) -> Counter:
    """LR product of two partitions (padded to length r), truncated to length <= r."""
    beta = tuple(b for b in beta if b > 0)
    # state: (shape, counts of previous label per row)
    states = Counter({(tuple(alpha), None): 1})
    for b in beta:
        nxt = Counter()
        for (shape, prev), mult in states.items():
            for nu in _horizontal_strips(shape, b, r):
                counts = tuple(x - y for x, y in zip(nu, shape))
                if prev is not None:
                    ok = True
                    acc_new = 0
                    acc_prev = 0
                    for j in range(r):
                        acc_new += counts[j]
                        if acc_new > acc_prev:
                            ok = False
                            break
                        acc_prev += prev[j]
                    if not ok:
                        continue
                nxt[(nu, counts)] += mult
        states = nxt
    out = Counter()
    for (shape, _), mult in states.items():
        out[shape] += mult
    return out


def lr_tensor(alpha, beta, r=None) -> Counter:
    """Decompose V_alpha (x) V_beta for GL(r) into highest weights with multiplicity."""
    if r is None:
        r = len(alpha)
    alpha = check_gl(alpha, r)
    beta = check_gl(beta, r)
    sa = -min(0, alpha[-1])
    sb = -min(0, beta[-1])
    pa = tuple(a + sa for a in alpha)
    pb = tuple(b + sb for b in beta)
    # multiply the smaller partition into the larger one
    if sum(pb) > sum(pa):
        pa, pb = pb, pa
    prod = lr_partitions(pa, pb, r)
    shift = sa + sb
    return Counter({tuple(x - shift for x in nu): m for nu, m in prod.items()})


def interlacing(mu):
    """GL(r-1) weights nu interlacing mu: mu_1 >= nu_1 >= mu_2 >= ... >= nu_{r-1} >= mu_r."""
    ranges = [range(mu[i + 1], mu[i] + 1) for i in range(len(mu) - 1)]
    for nu in product(*ranges):
        yield tuple(nu)


def gl_character(mu) -> Counter:
    """Weight multiset of V_mu (exponent vectors), by repeated interlacing branching."""
    mu = check_gl(mu)
    if len(mu) == 1:
        return Counter({mu: 1})
    out = Counter()
    total = sum(mu)
    for nu in interlacing(mu):
        for w, m in gl_character(nu).items():
            out[w + (total - sum(nu),)] += m
    return out
