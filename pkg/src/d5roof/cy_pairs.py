"""Linear algebra and cohomology checks for the Calabi-Yau pairs.

A (1,1)-section of the roof is a bilinear form [x, y, y^T S x] on
V16 x V16, so sections are 16 x 16 matrices.  Everything here is exact:
matrices are python-flint rationals and cohomology goes through BWB.
"""

from __future__ import annotations

import random
from math import comb
from dataclasses import dataclass, field
from fractions import Fraction

import flint

from .bott import bott
from .bundles import U_MINUS, Dual, Space, Tensor, Twist, Wedge, normalize
from .weights import fundamental, weyl_dim

N_SPIN = 16


class CYError(ValueError):
    pass


def as_matrix(rows) -> flint.fmpq_mat:
    """Accept nested lists of ints/Fractions/fmpq, or an fmpq_mat."""
    if isinstance(rows, flint.fmpq_mat):
        return rows
    rows = [[_q(x) for x in r] for r in rows]
    n = len(rows)
    if any(len(r) != len(rows[0]) for r in rows):
        raise CYError("ragged matrix")
    return flint.fmpq_mat(n, len(rows[0]) if rows else 0, [x for r in rows for x in r])


def _q(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return flint.fmpq(x)
    raise CYError(f"entries must be exact rationals, got {type(x).__name__}")


def to_fractions(m: flint.fmpq_mat) -> list:
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in m.tolist()]


def involution_action(S, M) -> flint.fmpq_mat:
    """The action of a duality isomorphism on sections: M^-1 S^T M."""
    S, M = as_matrix(S), as_matrix(M)
    if S.nrows() != S.ncols() or M.nrows() != M.ncols() or S.nrows() != M.nrows():
        raise CYError("S and M must be square of the same size")
    if M.det() == 0:
        raise CYError("M_f is singular")
    return M.inv() * S.transpose() * M


@dataclass
class SolutionSpace:
    basis: list  # fmpq_mat, n x n
    n: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def all_symmetric(self) -> bool:
        return all(k == k.transpose() for k in self.basis)


def commutant_transpose(S) -> SolutionSpace:
    """Kernel of K -> SK - KS^T by exact row reduction over Q."""
    S = as_matrix(S)
    n = S.nrows()
    if S.ncols() != n:
        raise CYError("S must be square")
    nn = n * n
    A = flint.fmpq_mat(nn, nn)
    for i in range(n):
        for j in range(n):
            row = i * n + j
            for k in range(n):
                s = S[i, k]
                if s != 0:
                    A[row, k * n + j] += s
                t = S[j, k]
                if t != 0:
                    A[row, i * n + k] -= t
    R, rank = A.rref()
    pivots, r = [], 0
    for c in range(nn):
        if r < rank and R[r, c] != 0:
            pivots.append(c)
            r += 1
    free = [c for c in range(nn) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [flint.fmpq(0)] * nn
        v[f] = flint.fmpq(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        basis.append(flint.fmpq_mat(n, n, v))
    return SolutionSpace(basis, n)


def charpoly_squarefree(S) -> bool:
    """gcd(chi_S, chi_S') = 1 over Q, i.e. S has distinct eigenvalues."""
    p = as_matrix(S).charpoly()
    return p.gcd(p.derivative()).degree() == 0


def random_generic_section(rng: random.Random, n: int = N_SPIN, bound: int = 10, max_tries: int = 50):
    """A random rational matrix with entries in [-bound, bound] and certified distinct eigenvalues."""
    for _ in range(max_tries):
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                q = rng.randint(1, 9)
                row.append(Fraction(rng.randint(-bound * q, bound * q), q))
            rows.append(row)
        S = as_matrix(rows)
        if charpoly_squarefree(S):
            return S
    raise CYError("no generic sample found")


@dataclass
class KleimanSample:
    index: int
    generic: bool
    dimension: int
    symmetric: bool


def kleiman_suite(samples: int = 20, seed: int = 0, n: int = N_SPIN) -> list:
    rng = random.Random(seed)
    out = []
    for i in range(samples):
        S = random_generic_section(rng, n)
        sol = commutant_transpose(S)
        out.append(KleimanSample(i, True, sol.dimension, sol.all_symmetric()))
    return out


@dataclass
class DimensionCount:
    n: int
    dim_hf: int
    dim_aut: int
    sym: int
    bound: int
    holds: bool
    printed_bound: int | None = None
    notes: list = field(default_factory=list)

    def report(self) -> str:
        lines = [
            f"N(N+1)/2 = {self.n}*{self.n + 1}/2 = {self.sym}",
            f"dim H_F - N(N+1)/2 = {self.dim_hf} - {self.sym} = {self.bound}",
            f"dim Aut = {self.dim_aut} <= {self.bound}: {self.holds}",
        ]
        return "\n".join(lines + self.notes)


def dimension_count(n: int, dim_hf: int, dim_aut: int, printed_bound: int | None = None) -> DimensionCount:
    if min(n, dim_hf, dim_aut) <= 0:
        raise CYError("dimensions must be positive")
    sym = n * (n + 1) // 2
    bound = dim_hf - sym
    dc = DimensionCount(n, dim_hf, dim_aut, sym, bound, dim_aut <= bound, printed_bound)
    if printed_bound is not None and printed_bound != bound:
        ok = dim_aut <= bound
        dc.notes.append(
            f"FLAG: printed bound {printed_bound} differs from {dim_hf} - {sym} = {bound}; "
            f"the inequality {'still holds' if ok else 'fails'} with the correct value"
        )
    return dc


def roof_count() -> DimensionCount:
    """The numbers for the D5 pair: N = 16, dim H_F = dim V_{w4+w5}, Aut inside SO(10)."""
    hf = weyl_dim(tuple(a + b for a, b in zip(fundamental(4), fundamental(5))))
    so10 = weyl_dim(fundamental(2))
    return dimension_count(N_SPIN, hf, so10, printed_bound=174)


# ---------------------------------------------------------------------------
# cohomology on S-


@dataclass
class SummandVerdict:
    label: str
    weight: tuple
    degree: int | None
    ok: bool


@dataclass
class CohomologyReport:
    name: str
    verdicts: list

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def failures(self) -> list:
        return [v for v in self.verdicts if not v.ok]


def _summands(expr):
    ms = normalize(expr)
    if ms.space is not Space.MINUS:
        raise CYError(f"expected a bundle on S-, got {ms.space}")
    return ms.items


def unique_section_terms(k: int):
    return Tensor(U_MINUS, Twist(Wedge(k, Dual(U_MINUS)), 0, -2 * (k - 1)))


def unique_section_check(ks=range(1, 6)) -> CohomologyReport:
    """U- (x) wedge^k U-^vee(-2(k-1)h-): no cohomology below degree k.

    For k = 1 the term is End(U-), the source of the restriction map; it
    must be exactly C[0] (U- is simple).
    """
    out = []
    for k in ks:
        if k > 5:
            continue
        items = _summands(unique_section_terms(k))
        if k == 1:
            h0 = sum(m * bott(lam).dim for lam, m in items if bott(lam).degree == 0)
            others = [lam for lam, m in items if not bott(lam).is_zero and bott(lam).degree != 0]
            out.append(SummandVerdict("k=1 End(U-)", (), 0, h0 == 1 and not others))
            continue
        for lam, m in items:
            r = bott(lam)
            ok = r.is_zero or r.degree >= k
            out.append(SummandVerdict(f"k={k}", lam, r.degree, ok))
    return CohomologyReport("unique_section", out)


def normalizing_twist(k: int) -> int:
    """The t with -rk + 1 <= c1(wedge^k U-^vee(t)) <= 0, in units of h-.

    c1(U-^vee) = 2h- (its determinant is O(0,2)), so c1(wedge^k) = 2 C(4, k-1).
    """
    rk = comb(5, k)
    c1 = 2 * comb(4, k - 1)
    return -(-c1 // rk)


def hoppe_terms(k: int, l: int, twist: int = -1):
    base = Twist(Wedge(k, Dual(U_MINUS)), 0, -2 * l + twist)
    if l == 0:
        return base
    return Tensor(Wedge(l, Dual(U_MINUS)), base)


def hoppe_check(ks=range(1, 5), ls=range(0, 6), normalized: bool = False) -> CohomologyReport:
    """Vanishing for wedge^l U-^vee (x) wedge^k U-^vee(-2l h- + t h-).

    With ``normalized=False`` this is the uniform t = -1 form and the test
    is H^0 of every irreducible summand.  With ``normalized=True``, t is the
    normalizing twist of wedge^k and the test is H^l, the degree that feeds
    H^0 through the Koszul complex of Y.
    """
    out = []
    for k in ks:
        if k < 1:
            raise CYError("k = 0 is outside the criterion")
        t = -normalizing_twist(k) if normalized else -1
        for l in ls:
            deg = l if normalized else 0
            for lam, m in _summands(hoppe_terms(k, l, t)):
                r = bott(lam)
                out.append(SummandVerdict(f"k={k}, l={l}", lam, r.degree, r.is_zero or r.degree != deg))
    return CohomologyReport("hoppe-normalized" if normalized else "hoppe", out)


__all__ = [
    "CYError",
    "SolutionSpace",
    "DimensionCount",
    "CohomologyReport",
    "as_matrix",
    "to_fractions",
    "involution_action",
    "commutant_transpose",
    "charpoly_squarefree",
    "random_generic_section",
    "kleiman_suite",
    "dimension_count",
    "roof_count",
    "unique_section_check",
    "hoppe_check",
    "unique_section_terms",
    "hoppe_terms",
    "normalizing_twist",
]
