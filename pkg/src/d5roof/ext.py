"""Ext groups between objects supported on (or restricted to) the divisor E.

Both settings reduce to the pair

    A = H(E, F^vee (x) G),    B = H(E, F^vee (x) G(-1,-1)).

Blow-up (pushforwards j_*F from the exceptional divisor, normal bundle O(-1,-1)):

    ... -> A^m -> Ext^m -> B^(m-1) -> A^(m+1) -> ...

Cayley trick (pullbacks j^*F to a (1,1)-divisor M):

    ... -> B^m -> A^m -> Ext^m -> B^(m+1) -> A^(m+1) -> ...

A table is exact when no connecting map can be nonzero; otherwise it is
Undetermined.  The Euler pairing chi(A) - chi(B) is always defined.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .bott import bott
from .bundles import O, BundleExpr, Dual, KClass, Tensor, Twist, euler_char, kclass, rep_class
from .weights import swap_spin
from .sequences import CohomologyTable, cohomology

MODES = ("blowup", "cayley")


@dataclass(frozen=True)
class ExtTable:
    dims: tuple = ()  # sorted ((degree, dim), ...)
    undetermined: bool = False
    certified_zero: bool = False
    reason: str = ""
    a: CohomologyTable | None = None
    b: CohomologyTable | None = None

    @property
    def is_zero(self) -> bool:
        return not self.undetermined and not self.dims

    def as_dict(self) -> dict:
        return dict(self.dims)

    @property
    def euler(self) -> int:
        return sum((-1) ** k * d for k, d in self.dims)

    def concentrated(self):
        """(degree, dim) if the table is determinate and lives in a single degree, else None."""
        if self.undetermined or len(self.dims) != 1:
            return None
        return self.dims[0]

    def __str__(self):
        if self.undetermined:
            return f"Undetermined ({self.reason})"
        if self.certified_zero:
            return "0 (certified)"
        if not self.dims:
            return "0"
        return ", ".join(f"Ext^{k}={d}" for k, d in self.dims)


def hom_bundle(f: BundleExpr, g: BundleExpr, twist=(0, 0)) -> BundleExpr:
    expr = Tensor(Dual(f), g)
    if twist != (0, 0):
        expr = Twist(expr, *twist)
    return expr


def ext_divisor(f: BundleExpr, g: BundleExpr, mode: str = "blowup") -> ExtTable:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    a = cohomology(hom_bundle(f, g))
    b = cohomology(hom_bundle(f, g, (-1, -1)))
    if a.is_zero and b.is_zero:
        return ExtTable(certified_zero=True, a=a, b=b)
    if a.undetermined or b.undetermined:
        which = "A" if a.undetermined else "B"
        return ExtTable(undetermined=True, reason=f"{which}: {(a if a.undetermined else b).reason}", a=a, b=b)
    A, B = a.as_dict(), b.as_dict()
    out = Counter()
    if mode == "blowup":
        for m, d in B.items():
            if A.get(m + 2):
                return ExtTable(
                    undetermined=True,
                    reason=f"connecting map B^{m} -> A^{m + 2} may be nonzero",
                    a=a,
                    b=b,
                )
        out.update(A)
        for m, d in B.items():
            out[m + 1] += d
    else:
        for m, d in B.items():
            if A.get(m):
                return ExtTable(
                    undetermined=True,
                    reason=f"restriction map B^{m} -> A^{m} may be nonzero",
                    a=a,
                    b=b,
                )
        out.update(A)
        for m, d in B.items():
            if m - 1 < 0:
                raise AssertionError("negative Ext degree")
            out[m - 1] += d
    return ExtTable(tuple(sorted((k, v) for k, v in out.items() if v)), a=a, b=b)


def euler_pairing(f: BundleExpr, g: BundleExpr) -> int:
    return euler_char(hom_bundle(f, g)) - euler_char(hom_bundle(f, g, (-1, -1)))


def bott_image(k: KClass) -> Counter:
    """Equivariant Euler characteristic: virtual D5-representation, keyed by highest weight."""
    out = Counter()
    for lam, m in k.items:
        r = bott(lam)
        if not r.is_zero:
            out[r.weight] += (-1) ** r.degree * m
    return Counter({k: v for k, v in out.items() if v})


def chi_rep(f, g) -> Counter:
    """chi(A) - chi(B) as a virtual representation; ``f``, ``g`` are expressions or K-classes."""
    kf = f if isinstance(f, KClass) else kclass(f)
    kg = g if isinstance(g, KClass) else kclass(g)
    hom = kf.dual().tensor(kg)
    out = bott_image(hom)
    out.subtract(bott_image(hom.twist(-1, -1)))
    return Counter({k: v for k, v in out.items() if v})


def rep_dual(rep: Counter) -> Counter:
    return Counter({swap_spin(k): v for k, v in rep.items()})


def rep_to_kclass(rep: Counter) -> KClass:
    total = KClass(())
    for lam, m in rep.items():
        total = total + rep_class(lam).scale(m)
    return total


def rep_dim(rep: Counter) -> int:
    from .weights import weyl_dim

    return sum(m * weyl_dim(lam) for lam, m in rep.items())


def ext_on_space(f: BundleExpr, g: BundleExpr) -> CohomologyTable:
    """Ext between the bundles themselves, i.e. H(F^vee (x) G)."""
    return cohomology(hom_bundle(f, g))


__all__ = ["ExtTable", "chi_rep", "bott_image", "rep_dual", "rep_to_kclass", "rep_dim", "MODES", "ext_divisor", "euler_pairing", "ext_on_space", "hom_bundle", "O"]
