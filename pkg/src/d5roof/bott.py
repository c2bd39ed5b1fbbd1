"""Borel-Weil-Bott for irreducible homogeneous bundles E_lambda on D5/P.

``bott`` is the reflection walk on lambda + rho; ``bott_oracle`` searches the
whole Weyl group and is kept only as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .weights import (
    N_POSITIVE_ROOTS,
    RHO,
    add,
    is_dominant,
    reflect,
    sub,
    weight,
    weyl_dim,
    weyl_matrices,
)


class BottError(RuntimeError):
    pass


@dataclass(frozen=True)
class CohomologyResult:
    """Either zero (``degree is None``) or a single V_mu in degree ``degree``."""

    degree: int | None = None
    weight: tuple | None = None
    dim: int = 0

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    def __str__(self):
        if self.is_zero:
            return "0"
        return f"H^{self.degree} = V{list(self.weight)} (dim {self.dim})"


ZERO_RESULT = CohomologyResult()


@lru_cache(maxsize=1 << 16)
def bott(lam) -> CohomologyResult:
    lam = weight(lam)
    if is_dominant(lam):
        return CohomologyResult(0, lam, weyl_dim(lam))
    v = add(lam, RHO)
    steps = 0
    while True:
        if any(a == 0 for a in v):
            return ZERO_RESULT
        neg = next((k for k, a in enumerate(v) if a < 0), None)
        if neg is None:
            mu = sub(v, RHO)
            return CohomologyResult(steps, mu, weyl_dim(mu))
        if steps >= N_POSITIVE_ROOTS:
            raise BottError(f"reflection walk exceeded {N_POSITIVE_ROOTS} steps for {lam}")
        v = reflect(neg + 1, v)
        steps += 1


def bott_oracle(lam) -> CohomologyResult:
    lam = weight(lam)
    mats, lengths, _ = weyl_matrices()
    v = np.array(add(lam, RHO), dtype=np.int64)
    images = mats @ v
    hits = np.nonzero((images > 0).all(axis=1))[0]
    if len(hits) == 0:
        return ZERO_RESULT
    if len(hits) > 1:
        raise BottError(f"{len(hits)} Weyl elements make {lam}+rho strictly dominant")
    k = hits[0]
    mu = sub(tuple(int(x) for x in images[k]), RHO)
    return CohomologyResult(int(lengths[k]), mu, weyl_dim(mu))


def bott_oracle_batch(lams) -> list:
    """Vectorised oracle over many weights at once (same contract as bott_oracle)."""
    mats, lengths, _ = weyl_matrices()
    arr = np.asarray(lams, dtype=np.int64) + np.array(RHO, dtype=np.int64)
    images = np.einsum("kij,nj->nki", mats, arr)
    positive = (images > 0).all(axis=2)
    out = []
    for n in range(arr.shape[0]):
        hits = np.nonzero(positive[n])[0]
        if len(hits) == 0:
            out.append(ZERO_RESULT)
            continue
        if len(hits) > 1:
            raise BottError(f"non-unique dominant image for {tuple(arr[n] - 1)}")
        k = hits[0]
        mu = tuple(int(x) - 1 for x in images[n, k])
        out.append(CohomologyResult(int(lengths[k]), mu, weyl_dim(mu)))
    return out


def euler_characteristic(lam) -> int:
    r = bott(lam)
    return 0 if r.is_zero else (-1) ** r.degree * r.dim


@lru_cache(maxsize=4096)
def relative_bott(lam, nodes) -> tuple | None:
    """BWB for the fibres of G/P -> G/Q: the walk uses only the reflections in ``nodes``.

    Returns (degree, weight) with the weight dominant for ``nodes``, or None
    when lam + rho is singular for the Levi of Q.
    """
    v = add(weight(lam), RHO)
    steps = 0
    while True:
        if any(v[i - 1] == 0 for i in nodes):
            return None
        neg = next((i for i in nodes if v[i - 1] < 0), None)
        if neg is None:
            return steps, sub(v, RHO)
        if steps >= N_POSITIVE_ROOTS:
            raise BottError(f"relative walk exceeded {N_POSITIVE_ROOTS} steps for {lam}")
        v = reflect(neg, v)
        steps += 1
