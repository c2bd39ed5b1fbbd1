"""Tabulate the Hoppe-type vanishing on S- for both twist conventions.

For every (k, l) the script lists the irreducible summands of
wedge^l U-^vee (x) wedge^k U-^vee(-2l + t) and where their cohomology sits.
``t = -1`` is the uniform twist; ``--normalized`` uses the normalizing twist
of wedge^k U-^vee instead.

    python scripts/hoppe_table.py [--normalized] [--kmax 4] [--lmax 5]
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from d5roof.bott import bott
from d5roof.bundles import normalize
from d5roof.cy_pairs import hoppe_terms, normalizing_twist


@dataclass(frozen=True)
class TableConfig:
    kmax: int = 4
    lmax: int = 5
    normalized: bool = False


def rows(cfg: TableConfig):
    for k in range(1, cfg.kmax + 1):
        t = -normalizing_twist(k) if cfg.normalized else -1
        for l in range(cfg.lmax + 1):
            target = l if cfg.normalized else 0
            for lam, m in normalize(hoppe_terms(k, l, t)).items:
                r = bott(lam)
                bad = not r.is_zero and r.degree == target
                yield k, l, t, lam, m, r, bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--normalized", action="store_true")
    ap.add_argument("--kmax", type=int, default=TableConfig.kmax)
    ap.add_argument("--lmax", type=int, default=TableConfig.lmax)
    args = ap.parse_args(argv)
    cfg = TableConfig(args.kmax, args.lmax, args.normalized)
    nbad = 0
    for k, l, t, lam, m, r, bad in rows(cfg):
        nbad += bad
        mark = "  <-- obstructs" if bad else ""
        print(f"k={k} l={l} t={t:+d}  {m}*E{list(lam)}  {r}{mark}")
    print(f"{nbad} obstructing summand(s)")
    return 1 if nbad else 0


if __name__ == "__main__":
    raise SystemExit(main())
