"""Compare the reflection-walk bott against the brute-force Weyl-group oracle.

    python scripts/oracle_benchmark.py [--samples N] [--seed S] [--bound B]
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from d5roof.bott import bott, bott_oracle_batch


@dataclass(frozen=True)
class BenchConfig:
    samples: int = 10_000
    seed: int = 0
    bound: int = 8


def run(cfg: BenchConfig) -> dict:
    rng = random.Random(cfg.seed)
    lams = [tuple(rng.randint(-cfg.bound, cfg.bound) for _ in range(5)) for _ in range(cfg.samples)]
    t0 = time.perf_counter()
    fast = [bott(lam) for lam in lams]
    t1 = time.perf_counter()
    slow = bott_oracle_batch(lams)
    t2 = time.perf_counter()
    mismatches = [lam for lam, a, b in zip(lams, fast, slow) if a != b]
    degrees = {}
    for r in fast:
        key = "zero" if r.is_zero else r.degree
        degrees[key] = degrees.get(key, 0) + 1
    return {
        "mismatches": mismatches,
        "bott_seconds": t1 - t0,
        "oracle_seconds": t2 - t1,
        "degree_histogram": dict(sorted(degrees.items(), key=lambda kv: -1 if kv[0] == "zero" else kv[0])),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=BenchConfig.samples)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    ap.add_argument("--bound", type=int, default=BenchConfig.bound)
    args = ap.parse_args(argv)
    cfg = BenchConfig(args.samples, args.seed, args.bound)
    out = run(cfg)
    print(f"{cfg.samples} weights in [-{cfg.bound},{cfg.bound}]^5, seed {cfg.seed}")
    print(f"bott {out['bott_seconds']:.2f}s, oracle {out['oracle_seconds']:.2f}s")
    print(f"mismatches: {len(out['mismatches'])}")
    for k, v in out["degree_histogram"].items():
        print(f"  degree {k}: {v}")
    return 1 if out["mismatches"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
