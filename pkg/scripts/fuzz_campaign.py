#!/usr/bin/env python3
"""Long-running invariant sweep over random scenes.

A thicker wrapper around the library fuzz loop than the CLI subcommand:
runs mixed and convex-only campaigns back to back, prints per-invariant
tallies, and drops counterexample scenes (should any ever appear) under
the output directory.

Usage: python3 scripts/fuzz_campaign.py --iters 2000 --seed 7 --out-dir cx/
"""

import argparse
import sys
import time

from sightlines import FuzzConfig, fuzz


def campaign(name: str, cfg: FuzzConfig, out_dir: str) -> int:
    t0 = time.time()
    report = fuzz(cfg, out_dir=out_dir)
    dt = time.time() - t0
    print(f"== {name}: {cfg.iterations} iterations in {dt:.1f}s "
          f"({1000 * dt / max(cfg.iterations, 1):.0f} ms/iter)")
    print(report.summary())
    print()
    return report.failures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--iters", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--regions-max", type=int, default=8)
    args = ap.parse_args()

    failures = campaign(
        "mixed pieces",
        FuzzConfig(iterations=args.iters, seed=args.seed,
                   regionsMax=args.regions_max),
        args.out_dir,
    )
    failures += campaign(
        "convex only",
        FuzzConfig(iterations=args.iters, seed=args.seed,
                   regionsMax=args.regions_max, convexOnly=True),
        args.out_dir,
    )
    if failures:
        print(f"{failures} invariant failures; counterexamples in {args.out_dir}")
        return 1
    print("all invariants held")
    return 0


if __name__ == "__main__":
    sys.exit(main())
