#!/usr/bin/env python3
"""Timing profile of the exact visibility kernel by scene size.

Prints a small table: regions per scene vs mean wall time of
compute_visibility_graph over seeded random scenes. Useful when touching
the sweep internals; the kernel cost is dominated by the number of
candidate lines, which grows quadratically in scene vertices.

Usage: python3 scripts/bench_kernel.py [--samples 20]
"""

import argparse
import sys
import time

from sightlines import FuzzConfig, compute_visibility_graph, random_scene


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 5, 8, 12])
    args = ap.parse_args()

    print(f"{'regions':>8} {'mean ms':>9} {'max ms':>9} {'edges':>6}")
    for n in args.sizes:
        cfg = FuzzConfig(iterations=0, regionsMin=n, regionsMax=n,
                         coordinateRange=20 + 10 * n, seed=1)
        times = []
        edges = 0
        for i in range(args.samples):
            scene = random_scene(cfg, i)
            t0 = time.perf_counter()
            vg = compute_visibility_graph(scene)
            times.append(time.perf_counter() - t0)
            edges += len(vg.edges)
        mean = 1000 * sum(times) / len(times)
        print(f"{n:>8} {mean:>9.1f} {1000 * max(times):>9.1f} "
              f"{edges / args.samples:>6.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
