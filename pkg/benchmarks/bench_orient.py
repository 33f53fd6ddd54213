"""Benchmark transitive orientation with and without the numba kernels.

Each mode runs in its own subprocess because the kernel choice is fixed at
import time by REPEXT_NUMBA.

    python benchmarks/bench_orient.py --blocks 200 --repeat 5
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, random, sys, time
from repext import _kernels
from repext.generate import sparse_comparability_graph
from repext.graph import Graph
from repext.orient import orient_ext

blocks, repeat, seed = int(sys.argv[1]), int(sys.argv[2]), int(sys.argv[3])
g, partial = sparse_comparability_graph(random.Random(seed), blocks=blocks)
t0 = time.perf_counter()
orient_ext(Graph(3, [(0, 1), (1, 2)]))
warmup = time.perf_counter() - t0
times = []
for _ in range(repeat):
    t0 = time.perf_counter()
    out = orient_ext(g, partial)
    times.append(time.perf_counter() - t0)
arcs = sorted(out.arcs()) if out is not None else None
print(json.dumps({"numba": _kernels.USE_NUMBA, "n": g.n, "m": g.m, "warmup": warmup,
                  "best": min(times), "median": sorted(times)[len(times) // 2],
                  "digest": hash(tuple(arcs)) if arcs else None}))
"""


def run_mode(flag: str, blocks: int, repeat: int, seed: int) -> dict:
    env = dict(os.environ, REPEXT_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", CHILD, str(blocks), str(repeat), str(seed)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--blocks", type=int, default=200, help="10-vertex components in the graph")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    fast = run_mode("1", args.blocks, args.repeat, args.seed)
    slow = run_mode("0", args.blocks, args.repeat, args.seed)
    print(f"graph: n={fast['n']} m={fast['m']}")
    for name, r in (("numba", fast), ("pure python", slow)):
        print(f"{name:12s} warmup {r['warmup']:.3f}s  best {r['best']:.4f}s  median {r['median']:.4f}s")
    print(f"speedup (best): {slow['best'] / fast['best']:.1f}x")
    print(f"same orientation: {fast['digest'] == slow['digest']}")


if __name__ == "__main__":
    main()
