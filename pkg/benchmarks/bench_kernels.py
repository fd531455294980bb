"""Compare the compiled and pure-Python state-set kernels.

Two measurements:

* merge: repeated ``extend`` calls on a growing frontier, both kernels in-process;
* solve: whole solves of generated instances, each kernel in its own
  interpreter (the kernel is chosen at import via RECORDKP_KERNEL).

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import subprocess
import sys
import time

from recordkp.kernels import _pykernel

try:
    from recordkp.kernels import _ckernel
except ImportError:
    _ckernel = None

SOLVE_SNIPPET = r"""
import json, sys, time
from recordkp.instance import GeneratorSpec, generate
from recordkp.solver import solve
cls, n, R, count = sys.argv[1], int(sys.argv[2]), int(sys.argv[3]), int(sys.argv[4])
times, opts = [], []
for h in range(1, count + 1):
    inst = generate(GeneratorSpec(cls, n, R=R, h=h, H=count, seed=h))
    t = time.perf_counter()
    r = solve(inst)
    times.append(time.perf_counter() - t)
    opts.append(r.optimum)
print(json.dumps({"times": times, "optima": opts, "kernel": r.stats["kernel"]}))
"""


def bench_merge(mod, items: list[tuple[int, int]], W: int) -> float:
    S = mod.StateSet(0, 0)
    t = time.perf_counter()
    for k, (p, w) in enumerate(items):
        S.extend(p, w, k % 64, W, 2 * W, -1, 0, False, 0, 1, 0, 1)
    return time.perf_counter() - t


def run_solves(kernel: str, cls: str, n: int, R: int, count: int) -> dict:
    env = dict(os.environ, RECORDKP_KERNEL=kernel)
    out = subprocess.run([sys.executable, "-c", SOLVE_SNIPPET, cls, str(n), str(R), str(count)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    if _ckernel is None:
        sys.exit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    rng = random.Random(1)
    sizes = (100, 200) if args.quick else (200, 400)
    print("merge benchmark (subset-sum style items, frontier grows to ~W states)")
    print(f"{'items':>6} {'W':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for m in sizes:
        items = [(w, w) for w in (rng.randint(100, 1000) for _ in range(m))]
        W = sum(w for _, w in items) // 2
        tp = bench_merge(_pykernel, items, W)
        tc = bench_merge(_ckernel, items, W)
        print(f"{m:>6} {W:>8} {tp:>10.3f} {tc:>10.3f} {tp / tc:>8.1f}")

    count = 5 if args.quick else 20
    cases = [("strongly-correlated", 1000, 10_000), ("subset-sum", 100, 1000), ("profit-ceiling", 300, 10_000)]
    print(f"\nend-to-end solves (median over {count} instances, h = 1..{count})")
    print(f"{'class':>22} {'n':>5} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for cls, n, R in cases:
        py = run_solves("python", cls, n, R, count)
        cy = run_solves("cython", cls, n, R, count)
        if py["optima"] != cy["optima"]:
            sys.exit(f"kernels disagree on {cls}: {py['optima']} vs {cy['optima']}")
        mp, mc = statistics.median(py["times"]) * 1e3, statistics.median(cy["times"]) * 1e3
        print(f"{cls:>22} {n:>5} {mp:>10.2f} {mc:>10.2f} {mp / mc:>8.1f}")


if __name__ == "__main__":
    main()
