"""Regenerate the Jooken-layout fixture files and their optima.

The files imitate the layout of the Jooken benchmark ("n", then "index p w"
lines, then W) with grouped near-equal items at large magnitudes.  Optima come
from the textbook DP oracle (a second or so in total); the results
are stored in optima.json so the tests only read them.

    python tests/fixtures/make_jooken.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from recordkp.instance import Instance, Item, write_instance
from recordkp.oracle import textbook_dp

HERE = Path(__file__).parent / "jooken"

# name -> (seed, n, groups, capacity)
PLAN = {
    "jk_n40_g2_c2e5": (1, 40, 2, 200_000),
    "jk_n50_g3_c5e5": (2, 50, 3, 500_000),
    "jk_n60_g4_c1e6": (3, 60, 4, 1_000_000),
    "jk_n80_g2_c3e5": (4, 80, 2, 300_000),
    "jk_n30_g5_c8e5": (5, 30, 5, 800_000),
    "jk_n100_g3_c1e5": (6, 100, 3, 100_000),
}


def build(seed: int, n: int, groups: int, W: int) -> Instance:
    rng = random.Random(seed)
    items = []
    centers = [rng.randint(W // (3 * groups), W // groups) for _ in range(groups)]
    for k in range(n):
        c = centers[k % groups]
        w = c + rng.randint(-c // 50, c // 50)
        p = w + rng.randint(-c // 100, c // 20)
        items.append(Item(max(1, p), max(1, w), 1))
    return Instance(items, W)


def main() -> None:
    HERE.mkdir(exist_ok=True)
    optima = {}
    for name, (seed, n, g, W) in PLAN.items():
        inst = build(seed, n, g, W)
        (HERE / f"{name}.txt").write_text(write_instance(inst, "jooken"))
        optima[name + ".txt"] = textbook_dp(inst).optimum
        print(name, optima[name + ".txt"], flush=True)
    (HERE / "optima.json").write_text(json.dumps(optima, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
