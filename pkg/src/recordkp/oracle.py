"""Reference solvers used as ground truth in tests: exhaustive search and a plain table DP."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .instance import Instance, Solution, make_solution

BRUTE_FORCE_LIMIT = 10**8
DP_CELL_LIMIT = 10**9


class OracleGuardError(RuntimeError):
    """The instance is too large for the requested oracle."""


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: Solution


def brute_force(inst: Instance, capacity: int | None = None) -> OracleResult:
    """Enumerate every feasible multiplicity vector depth-first."""
    W = inst.capacity if capacity is None else capacity
    space = math.prod(it.availability + 1 for it in inst.items)
    if space > BRUTE_FORCE_LIMIT:
        raise OracleGuardError(f"search space {space} exceeds {BRUTE_FORCE_LIMIT}")
    P, Wt, D = inst.profits, inst.weights, inst.availabilities
    n = inst.n
    x = [0] * n
    best = [-1, None]

    def dfs(k: int, value: int, room: int) -> None:
        if k == n:
            if value > best[0]:
                best[0] = value
                best[1] = list(x)
            return
        p, w = P[k], Wt[k]
        top = min(D[k], room // w)
        for c in range(top + 1):
            x[k] = c
            dfs(k + 1, value + c * p, room - c * w)
        x[k] = 0

    dfs(0, 0, W)
    return OracleResult(best[0], make_solution(inst, best[1]))


def _pieces(inst: Instance):
    for i, it in enumerate(inst.items):
        left, m = it.availability, 1
        while left > 0:
            take = min(m, left)
            yield i, take
            left -= take
            m *= 2


def textbook_dp(inst: Instance, capacity: int | None = None) -> OracleResult:
    """0/1 table DP over the binary split of every availability, with a parent table."""
    W = inst.capacity if capacity is None else capacity
    pieces = list(_pieces(inst))
    if len(pieces) * (W + 1) > DP_CELL_LIMIT:
        raise OracleGuardError(f"{len(pieces)} x {W + 1} cells exceed {DP_CELL_LIMIT}")
    total = sum(it.profit * it.availability for it in inst.items)
    dtype = np.int64 if total < 2**62 else object
    dp = np.zeros(W + 1, dtype=dtype)
    took = np.zeros((len(pieces), W + 1), dtype=bool)
    for k, (i, m) in enumerate(pieces):
        p, w = inst.items[i].profit * m, inst.items[i].weight * m
        if w > W:
            continue
        cand = dp[: W + 1 - w] + p
        better = cand > dp[w:]
        took[k, w:] = better
        dp[w:] = np.where(better, cand, dp[w:])
    x = [0] * inst.n
    c = W
    for k in range(len(pieces) - 1, -1, -1):
        if took[k, c]:
            i, m = pieces[k]
            x[i] += m
            c -= inst.items[i].weight * m
    return OracleResult(int(dp[W]), make_solution(inst, x))
