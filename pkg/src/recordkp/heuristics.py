"""Primal heuristics.

Everything here works on per-id arrays ``P``, ``Wt``, ``D`` and the position
array ``perm``; ``pos_b`` is the break position.  Pairing helpers return the
index of the state they pair with so the caller can record a snapshot.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

SSPH_ALPHA = 20
SPH_DIVISOR = 50
SPH_KAPPA = 3


@dataclass
class Found:
    """A heuristic solution: value, weight and either a full vector or a state index plus item offsets."""

    value: int
    weight: int
    x: list[int] | None = None
    state: int = -1
    extra: tuple[tuple[int, int], ...] = ()
    origin: str = ""


def extended_break(P, Wt, D, perm, pos_b: int, p_hat: int, w_hat: int, W: int) -> tuple[list[int], int, int, int]:
    """Break solution plus as many copies of the break item as fit: (x, value, weight, copies of b)."""
    x = [0] * len(P)
    for k in range(pos_b):
        x[perm[k]] = D[perm[k]]
    b = perm[pos_b]
    kb = min(D[b], (W - w_hat) // Wt[b])
    x[b] = kb
    return x, p_hat + kb * P[b], w_hat + kb * Wt[b], kb


def initial_heuristics(P, Wt, D, perm, pos_b: int, p_hat: int, w_hat: int, W: int) -> Found:
    """Best of the extended break solution and its three one-move neighbourhoods."""
    n = len(perm)
    x, v0, w0, kb = extended_break(P, Wt, D, perm, pos_b, p_hat, w_hat, W)
    b = perm[pos_b]
    room = W - w0
    best = (v0, None)
    right = [perm[k] for k in range(pos_b + 1, n)]

    # (i) fill the residual capacity with copies of one right item
    for i in right:
        e = min(D[i], room // Wt[i])
        if e and v0 + e * P[i] > best[0]:
            best = (v0 + e * P[i], ((i, e),))

    # (ii) drop one copy of the least efficient packed item, then fill with one right item
    if kb > 0:
        t = b
    elif pos_b > 0:
        t = perm[0]
        for k in range(1, pos_b):
            c = perm[k]
            if P[c] * Wt[t] < P[t] * Wt[c] or (P[c] * Wt[t] == P[t] * Wt[c] and Wt[c] < Wt[t]):
                t = c
    else:
        t = None
    if t is not None:
        r2 = room + Wt[t]
        for i in right:
            e = min(D[i], r2 // Wt[i])
            v = v0 - P[t] + e * P[i]
            if e and v > best[0]:
                best = (v, ((t, -1), (i, e)))

    # (iii) drop enough copies of one left item to fit another copy of b
    if kb < D[b]:
        need = Wt[b] - room
        for k in range(pos_b):
            i = perm[k]
            e = -(-need // Wt[i])
            if e <= D[i]:
                v = v0 - e * P[i] + P[b]
                if v > best[0]:
                    best = (v, ((i, -e), (b, 1)))

    value, moves = best
    if moves:
        for i, e in moves:
            x[i] += e
    weight = sum(x[i] * Wt[i] for i in range(len(x)) if x[i])
    return Found(value, weight, x=x, origin="initial")


def greedy_fill(perm: Sequence[int], start: int, P, Wt, avail: Callable[[int], int], room: int,
                skip=()) -> tuple[int, int, list[tuple[int, int]]]:
    """Add as many copies as fit, scanning positions from ``start``; returns (gain, weight, additions)."""
    gain = used = 0
    adds = []
    for k in range(start, len(perm)):
        i = perm[k]
        if i in skip:
            continue
        e = min(avail(i), (room - used) // Wt[i])
        if e > 0:
            adds.append((i, e))
            gain += e * P[i]
            used += e * Wt[i]
    return gain, used, adds


def pair(S, dp: int, dw: int, W: int) -> tuple[int, int] | None:
    """Best state that stays feasible after the offset: (value, state index)."""
    k = S.find_le(W - dw)
    if k < 0:
        return None
    sp, sw, _ = S.get(k)
    if sw + dw < 0:
        return None
    return sp + dp, k


def pairing(S, offsets: Sequence[tuple[int, int, tuple]], W: int, z: int, origin: str = "ph") -> Found | None:
    """Pair every offset (dp, dw, extra) with its best state; keep the best improvement over z."""
    best = None
    for dp, dw, extra in offsets:
        r = pair(S, dp, dw, W)
        if r is not None and r[0] > z and (best is None or r[0] > best.value):
            best = Found(r[0], S.get(r[1])[1] + dw, state=r[1], extra=extra, origin=origin)
    return best


def ssph_k(size: int, n_avail: int, alpha: int = SSPH_ALPHA) -> int:
    """Largest k with alpha * k * 2^k <= |S|, capped by the number of available items."""
    k = 0
    while alpha * (k + 1) * (1 << (k + 1)) <= size:
        k += 1
    return min(k, n_avail)


def subset_offsets(moves: Sequence[tuple[int, int, int, int]]) -> list[tuple[int, int, tuple]]:
    """All subsets of two or more moves (id, copies, dp, dw) as pairing offsets."""
    out = []
    for size in range(2, len(moves) + 1):
        for sub in combinations(moves, size):
            out.append((sum(m[2] for m in sub), sum(m[3] for m in sub), tuple((m[0], m[1]) for m in sub)))
    return out


def sph_blocks(size: int, n: int, lo: int, hi: int, span: int, kappa: int = SPH_KAPPA) -> list[tuple[int, int]]:
    """Position blocks [a, c) for sampling in [lo, hi); ``span`` is the side length used in the block rule."""
    beta = -(-size // SPH_DIVISOR)
    gamma = n // beta
    g = min(span, gamma)
    if g < kappa or hi <= lo:
        return []
    return [(a, min(a + g, hi)) for a in range(lo, hi, g)]


def sample_block(perm, a: int, c: int, usable: Callable[[int], bool], rng: random.Random) -> int | None:
    """A random usable id from positions [a, c): one draw, then a scan from the drawn point."""
    m = c - a
    k0 = rng.randrange(m)
    for t in range(m):
        i = perm[a + (k0 + t) % m]
        if usable(i):
            return i
    return None


def tph_allowed(pairs: int, size: int) -> bool:
    return size > 1 and pairs < size / math.log2(size)
