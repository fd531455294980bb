"""Solution reconstruction from a state's mask, the bucket history and a residual solve.

A state only knows which of the last ``bits`` buckets produced it.  Decoding
fills in everything else positionally (items before the core keep all copies,
items after it none), reads the known buckets from the mask and collects the
copies of older buckets into a residual instance that is solved with a known
target value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .instance import Instance, Item


class RecoveryError(RuntimeError):
    pass


@dataclass(frozen=True)
class Snapshot:
    sp: int
    sw: int
    mask: int
    t_now: int  # history length when the state was read
    l: int
    r: int


def capture(S, k: int, history_len: int, l: int, r: int) -> Snapshot:
    sp, sw, m = S.get(k)
    return Snapshot(sp, sw, m, history_len, l, r)


@dataclass
class Decoded:
    x: list[int]
    residual: dict = field(default_factory=dict)  # id -> copies still undecided
    target: int = 0
    cap: int = 0

    @property
    def done(self) -> bool:
        return self.target <= 0 or not self.residual


def decode(snap: Snapshot, perm: Sequence[int], P: Sequence[int], Wt: Sequence[int], D: Sequence[int],
           pos_b: int, history: Sequence[tuple[int, int]], bits: int) -> Decoded:
    """Partial solution for ``snap`` plus the residual problem covering forgotten buckets."""
    x = [0] * len(P)
    for k in range(snap.l):
        x[perm[k]] = D[perm[k]]
    for k in range(snap.l, min(snap.r, len(perm) - 1) + 1):
        if k < pos_b:
            x[perm[k]] = D[perm[k]]
    left = set(perm[k] for k in range(snap.l, min(pos_b, snap.r + 1)))
    residual: dict[int, int] = {}
    lo = snap.t_now - bits
    for t in range(snap.t_now):
        i, m = history[t]
        sign = -1 if i in left else 1
        if t >= lo:
            if snap.mask >> (t % bits) & 1:
                x[i] += sign * m
        else:
            if sign < 0:
                x[i] -= m
            residual[i] = residual.get(i, 0) + m
    pp = sum(P[i] * c for i, c in enumerate(x) if c)
    ww = sum(Wt[i] * c for i, c in enumerate(x) if c)
    if any(c < 0 or c > D[i] for i, c in enumerate(x)):
        raise RecoveryError("decoded multiplicities out of range")
    out = Decoded(x, residual, snap.sp - pp, snap.sw - ww)
    if not residual and (pp != snap.sp or ww != snap.sw):
        raise RecoveryError(f"mask decode mismatch: ({pp}, {ww}) vs state ({snap.sp}, {snap.sw})")
    return out


def residual_instance(dec: Decoded, P: Sequence[int], Wt: Sequence[int]) -> tuple[Instance, list[int]] | None:
    """Residual items that fit, as an instance plus the id of each item; None when nothing is left."""
    ids = [i for i in sorted(dec.residual) if Wt[i] <= dec.cap]
    if not ids or dec.cap < 1:
        return None
    return Instance([Item(P[i], Wt[i], dec.residual[i]) for i in ids], dec.cap), ids


def solve_reduced(dec: Decoded, P: Sequence[int], Wt: Sequence[int],
                  solver: Callable[[Instance, int], Sequence[int] | None]) -> list[int]:
    """Complete a decoded solution. ``solver(inst, target)`` returns a vector of value >= target or None."""
    x = list(dec.x)
    if dec.done:
        return x
    ri = residual_instance(dec, P, Wt)
    if ri is None:
        raise RecoveryError(f"residual target {dec.target} unreachable")
    inst, ids = ri
    y = solver(inst, dec.target)
    if y is None:
        raise RecoveryError(f"residual target {dec.target} unreachable")
    for i, c in zip(ids, y):
        x[i] += c
    return x


def apply_extra(x: list[int], extra: Sequence[tuple[int, int]]) -> list[int]:
    for i, c in extra:
        x[i] += c
    return x
