"""Item aggregation, halving (multiplicity) reduction with its reverse map, and dominance fixing.

The rewrites work in place on per-id arrays ``P``, ``Wt``, ``D`` and ``U`` and
take the ids of a sorted range in comparator order.  A merged-away item keeps
its profit and weight but gets ``D = U = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class ReductionError(ValueError):
    pass


@dataclass
class ReductionLog:
    """Applied rewrites in order: ('agg', i, j, d_i_before) and ('half', i, i2, d_i_before)."""

    entries: list = field(default_factory=list)
    pointer_steps: int = 0

    def aggregate(self, i: int, j: int, d_before: int) -> None:
        self.entries.append(("agg", i, j, d_before))

    def halve(self, i: int, i2: int, d_before: int) -> None:
        self.entries.append(("half", i, i2, d_before))

    def __len__(self) -> int:
        return len(self.entries)

    def forward(self, x: list[int]) -> list[int]:
        """Map an original-space vector into reduced space (x_i absorbs merged counts)."""
        x = list(x)
        for kind, i, j, _ in self.entries:
            if kind == "agg":
                x[i] += x[j]
            else:
                x[i] += 2 * x[j]
            x[j] = 0
        return x

    def reverse_map(self, x: Sequence[int], D: Sequence[int] | None = None) -> list[int]:
        """Map a reduced solution back to the original items; value and weight are unchanged.

        ``D`` (reduced availabilities), when given, is checked first.
        """
        x = list(x)
        if D is not None:
            for k, (a, b) in enumerate(zip(x, D)):
                if a < 0 or a > b:
                    raise ReductionError(f"reduced solution uses {a} copies of item {k}, {b} available")
        for kind, i, j, d_before in reversed(self.entries):
            if kind == "agg":
                xj = max(0, x[i] - d_before)
                x[j] = xj
                x[i] -= xj
            else:
                xj = max(0, -(-(x[i] - d_before) // 2))
                x[j] = xj
                x[i] -= 2 * xj
        return x


def aggregate_identical(order: Sequence[int], P: list[int], Wt: list[int], D: list[int], U: list[int],
                        log: ReductionLog) -> list[tuple[int, int]]:
    """Merge runs of equal (p, w) into their first member. ``order`` must be sorted."""
    merged = []
    head = None
    for j in order:
        if D[j] == 0:
            continue
        if head is not None and P[head] == P[j] and Wt[head] == Wt[j]:
            log.aggregate(head, j, D[head])
            D[head] += D[j]
            U[head] += U[j]
            D[j] = U[j] = 0
            merged.append((head, j))
        else:
            head = j
    return merged


def _double_before(P, Wt, s: int, big: int) -> bool:
    """Artificial item (2p_s, 2w_s) strictly precedes ``big`` in comparator order."""
    x, y = P[s] * Wt[big], P[big] * Wt[s]
    return x > y or (x == y and 2 * Wt[s] > Wt[big])


def _halving_pass(order: Sequence[int], P, Wt, D, U, log: ReductionLog) -> list[tuple[int, int]]:
    live = [k for k in order if D[k] > 0]
    merged = []
    steps = 0
    i = 0
    for a, big in enumerate(live):
        if D[big] == 0:
            continue
        i = max(i, a + 1)
        # the half of big can only sit after every item whose double precedes big
        while i < len(live) and (D[live[i]] == 0 or _double_before(P, Wt, live[i], big)):
            i += 1
            steps += 1
        if i < len(live):
            small = live[i]
            if 2 * P[small] == P[big] and 2 * Wt[small] == Wt[big]:
                log.halve(small, big, D[small])
                D[small] += 2 * D[big]
                U[small] += 2 * U[big]
                D[big] = U[big] = 0
                merged.append((small, big))
    log.pointer_steps += steps
    assert steps <= 2 * len(live)
    return merged


def multiplicity_reduce(order: Sequence[int], P: list[int], Wt: list[int], D: list[int], U: list[int],
                        log: ReductionLog) -> list[tuple[int, int]]:
    """Replace every (2p, 2w) item by two copies per unit of a present (p, w) item, until nothing changes."""
    out = []
    while True:
        step = _halving_pass(order, P, Wt, D, U, log)
        if not step:
            return out
        out += step


def cap_availability(d: int, w: int, W: int) -> int:
    return min(d, W // w)


def right_dominated(p: int, w: int, p2: int, w2: int) -> bool:
    """Right candidate (p2, w2) is no better than floor(w2/w) copies of (p, w)."""
    return w2 >= w and p2 <= p * (w2 // w)


def left_dominated(p: int, w: int, p2: int, w2: int) -> bool:
    """Removing left candidate (p2, w2) is no better than removing one copy of (p, w)."""
    return w2 <= w and p2 >= p


def fix_dominated_right(p: int, w: int, candidates: Iterable[tuple[int, int, int]]) -> list[int]:
    """Keys of right candidates (key, p', w') that cannot create new states after (p, w) created none."""
    return [k for k, p2, w2 in candidates if right_dominated(p, w, p2, w2)]


def fix_dominated_left(p: int, w: int, candidates: Iterable[tuple[int, int, int]]) -> list[int]:
    return [k for k, p2, w2 in candidates if left_dominated(p, w, p2, w2)]


def dominance_weight_filter(s_w: int, w: int, w2: int, wmax: int) -> bool:
    """May right candidate of weight w2 still generate a state? ``s_w`` is the witness state's weight."""
    return s_w + w2 - (w2 // w - 1) * w <= wmax
