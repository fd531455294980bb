"""Break item search and lazy construction of the enumeration order.

Items live in per-item arrays indexed by a stable id (the original item index).
Only ``perm`` (position -> id) is reordered.  Positions before the break
position are left items, the break position and everything after are right
items; sorting never moves an item across the break.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Callable, Sequence

INSERTION_CUTOFF = 10


@dataclass(frozen=True)
class BreakInfo:
    pos: int | None  # 0-based break position, None when everything fits
    item: int | None  # id of the break item
    p_hat: int
    w_hat: int
    full_fit: bool

    @property
    def b(self) -> int | None:
        """1-based break index in efficiency order."""
        return None if self.pos is None else self.pos + 1


class IntervalStack:
    """Lazy sorter over ``perm``.

    ``left`` and ``right`` hold unsorted position intervals ``[a, c]``; the top of
    each stack is the interval nearest to the break.  Positions outside every
    interval are in their final place.  The core is ``[l, r]``.
    """

    def __init__(self, P: Sequence[int], Wt: Sequence[int], perm: list[int], rng: random.Random):
        self.P, self.Wt, self.perm, self.rng = P, Wt, perm, rng
        self.left: list[tuple[int, int]] = []
        self.right: list[tuple[int, int]] = []
        self.l = 0
        self.r = -1
        self.comparisons = 0

    # -- ordering ---------------------------------------------------------
    def before(self, a: int, b: int) -> bool:
        """Item a strictly precedes item b: higher efficiency, ties by larger weight."""
        self.comparisons += 1
        x = self.P[a] * self.Wt[b]
        y = self.P[b] * self.Wt[a]
        return x > y or (x == y and self.Wt[a] > self.Wt[b])

    def _cmp(self, a: int, b: int) -> int:
        if self.before(a, b):
            return -1
        return 1 if self.before(b, a) else 0

    def sort_range(self, lo: int, hi: int) -> None:
        if hi <= lo:
            return
        perm = self.perm
        if hi - lo + 1 < INSERTION_CUTOFF:
            for k in range(lo + 1, hi + 1):
                v = perm[k]
                j = k - 1
                while j >= lo and self.before(v, perm[j]):
                    perm[j + 1] = perm[j]
                    j -= 1
                perm[j + 1] = v
        else:
            perm[lo:hi + 1] = sorted(perm[lo:hi + 1], key=functools.cmp_to_key(self._cmp))

    def partition(self, lo: int, hi: int) -> int:
        """Hoare-style two-way partition around a random pivot; returns the pivot's final position."""
        perm = self.perm
        k = self.rng.randint(lo, hi)
        perm[lo], perm[k] = perm[k], perm[lo]
        v = perm[lo]
        i, j = lo, hi + 1
        while True:
            i += 1
            while i <= hi and self.before(perm[i], v):
                i += 1
            j -= 1
            while self.before(v, perm[j]):
                j -= 1
            if i >= j:
                break
            perm[i], perm[j] = perm[j], perm[i]
        perm[lo], perm[j] = perm[j], perm[lo]
        return j

    # -- lazy traversal ---------------------------------------------------
    def _split_fixed(self, a: int, c: int, fixed: Callable[[int], bool], fixed_high: bool) -> int:
        """Move fully fixed items of [a, c] to the end nearest the break; return the unfixed count."""
        ids = self.perm[a:c + 1]
        flags = [fixed(x) for x in ids]
        free = [x for x, f in zip(ids, flags) if not f]
        gone = [x for x, f in zip(ids, flags) if f]
        self.perm[a:c + 1] = free + gone if fixed_high else gone + free
        return len(free)

    def peek_left(self, fixed: Callable[[int], bool]) -> int | None:
        """Position of the next unfixed left item, settling it if needed. Fixed items passed are absorbed into the core."""
        while True:
            pos = self.l - 1
            if pos < 0:
                return None
            if self.left and self.left[-1][1] == pos:
                a, c = self.left.pop()
                cnt = self._split_fixed(a, c, fixed, fixed_high=True)
                if cnt == 0:
                    self.l = a
                    continue
                k = a + cnt - 1
                self.l = k + 1
                while True:
                    if k - a + 1 < INSERTION_CUTOFF:
                        self.sort_range(a, k)
                        break
                    i = self.partition(a, k)
                    if a <= i - 1:
                        self.left.append((a, i - 1))
                    if i == k:
                        break
                    a = i + 1
                return k
            if fixed(self.perm[pos]):
                self.l = pos
                continue
            return pos

    def peek_right(self, fixed: Callable[[int], bool]) -> int | None:
        n = len(self.perm)
        while True:
            pos = self.r + 1
            if pos >= n:
                return None
            if self.right and self.right[-1][0] == pos:
                a, c = self.right.pop()
                cnt = self._split_fixed(a, c, fixed, fixed_high=False)
                if cnt == 0:
                    self.r = c
                    continue
                a = c - cnt + 1
                self.r = a - 1
                k = a
                while True:
                    if c - k + 1 < INSERTION_CUTOFF:
                        self.sort_range(k, c)
                        break
                    i = self.partition(k, c)
                    if i + 1 <= c:
                        self.right.append((i + 1, c))
                    if i == k:
                        break
                    c = i - 1
                return a
            if fixed(self.perm[pos]):
                self.r = pos
                continue
            return pos

    def next_left(self, fixed: Callable[[int], bool]) -> int | None:
        pos = self.peek_left(fixed)
        if pos is not None:
            self.l = pos
        return pos

    def next_right(self, fixed: Callable[[int], bool]) -> int | None:
        pos = self.peek_right(fixed)
        if pos is not None:
            self.r = pos
        return pos

    def full_sort_remaining(self) -> None:
        for a, c in self.left + self.right:
            self.sort_range(a, c)
        self.left.clear()
        self.right.clear()

    def sorted_up_to(self) -> bool:
        return not self.left and not self.right


def find_break(P: Sequence[int], Wt: Sequence[int], D: Sequence[int], W: int,
               rng: random.Random | None = None) -> tuple[BreakInfo, IntervalStack]:
    """Quickselect for the break item, leaving relatively sorted intervals behind."""
    n = len(P)
    st = IntervalStack(P, Wt, list(range(n)), rng or random.Random(0))
    perm = st.perm
    ws = ps = 0
    lo, hi = 0, n - 1
    b = None
    while True:
        if lo > hi:
            if lo >= n:
                break
            if st.right and st.right[-1][0] == lo:
                lo, hi = st.right.pop()
                continue
            x = perm[lo]
            if ws + D[x] * Wt[x] <= W:
                ws += D[x] * Wt[x]
                ps += D[x] * P[x]
                lo += 1
                continue
            b = lo
            break
        if hi - lo + 1 < INSERTION_CUTOFF:
            st.sort_range(lo, hi)
            for k in range(lo, hi + 1):
                x = perm[k]
                if ws + D[x] * Wt[x] > W:
                    b = k
                    break
                ws += D[x] * Wt[x]
                ps += D[x] * P[x]
            if b is not None:
                break
            lo = hi + 1
            continue
        i = st.partition(lo, hi)
        mw = sum(D[perm[k]] * Wt[perm[k]] for k in range(lo, i))
        x = perm[i]
        if ws + mw + D[x] * Wt[x] <= W:
            ws += mw + D[x] * Wt[x]
            ps += sum(D[perm[k]] * P[perm[k]] for k in range(lo, i)) + D[x] * P[x]
            if lo <= i - 1:
                st.left.append((lo, i - 1))
            lo = i + 1
        elif ws + mw <= W:
            ws += mw
            ps += sum(D[perm[k]] * P[perm[k]] for k in range(lo, i))
            if lo <= i - 1:
                st.left.append((lo, i - 1))
            if i + 1 <= hi:
                st.right.append((i + 1, hi))
            b = i
            break
        else:
            if i + 1 <= hi:
                st.right.append((i + 1, hi))
            hi = i - 1
    if b is None:
        st.l, st.r = n, n - 1
        return BreakInfo(None, None, ps, ws, True), st
    st.l, st.r = b, b - 1
    return BreakInfo(b, perm[b], ps, ws, False), st
