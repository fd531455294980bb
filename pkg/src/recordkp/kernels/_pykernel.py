"""Pure-Python state set. Same contract as the compiled kernel, no size limits on integers."""

from __future__ import annotations

from bisect import bisect_right

NAME = "python"


class StateSet:
    """Weight-sorted non-dominated (profit, weight, mask) triples."""

    __slots__ = ("p", "w", "m")

    def __init__(self, p0: int = 0, w0: int = 0):
        self.p = [p0]
        self.w = [w0]
        self.m = [0]

    def __len__(self) -> int:
        return len(self.p)

    def get(self, k: int) -> tuple[int, int, int]:
        return self.p[k], self.w[k], self.m[k]

    def profits(self) -> list[int]:
        return list(self.p)

    def weights(self) -> list[int]:
        return list(self.w)

    def masks(self) -> list[int]:
        return list(self.m)

    def load(self, p, w, m=None) -> None:
        self.p, self.w = [int(v) for v in p], [int(v) for v in w]
        self.m = [0] * len(self.p) if m is None else [int(v) for v in m]

    def find_le(self, limit: int) -> int:
        """Index of the heaviest state with weight <= limit, or -1."""
        return bisect_right(self.w, limit) - 1

    def extend(self, dp, dw, bit, W, wmax, pmin, z1, has_nl, pl, wl, pr, wr, dry=False) -> int:
        """Merge the set with its copy shifted by (dp, dw).

        A state is kept when it is not dominated, weighs at most ``wmax``,
        has profit above ``pmin`` and its LP bound reaches ``z1``.  Returns the
        number of kept shifted states; with ``dry`` nothing is written and the
        return value is 1 as soon as one shifted state would survive.
        """
        P, Wt, M = self.p, self.w, self.m
        n = len(P)
        np_, nw, nm = [], [], []
        keep = ~(1 << bit) if bit >= 0 else -1
        setb = (1 << bit) if bit >= 0 else 0
        i = j = gen = 0
        have = False
        last = 0
        while i < n or j < n:
            if j >= n:
                take_old = True
            elif i >= n:
                take_old = False
            else:
                wa, wb = Wt[i], Wt[j] + dw
                if wa != wb:
                    take_old = wa < wb
                else:
                    take_old = P[i] >= P[j] + dp
            if take_old:
                cp, cw, cm = P[i], Wt[i], M[i] & keep
                i += 1
            else:
                cp, cw, cm = P[j] + dp, Wt[j] + dw, (M[j] & keep) | setb
                j += 1
            if cw > wmax:
                break
            if have and cp <= last:
                continue
            if cp <= pmin:
                continue
            if cw <= W:
                if cp * wr + (W - cw) * pr < z1 * wr:
                    continue
            elif not has_nl or cp * wl - (cw - W) * pl < z1 * wl:
                continue
            if not take_old:
                if dry:
                    return 1
                gen += 1
            have = True
            last = cp
            if not dry:
                np_.append(cp)
                nw.append(cw)
                nm.append(cm)
        if not dry:
            self.p, self.w, self.m = np_, nw, nm
        return gen

    def witness(self, dp: int, dw: int) -> int:
        """Weight of the lightest state whose shift by (dp, dw) is not itself a state, or -1."""
        P, Wt = self.p, self.w
        n = len(P)
        j = 0
        for k in range(n):
            tw, tp = Wt[k] + dw, P[k] + dp
            while j < n and Wt[j] < tw:
                j += 1
            if j >= n or Wt[j] != tw or P[j] != tp:
                return Wt[k]
        return -1
