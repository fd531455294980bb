"""DP frontier helpers: bucket decomposition, guarded expansion, capacity and profit filters."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels

MASK_BITS = 64
GUARD_START = 10
GUARD_FORCE = 40
NO_FLOOR = -1  # profit floor that keeps every state (profits are never negative)


def binary_decompose(u: int) -> list[int]:
    """Bucket sizes 1, 2, 4, ..., 2^h, a covering every count in [0, u]."""
    out = []
    m = 1
    while u > 0:
        take = min(m, u)
        out.append(take)
        u -= take
        m *= 2
    return out


def skip_first_iteration(generated: int) -> bool:
    """A single-copy pass that created nothing makes every further copy useless."""
    return generated == 0


def skip_after_empty_bucket(generated: int) -> bool:
    return generated == 0


@dataclass
class GuardCounter:
    """Consecutive empty extensions on one side and the read-only-check threshold."""

    threshold: int = GUARD_START
    empty: int = 0
    skips: int = 0
    checks: int = 0
    forced: int = 0

    def wants_check(self) -> bool:
        return self.empty > self.threshold

    def record_check(self, found: bool) -> bool:
        """Register a read-only check. Returns True when the extension must run."""
        self.checks += 1
        if found:
            self.threshold *= 2
            self.skips = 0
            return True
        if self.skips >= GUARD_FORCE:
            self.forced += 1
            self.skips = 0
            return True
        self.skips += 1
        return False

    def record(self, generated: int) -> None:
        if generated:
            self.empty = 0
        else:
            self.empty += 1


@dataclass
class Ledger:
    """Capacity ceiling and profit floor for states.

    ``left_rem`` is the weight of removable copies of left items not yet
    processed; ``p_right`` the profit of addable copies of unprocessed right items.
    """

    W: int
    left_rem: int
    p_right: int
    enabled: bool = True
    static_wmax: int = 0

    @property
    def wmax(self) -> int:
        return self.W + self.left_rem if self.enabled else self.static_wmax

    def pmin(self, z: int) -> int:
        """States need profit strictly above this value."""
        return z - self.p_right if self.enabled else NO_FLOOR

    def drop_left(self, copies: int, w: int) -> None:
        self.left_rem -= copies * w

    def drop_right(self, copies: int, p: int) -> None:
        self.p_right -= copies * p


@dataclass
class Neighbours:
    """Efficiency of the next left and right candidates for the state bound."""

    nl: tuple[int, int] | None
    nr: tuple[int, int] | None

    def args(self) -> tuple:
        has_nl = self.nl is not None
        pl, wl = self.nl if has_nl else (0, 1)
        pr, wr = self.nr if self.nr is not None else (0, 1)
        return has_nl, pl, wl, pr, wr


def new_state_set(p0: int, w0: int, magnitude: int):
    return kernels.select(magnitude).StateSet(p0, w0)


def extend(S, dp: int, dw: int, bit: int, W: int, ledger: Ledger, z: int, nb: Neighbours,
           dry: bool = False) -> int:
    has_nl, pl, wl, pr, wr = nb.args()
    return S.extend(dp, dw, bit, W, ledger.wmax, ledger.pmin(z), z + 1, has_nl, pl, wl, pr, wr, dry)


def guarded_can_extend(S, dp: int, dw: int, W: int, ledger: Ledger, z: int, nb: Neighbours) -> bool:
    """Read-only: would at least one shifted state survive the merge?"""
    return extend(S, dp, dw, -1, W, ledger, z, nb, dry=True) > 0


def max_state_bound(S, W: int, nb: Neighbours) -> int | None:
    """Floor of the largest LP state bound, None when the set is empty or all bounds are -inf."""
    has_nl, pl, wl, pr, wr = nb.args()
    best = None
    for sp, sw in zip(S.profits(), S.weights()):
        if sw <= W:
            v = (sp * wr + (W - sw) * pr) // wr
        elif has_nl:
            v = (sp * wl - (sw - W) * pl) // wl
        else:
            continue
        if best is None or v > best:
            best = v
    return best


@dataclass
class History:
    """Every applied bucket in order; the last MASK_BITS are addressable by mask bit."""

    bits: int = MASK_BITS
    entries: list = field(default_factory=list)  # (item id, copies)

    @property
    def t(self) -> int:
        return len(self.entries)

    def next_bit(self) -> int:
        return self.t % self.bits

    def push(self, item: int, copies: int) -> None:
        self.entries.append((item, copies))
