"""Cardinality bounds and the surrogate relaxation that merges them into the capacity row.

``items`` is a sequence of (p, w, d) triples throughout.  Two constraint forms
exist: ``"max"`` (at most K copies, multiplier mu >= 0) and ``"min"`` (at least
L copies, written as the same surrogate row with mu <= 0).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .instance import Instance, Item

INT64_MAX = (1 << 63) - 1
INFEASIBLE = Fraction(-1)  # SFBKP value when no copy vector meets the surrogate row
NO_COUNT = math.inf


def weighted_split(elems: list, before: Callable, mass: Callable, budget: int, rng: random.Random):
    """Greedy prefix by quickselect.

    Returns (taken, split, rest): ``taken`` are the elements, in no particular
    order, that come first in the ``before`` order and whose masses sum to at
    most ``budget``; ``split`` is the first element that does not fit (or None)
    and ``rest`` the unused budget.  Expected linear time.
    """
    taken = []
    cur = elems
    while cur:
        piv = cur[rng.randrange(len(cur))]
        hi, eq, lo = [], [], []
        for e in cur:
            if before(e, piv):
                hi.append(e)
            elif before(piv, e):
                lo.append(e)
            else:
                eq.append(e)
        m = sum(mass(e) for e in hi)
        if m > budget:
            cur = hi
            continue
        budget -= m
        taken += hi
        for e in eq:
            me = mass(e)
            if me > budget:
                return taken, e, budget
            budget -= me
            taken.append(e)
        cur = lo
    return taken, None, budget


@dataclass(frozen=True)
class CardinalityBounds:
    n_min: int | float  # inf when no copy vector reaches z + 1
    n_max: int
    gamma_lp: Fraction


def cardinality_bounds(items: Sequence[tuple[int, int, int]], W: int, z: int,
                       rng: random.Random | None = None) -> CardinalityBounds:
    rng = rng or random.Random(0)
    idx = list(range(len(items)))
    # fewest copies reaching profit z + 1: largest profits first
    taken, s, rest = weighted_split(idx, lambda a, b: items[a][0] > items[b][0],
                                    lambda a: items[a][0] * items[a][2], z, rng)
    if s is None:
        n_min: int | float = NO_COUNT
    else:
        n_min = sum(items[k][2] for k in taken) + -(-(rest + 1) // items[s][0])
    # most copies fitting W: smallest weights first
    taken, s, rest = weighted_split(idx, lambda a, b: items[a][1] < items[b][1],
                                    lambda a: items[a][1] * items[a][2], W, rng)
    n_max = sum(items[k][2] for k in taken) + (rest // items[s][1] if s is not None else 0)
    g, _ = gamma(items, W, 0, 0, rng)
    return CardinalityBounds(n_min, n_max, g)


def gamma(items: Sequence[tuple[int, int, int]], W: int, mu: int, card: int,
          rng: random.Random | None = None) -> tuple[Fraction, Fraction]:
    """(copy count, value) of the greedy SFBKP optimum for multiplier mu.

    Among equally efficient items the heavier (in effective weight) is taken
    first, which gives the smallest copy count among optimal solutions.
    """
    rng = rng or random.Random(0)
    cap = W + card * mu
    count = 0
    value = 0
    rest_idx = []
    for k, (p, w, d) in enumerate(items):
        if w + mu <= 0:
            count += d
            value += p * d
            cap -= (w + mu) * d
        else:
            rest_idx.append(k)
    if cap < 0:
        return Fraction(count), INFEASIBLE

    def before(a, b):
        pa, wa = items[a][0], items[a][1] + mu
        pb, wb = items[b][0], items[b][1] + mu
        x, y = pa * wb, pb * wa
        return x > y or (x == y and wa > wb)

    taken, s, rest = weighted_split(rest_idx, before, lambda a: (items[a][1] + mu) * items[a][2], cap, rng)
    count += sum(items[k][2] for k in taken)
    value += sum(items[k][0] * items[k][2] for k in taken)
    if s is None:
        return Fraction(count), Fraction(value)
    we = items[s][1] + mu
    return count + Fraction(rest, we), value + Fraction(rest * items[s][0], we)


@dataclass
class SurrogateOutcome:
    form: str
    card: int
    mu: int
    ub: Fraction
    candidate: bool  # whether the integer surrogate problem is worth solving
    visited: int

    def proves(self, z: int) -> bool:
        return self.ub < z + 1


def _overflow_cap(items) -> int:
    return INT64_MAX // (4 * max(1, sum(d for _, _, d in items)))


def find_mu_int(items: Sequence[tuple[int, int, int]], W: int, card: int, form: str = "max",
                rng: random.Random | None = None) -> SurrogateOutcome:
    """Best integer multiplier by expanding-interval binary search.

    Gamma itself can wobble as mu grows, but whether it exceeds ``card`` flips at
    most once, which is all the search needs.
    """
    rng = rng or random.Random(0)
    wmax = max(w for _, w, _ in items)
    seen: dict[int, tuple[Fraction, Fraction]] = {}

    def ev(mu):
        if mu not in seen:
            seen[mu] = gamma(items, W, mu, card, rng)
        return seen[mu][0]

    if form == "max":
        lo, hi = 0, wmax
        if ev(0) > card:
            guard = _overflow_cap(items)
            while hi <= guard and ev(hi) > card:
                lo, hi = hi + 1, 2 * hi
            hi = min(hi, guard)
    elif form == "min":
        lo, hi = -wmax, 0
        ev(0)
    else:
        raise ValueError(f"unknown form {form!r}")
    while lo <= hi:
        mid = (lo + hi) // 2
        g = ev(mid)
        if g == card:
            break
        if g > card:
            lo = mid + 1
        else:
            hi = mid - 1
    mu = min(seen, key=lambda m: (seen[m][1], abs(m)))
    return SurrogateOutcome(form, card, mu, seen[mu][1], True, len(seen))


def common_offset(items: Sequence[tuple[int, int, int]]) -> int | None:
    """C with p = w + C for every item, if it exists."""
    c = items[0][0] - items[0][1]
    for p, w, _ in items:
        if p - w != c:
            return None
    return c


def special_case_C(items: Sequence[tuple[int, int, int]], W: int, card: int, form: str = "max",
                   rng: random.Random | None = None) -> SurrogateOutcome | None:
    """When p = w + C, test C against its neighbours; a win means no candidate is solved."""
    c = common_offset(items)
    if c is None:
        return None
    lo, hi = (0, INT64_MAX) if form == "max" else (-max(w for _, w, _ in items), 0)
    if not lo <= c <= hi:
        return None
    vals = {}
    for mu in (c - 1, c, c + 1):
        if lo <= mu <= hi:
            vals[mu] = gamma(items, W, mu, card, rng)[1]
    if all(vals[c] <= v for v in vals.values()):
        return SurrogateOutcome(form, card, c, vals[c], False, len(vals))
    return None


def surrogate_bound(items, W, card, form="max", rng=None) -> SurrogateOutcome:
    return special_case_C(items, W, card, form, rng) or find_mu_int(items, W, card, form, rng)


def cardinality_pair_candidates(cb: CardinalityBounds) -> list[tuple[str, int]]:
    """Requests (form, card) for the ceil/floor split of a fractional LP copy count."""
    g = cb.gamma_lp
    if g.denominator == 1:
        return []
    if g - cb.n_min < 2 or cb.n_max - g < 2:
        return [("min", math.ceil(g)), ("max", math.floor(g))]
    return []


def surrogate_requests(cb: CardinalityBounds) -> tuple[list[tuple[str, int]], bool]:
    """Constraint requests and whether they form a ceil/floor pair (bound = max of both)."""
    if cb.gamma_lp > cb.n_max:
        return [("max", cb.n_max)], False
    if cb.gamma_lp < cb.n_min:
        return [("min", int(cb.n_min))], False
    pair = cardinality_pair_candidates(cb)
    return pair, bool(pair)


@dataclass(frozen=True)
class Candidate:
    """Integer surrogate problem over the items not forced in by a non-positive effective weight."""

    instance: Instance | None
    index: tuple[int, ...]  # candidate item -> caller item index
    offset: int  # profit of forced copies
    forced: tuple[tuple[int, int], ...]  # (caller index, copies)


def make_candidate(items: Sequence[tuple[int, int, int]], W: int, mu: int, card: int) -> Candidate | None:
    """Items (p, w + mu, d) with capacity W + card * mu; None when the row admits nothing."""
    cap = W + card * mu
    offset = 0
    forced = []
    keep = []
    for k, (p, w, d) in enumerate(items):
        if w + mu <= 0:
            forced.append((k, d))
            offset += p * d
            cap -= (w + mu) * d
        else:
            keep.append(k)
    if cap < 0:
        return None
    inst = None
    if cap >= 1 and keep:
        inst = Instance([Item(items[k][0], items[k][1] + mu, items[k][2]) for k in keep], cap)
    return Candidate(inst, tuple(keep), offset, tuple(forced))
