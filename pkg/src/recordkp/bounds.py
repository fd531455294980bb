"""LP, weak and state bounds, closed-form availability fixing, and the two divisibility bounds.

Bounds are exact: integers are compared by cross-multiplication and rational
values are returned as ``Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass
class BoundContext:
    """Break data, current capacity and incumbent value needed by the item bounds."""

    p_hat: int
    w_hat: int
    pb: int  # break item profit
    wb: int  # break item weight
    W: int
    z: int


def lp_value(p_hat: int, w_hat: int, W: int, pb: int | None = None, wb: int | None = None) -> Fraction:
    """Optimal value of the continuous relaxation given the break solution."""
    if pb is None:
        return Fraction(p_hat)
    return p_hat + Fraction((W - w_hat) * pb, wb)


def weak_bound(p: int, w: int, left: bool, e: int, ctx: BoundContext) -> Fraction:
    """LP bound linearised at the break item after removing (left) or adding e copies."""
    pbar, wbar = (-p, -w) if left else (p, w)
    return ctx.p_hat + e * pbar + Fraction((ctx.W - ctx.w_hat - e * wbar) * ctx.pb, ctx.wb)


def weak_bound_reaches(p: int, w: int, left: bool, e: int, ctx: BoundContext) -> bool:
    """WB(i, e) >= z + 1 without building a Fraction."""
    pbar, wbar = (-p, -w) if left else (p, w)
    lhs = (ctx.p_hat + e * pbar) * ctx.wb + (ctx.W - ctx.w_hat - e * wbar) * ctx.pb
    return lhs >= (ctx.z + 1) * ctx.wb


def tight_availability(p: int, w: int, d: int, left: bool, ctx: BoundContext) -> int:
    """Largest e <= d with WB(i, e) >= z + 1 (0 if none), in constant time."""
    num = (ctx.z + 1 - ctx.p_hat) * ctx.wb - (ctx.W - ctx.w_hat) * ctx.pb
    if left:
        delta = w * ctx.pb - p * ctx.wb
    else:
        delta = p * ctx.wb - w * ctx.pb
    if delta == 0:
        # same efficiency as the break item: the bound does not move with e
        return d if num <= 0 else 0
    if delta > 0:
        # item on the wrong side of the break: the bound grows with e
        return d if d * delta >= num else 0
    u = num // delta  # floor, Python rounds toward -inf for any signs
    return max(0, min(d, u))


def tight_availability_search(p: int, w: int, d: int, left: bool, ctx: BoundContext) -> int:
    """Reference for ``tight_availability``: scan e upward while the weak bound holds."""
    e = 0
    while e < d and weak_bound_reaches(p, w, left, e + 1, ctx):
        e += 1
    return e


def state_bound(sp: int, sw: int, W: int, nl: tuple[int, int] | None,
                nr: tuple[int, int] | None) -> Fraction | None:
    """LP bound of a state; None stands for minus infinity."""
    if sw <= W:
        pr, wr = nr if nr is not None else (0, 1)
        return sp + Fraction((W - sw) * pr, wr)
    if nl is None:
        return None
    pl, wl = nl
    return sp + Fraction((W - sw) * pl, wl)


def trivial_divisibility(W: int, fixed_weight: int, unfixed_weights: Iterable[int]) -> int:
    """Capacity rounded down so the unfixed part is a multiple of the gcd of unfixed weights."""
    g = 0
    for w in unfixed_weights:
        g = math.gcd(g, w)
        if g == 1:
            return W
    rest = W - fixed_weight
    if g == 0 or rest < 0:
        return W
    return fixed_weight + (rest // g) * g


@dataclass(frozen=True)
class UnitItem:
    key: int  # caller's id
    p: int
    w: int


def enhanced_divisibility(ctx: BoundContext, units: Sequence[UnitItem], fixed_p: int, fixed_w: int,
                          residual: Iterable[tuple[int, int]], candidates: Iterable[int] | None = None) -> list[int]:
    """Keys of left unit items whose last removable copy must stay.

    ``units`` are all left items with exactly one removable copy.  ``fixed_p`` and
    ``fixed_w`` total the copies already forced in (for ``units`` that excludes the
    removable copy).  ``residual`` lists (p, w) of every other item with removable
    or addable copies.  Only keys in ``candidates`` (default: all) are returned.
    """
    if not units:
        return []
    for it in units:
        if not weak_bound_reaches(it.p, it.w, True, 1, ctx) or weak_bound_reaches(it.p, it.w, True, 2, ctx):
            return []
    g = 0
    bp, bw = 0, 1
    for p, w in residual:
        g = math.gcd(g, w)
        if p * bw > bp * w:
            bp, bw = p, w
    sum_p = fixed_p + sum(it.p for it in units)
    sum_w = fixed_w + sum(it.w for it in units)
    z1 = ctx.z + 1
    allowed = None if candidates is None else set(candidates)
    out = []
    for it in units:
        if allowed is not None and it.key not in allowed:
            continue
        ph, wh = sum_p - it.p, sum_w - it.w
        room = ctx.W - wh
        if room < 0:
            out.append(it.key)
            continue
        cap = (room // g) * g if g else 0
        # UB_h = ph + cap * bp / bw < z + 1
        if ph * bw + cap * bp < z1 * bw:
            out.append(it.key)
    return out
