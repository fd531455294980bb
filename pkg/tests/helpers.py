"""Root-level bound set-ups shared by the bound tests and the acceptance suite."""

from __future__ import annotations

import functools

from recordkp.bounds import BoundContext, UnitItem, enhanced_divisibility, tight_availability
from recordkp.instance import Instance, Item
from recordkp.oracle import brute_force
from recordkp.prep import find_break
from recordkp.reduce import ReductionLog, aggregate_identical, multiplicity_reduce


def root_context(inst: Instance, z: int):
    """(BoundContext, set of left ids) for the break solution, or None on a full fit."""
    P, Wt, D = inst.profits, inst.weights, inst.availabilities
    info, st = find_break(P, Wt, D, inst.capacity)
    if info.full_fit:
        return None
    b = info.item
    return BoundContext(info.p_hat, info.w_hat, P[b], Wt[b], inst.capacity, z), set(st.perm[:info.pos])


def root_enhanced(inst: Instance, z: int):
    """Run the enhanced divisibility bound as the solver would right after the break.

    Returns (fixed keys, unit items) or None when everything fits.
    """
    rc = root_context(inst, z)
    if rc is None:
        return None
    ctx, left = rc
    P, Wt, D = inst.profits, inst.weights, inst.availabilities
    U = [tight_availability(P[i], Wt[i], D[i], i in left, ctx) for i in range(inst.n)]
    units = [UnitItem(i, P[i], Wt[i]) for i in sorted(left) if U[i] == 1]
    keys = {u.key for u in units}
    fixed_p = sum((D[i] - U[i]) * P[i] for i in left)
    fixed_w = sum((D[i] - U[i]) * Wt[i] for i in left)
    residual = [(P[i], Wt[i]) for i in range(inst.n) if U[i] > 0 and i not in keys]
    return enhanced_divisibility(ctx, units, fixed_p, fixed_w, residual), units


def without_one_copy(inst: Instance, h: int) -> Instance | None:
    items = list(inst.items)
    it = items[h]
    if it.availability == 1:
        items.pop(h)
    else:
        items[h] = Item(it.profit, it.weight, it.availability - 1)
    return Instance(items, inst.capacity) if items else None


def fixes_are_sound(inst: Instance, z: int, keys) -> bool:
    """No solution above z may drop a copy of a fixed item."""
    for h in keys:
        red = without_one_copy(inst, h)
        if red is not None and brute_force(red).optimum > z:
            return False
    return True


def comparator_order(inst: Instance) -> list[int]:
    P, Wt = inst.profits, inst.weights

    def cmp(a, b):
        x, y = P[a] * Wt[b], P[b] * Wt[a]
        if x != y:
            return -1 if x > y else 1
        return Wt[b] - Wt[a]
    return sorted(range(inst.n), key=functools.cmp_to_key(cmp))


def reduce_instance(inst: Instance):
    """Aggregate and halve over the whole sorted instance.

    Returns (reduced instance, ids of its items, log, reduced availabilities).
    """
    P, Wt = list(inst.profits), list(inst.weights)
    D = list(inst.availabilities)
    U = list(D)
    log = ReductionLog()
    order = comparator_order(inst)
    aggregate_identical(order, P, Wt, D, U, log)
    multiplicity_reduce(order, P, Wt, D, U, log)
    ids = [i for i in range(inst.n) if D[i] > 0]
    return Instance([Item(P[i], Wt[i], D[i]) for i in ids], inst.capacity), ids, log, D
