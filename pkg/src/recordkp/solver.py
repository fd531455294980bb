"""Core-based exact solver: lazy enumeration order, bounded state sets, fixing, heuristics and recovery."""

from __future__ import annotations

import dataclasses
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import heuristics as heur
from . import kernels
from . import reduce as red
from . import surrogate as sur
from .bounds import (BoundContext, UnitItem, enhanced_divisibility, lp_value, tight_availability,
                     trivial_divisibility)
from .instance import Instance, Solution, make_solution
from .prep import find_break
from .recovery import Snapshot, apply_extra, capture, decode, solve_reduced
from .states import (GuardCounter, History, Ledger, Neighbours, binary_decompose, extend,
                     guarded_can_extend, max_state_bound, new_state_set)

TRIVIAL_DIV_STATES = 1000

#: ablation switches, by command-line name
FEATURES = {
    "completion-features": "completion_features",
    "guarded-extension": "guarded_extension",
    "divisibility-bounds": "divisibility_bounds",
    "skip-subsequent-iterations": "skip_subsequent_iterations",
    "multiplicity-reduction": "multiplicity_reduction",
    "item-aggregation": "item_aggregation",
    "dominance-fixing": "dominance_fixing",
    "tph": "tph",
    "ssph": "ssph",
    "sph": "sph",
    "gch": "gch",
}


@dataclass(frozen=True)
class SolverConfig:
    seed: int = 0
    completion_features: bool = True
    guarded_extension: bool = True
    divisibility_bounds: bool = True
    skip_subsequent_iterations: bool = True
    multiplicity_reduction: bool = True
    item_aggregation: bool = True
    dominance_fixing: bool = True
    tph: bool = True
    ssph: bool = True
    sph: bool = True
    gch: bool = True
    surrogate: bool = True
    t_lsr: int | None = None
    t_hp: int | None = None
    t_div: int | None = None
    p_sr: int | None = None
    time_limit: float | None = None
    candidate_budget: int = 10  # candidate solves may spend this many times the current |S|
    budget: int | None = None  # state work cap for this solve; exceeding it gives up
    mask_bits: int = 64

    def disable(self, names: Iterable[str]) -> "SolverConfig":
        changes = {}
        for name in names:
            if name not in FEATURES:
                raise ValueError(f"unknown feature {name!r}; choose from {', '.join(FEATURES)}")
            changes[FEATURES[name]] = False
        return dataclasses.replace(self, **changes)

    def disabled(self) -> list[str]:
        return [k for k, v in FEATURES.items() if not getattr(self, v)]


@dataclass
class SolveResult:
    optimum: int
    solution: Solution | None
    proven: bool
    upper_bound: int
    found: bool = True  # False when nothing beat the supplied initial value
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def gap(self) -> int:
        return self.upper_bound - self.optimum


@dataclass
class _Incumbent:
    value: int
    weight: int
    x: list[int] | None = None
    snap: Snapshot | None = None
    extra: tuple = ()
    origin: str = ""


def _new_stats() -> dict:
    return {
        "states": 0, "peak_states": 0, "items_processed": 0, "buckets": 0, "copies_fixed": 0,
        "items_fixed_dominance": 0, "heuristic_hits": {}, "bound_calls": 0, "surrogate_calls": 0,
        "candidates_solved": 0, "candidates_abandoned": 0, "divisibility_calls": 0,
        "capacity_reductions": 0, "reductions": 0, "guard_checks": 0, "guard_forced": 0,
        "recursion_depth": 0, "kernel": "none",
    }


class _Run:
    def __init__(self, inst: Instance, cfg: SolverConfig, initial_z: int | None, target: int | None,
                 depth: int, deadline: float | None):
        self.inst, self.cfg, self.depth = inst, cfg, depth
        self.target = target
        self.deadline = deadline
        self.stats = _new_stats()
        self.stats["recursion_depth"] = depth
        self.rng = random.Random(cfg.seed)
        W = inst.capacity
        self.W_orig = self.W = W
        self.ids0 = [k for k, it in enumerate(inst.items) if it.weight <= W]
        self.P = [inst.items[k].profit for k in self.ids0]
        self.Wt = [inst.items[k].weight for k in self.ids0]
        self.D = [min(inst.items[k].availability, W // inst.items[k].weight) for k in self.ids0]
        self.n = len(self.ids0)
        self.z = -1
        self.inc: _Incumbent | None = None
        self.initial_z = initial_z
        self.ub = 0
        self.proven = False
        self.log = red.ReductionLog()

    # -- public -------------------------------------------------------------
    def run(self) -> SolveResult:
        if self.n == 0:
            return self._result([0] * self.n, True)
        P, Wt, D, n = self.P, self.Wt, self.D, self.n
        brk, st = find_break(P, Wt, D, self.W, self.rng)
        self.st, self.perm = st, st.perm
        if brk.full_fit:
            self.z = brk.p_hat
            self.ub = brk.p_hat
            return self._result(list(D), True)
        self.brk = brk
        self.pos_b = brk.pos
        self.is_left = [False] * n
        for k in range(self.pos_b):
            self.is_left[self.perm[k]] = True
        self.U = list(D)
        self.processed = [False] * n
        b = brk.item
        self.ctx = BoundContext(brk.p_hat, brk.w_hat, P[b], Wt[b], self.W, self.z)
        self.ub = math.floor(lp_value(brk.p_hat, brk.w_hat, self.W, P[b], Wt[b]))
        magnitude = max(sum(d * p for d, p in zip(D, P)), 4 * self.W) + 1
        self.S = new_state_set(brk.p_hat, brk.w_hat, magnitude)
        self.stats["kernel"] = kernels.select(magnitude).NAME
        p_right = sum(D[i] * P[i] for i in range(n) if not self.is_left[i])
        self.ledger = Ledger(self.W, brk.w_hat, p_right, self.cfg.completion_features, self.W + brk.w_hat)
        self.history = History(self.cfg.mask_bits)
        self.guards = {True: GuardCounter(), False: GuardCounter()}

        found = heur.initial_heuristics(P, Wt, D, self.perm, self.pos_b, brk.p_hat, brk.w_hat, self.W)
        self._offer(_Incumbent(found.value, found.weight, x=found.x, origin="initial"))
        if self.initial_z is not None and self.initial_z >= self.z:
            self._set_z(self.initial_z)
            self.inc = None
        if self.inc is not None and self.cfg.gch:
            self._gch()

        cfg = self.cfg
        self.T_lsr = cfg.t_lsr or 10 * n
        self.P_sr = cfg.p_sr or max(50 * n, 10 ** 4)
        self.T_hp = cfg.t_hp or 10 * n
        self.T_div = cfg.t_div or max(1, int(5 * n * math.log2(max(n, 2))))
        self.c_lsr = self.c_hp = self.c_div = self.c_triv = 0
        self.flag_lsr = self.flag_amr = True
        self.candidates: list = []
        self.timed_out = False

        self._loop()
        if not self.proven:
            self.ub = min(self.ub, max(self.z, self._frontier_bound()))
        return self._result(None, self.proven)

    # -- bookkeeping --------------------------------------------------------
    def _set_z(self, z: int) -> None:
        self.z = z
        if hasattr(self, "ctx"):
            self.ctx.z = z

    def _offer(self, inc: _Incumbent) -> bool:
        if inc.value <= self.z or inc.weight > self.W_orig:
            return False
        self.inc = inc
        self._set_z(inc.value)
        hits = self.stats["heuristic_hits"]
        hits[inc.origin] = hits.get(inc.origin, 0) + 1
        return True

    def _set_u(self, i: int, u: int) -> None:
        old = self.U[i]
        if u >= old:
            return
        if not self.processed[i]:
            if self.is_left[i]:
                self.ledger.drop_left(old - u, self.Wt[i])
            else:
                self.ledger.drop_right(old - u, self.P[i])
        self.U[i] = u
        self.stats["copies_fixed"] += old - u

    def _refresh(self, i: int) -> None:
        if self.U[i]:
            self.stats["bound_calls"] += 1
            self._set_u(i, tight_availability(self.P[i], self.Wt[i], self.U[i], self.is_left[i], self.ctx))

    def _fixed(self, i: int) -> bool:
        self._refresh(i)
        return self.U[i] == 0

    def _peek_item(self, left: bool):
        pos = self.st.peek_left(self._fixed) if left else self.st.peek_right(self._fixed)
        if pos is None:
            return None
        i = self.perm[pos]
        return self.P[i], self.Wt[i]

    def _frontier_bound(self) -> int:
        if not hasattr(self, "S") or len(self.S) == 0:
            return self.z
        nb = Neighbours(self._peek_item(True), self._peek_item(False))
        v = max_state_bound(self.S, self.W, nb)
        return self.z if v is None else v

    def _done(self) -> bool:
        if self.inc is not None and self.target is not None and self.z >= self.target:
            return True
        return self.z >= self.ub or len(self.S) == 0

    # -- main loop ----------------------------------------------------------
    def _loop(self) -> None:
        st = self.st
        turn_left = True
        while True:
            if self._done():
                self.proven = True
                return
            if self.deadline is not None and time.perf_counter() > self.deadline:
                self.timed_out = True
                return
            if self.cfg.budget is not None and self.stats["states"] > self.cfg.budget:
                return
            left = turn_left
            pos = st.next_left(self._fixed) if left else st.next_right(self._fixed)
            if pos is None:
                left = not left
                pos = st.next_left(self._fixed) if left else st.next_right(self._fixed)
            if pos is None:
                self.proven = True
                return
            turn_left = not left
            self._process(self.perm[pos], left)
            self._after_item()

    def _process(self, i: int, left: bool) -> None:
        cfg, S, ledger = self.cfg, self.S, self.ledger
        self._refresh(i)
        u = self.U[i]
        self.processed[i] = True
        self.stats["items_processed"] += 1
        p, w = self.P[i], self.Wt[i]
        if left:
            nb = Neighbours((p, w), self._peek_item(False))
        else:
            nb = Neighbours(self._peek_item(True), (p, w))
        guard = self.guards[left]
        remaining = u
        self.gen_first = None
        self.last_gen = 0
        for k, m in enumerate(binary_decompose(u)):
            if left:
                ledger.drop_left(m, w)
                dp, dw = -m * p, -m * w
            else:
                ledger.drop_right(m, p)
                dp, dw = m * p, m * w
            remaining -= m
            run = True
            if cfg.guarded_extension and guard.wants_check():
                self.stats["guard_checks"] += 1
                ok = guarded_can_extend(S, dp, dw, self.W, ledger, self.z, nb)
                forced = guard.forced
                run = guard.record_check(ok)
                self.stats["guard_forced"] += guard.forced - forced
            if run:
                gen = extend(S, dp, dw, self.history.next_bit(), self.W, ledger, self.z, nb)
                self.history.push(i, m)
                self.stats["buckets"] += 1
            else:
                gen = 0
            guard.record(gen)
            if k == 0:
                self.gen_first = gen
            self.last_gen = gen
            if gen == 0 and (k == 0 or cfg.skip_subsequent_iterations) or len(S) == 0:
                if left:
                    ledger.drop_left(remaining, w)
                else:
                    ledger.drop_right(remaining, p)
                break
        self.current = (i, left)

    def _after_item(self) -> None:
        cfg, n = self.cfg, self.n
        size = len(self.S)
        st = self.stats
        st["states"] += size
        st["peak_states"] = max(st["peak_states"], size)
        self.c_lsr += size
        self.c_hp += size
        self.c_div += size
        self.c_triv += size
        if self._check_states() and cfg.gch:
            self._gch()
        if size == 0:
            return
        if cfg.dominance_fixing and size >= n:
            self._dominance()
        if cfg.sph:
            self._sph()
        if cfg.surrogate and self.flag_lsr and (self.c_lsr >= self.T_lsr or size > self.P_sr):
            self.flag_lsr = False
            self._lsr()
        if cfg.surrogate and size > self.P_sr and self.candidates:
            self._isr()
        if self.c_hp >= self.T_hp:
            self.c_hp = 0
            self.T_hp *= 2
            self._heavy()
        if self.c_div >= self.T_div:
            self.c_div = 0
            self.T_div *= 2
            self._divisibility()
            if self.flag_amr:
                self.flag_amr = False
                self.st.full_sort_remaining()
                self._reductions()
        elif size > TRIVIAL_DIV_STATES and self.c_triv >= n:
            self.c_triv = 0
            self._trivial_divisibility()

    def _check_states(self) -> bool:
        k = self.S.find_le(self.W_orig)
        if k < 0:
            return False
        sp, sw, _ = self.S.get(k)
        if sp <= self.z:
            return False
        snap = capture(self.S, k, self.history.t, self.st.l, self.st.r)
        return self._offer(_Incumbent(sp, sw, snap=snap, origin="dp"))

    # -- heuristics ---------------------------------------------------------
    def _record_pairing(self, f: heur.Found | None) -> bool:
        if f is None:
            return False
        snap = capture(self.S, f.state, self.history.t, self.st.l, self.st.r)
        if self._offer(_Incumbent(f.value, f.weight, snap=snap, extra=f.extra, origin=f.origin)):
            if self.cfg.gch:
                self._gch()
            return True
        return False

    def _gch(self) -> None:
        inc = self.inc
        perm, D = self.perm, self.D
        if inc.x is not None:
            x = inc.x
            last = -1
            for k in range(self.n):
                if x[perm[k]]:
                    last = k
            gain, used, adds = heur.greedy_fill(perm, last + 1, self.P, self.Wt, lambda i: D[i] - x[i],
                                                self.W_orig - inc.weight)
            if gain:
                y = apply_extra(list(x), adds)
                self._offer(_Incumbent(inc.value + gain, inc.weight + used, x=y, origin="gch"))
            return
        touched = {i for i, _ in inc.extra}
        start = inc.snap.r + 1
        for i, c in inc.extra:
            if c > 0:
                start = max(start, self._position(i) + 1)
        gain, used, adds = heur.greedy_fill(perm, start, self.P, self.Wt, lambda i: D[i],
                                            self.W_orig - inc.weight, touched)
        if gain:
            self._offer(_Incumbent(inc.value + gain, inc.weight + used, snap=inc.snap,
                                   extra=tuple(inc.extra) + tuple(adds), origin="gch"))

    def _position(self, i: int) -> int:
        return self.perm.index(i)

    def _outside(self, left: bool) -> list[int]:
        """Unprocessed ids with unfixed copies on one side of the core."""
        perm, U = self.perm, self.U
        rng = range(0, self.st.l) if left else range(self.st.r + 1, self.n)
        return [perm[k] for k in rng if U[perm[k]] > 0]

    def _move(self, i: int) -> tuple[int, int, tuple]:
        if self.is_left[i]:
            return -self.P[i], -self.Wt[i], ((i, -1),)
        return self.P[i], self.Wt[i], ((i, 1),)

    def _sph(self) -> None:
        size, n, st = len(self.S), self.n, self.st
        usable = lambda i: self.U[i] > 0 and not self.processed[i]
        offsets = []
        for a, c in heur.sph_blocks(size, n, 0, st.l, st.l):
            i = heur.sample_block(self.perm, a, c, usable, self.rng)
            if i is not None:
                offsets.append(self._move(i))
        for a, c in heur.sph_blocks(size, n, st.r + 1, n, n - st.r - 1):
            i = heur.sample_block(self.perm, a, c, usable, self.rng)
            if i is not None:
                offsets.append(self._move(i))
        if offsets:
            self._record_pairing(heur.pairing(self.S, offsets, self.W_orig, self.z, "sph"))

    def _heavy(self) -> None:
        S, size = self.S, len(self.S)
        L, R = self._outside(True), self._outside(False)
        offsets = [self._move(i) for i in L + R]
        self._record_pairing(heur.pairing(S, offsets, self.W_orig, self.z, "ph"))
        if self.cfg.tph and L and R and heur.tph_allowed(len(L) * len(R), size):
            P, Wt = self.P, self.Wt
            pairs = [(P[r] - P[l], Wt[r] - Wt[l], ((l, -1), (r, 1))) for l in L for r in R]
            self._record_pairing(heur.pairing(S, pairs, self.W_orig, self.z, "tph"))
        if self.cfg.ssph and size >= self.n * self.n:
            pool = L + R
            k = heur.ssph_k(size, len(pool))
            if k >= 2:
                moves = []
                for i in self.rng.sample(pool, k):
                    dp, dw, ((_, c),) = self._move(i)
                    moves.append((i, c, dp, dw))
                self._record_pairing(heur.pairing(S, heur.subset_offsets(moves), self.W_orig, self.z, "ssph"))

    # -- fixing by dominance -------------------------------------------------
    def _dominance(self) -> None:
        i, left = self.current
        p, w = self.P[i], self.Wt[i]
        cands = [(j, self.P[j], self.Wt[j]) for j in self._outside(left)]
        fixed = []
        if self.gen_first == 0:
            fixed = red.fix_dominated_left(p, w, cands) if left else red.fix_dominated_right(p, w, cands)
        elif not left and self.last_gen > 0:
            shaped = red.fix_dominated_right(p, w, cands)
            if len(shaped) >= 2:
                sw = self.S.witness(p, w)
                if sw >= 0:
                    wmax = self.ledger.wmax
                    fixed = [j for j in shaped if not red.dominance_weight_filter(sw, w, self.Wt[j], wmax)]
        for j in fixed:
            self._set_u(j, 0)
        self.stats["items_fixed_dominance"] += len(fixed)

    # -- surrogate relaxation -------------------------------------------------
    def _live(self) -> tuple[list[tuple[int, int, int]], list[int]]:
        ids = [i for i in range(self.n) if self.D[i] > 0]
        return [(self.P[i], self.Wt[i], self.D[i]) for i in ids], ids

    def _lsr(self) -> None:
        self.stats["surrogate_calls"] += 1
        items, ids = self._live()
        cb = sur.cardinality_bounds(items, self.W, self.z, self.rng)
        if cb.n_min > cb.n_max:
            self.ub = min(self.ub, self.z)
            return
        requests, is_pair = sur.surrogate_requests(cb)
        if not requests:
            return
        outs = [sur.surrogate_bound(items, self.W, card, form, self.rng) for form, card in requests]
        self.sr_pair = is_pair
        self.sr_bounds = [o.ub for o in outs]
        self._apply_sr_bound()
        self.candidates = [(k, o, items, ids) for k, o in enumerate(outs) if o.candidate and o.ub >= self.z + 1][-2:]

    def _apply_sr_bound(self) -> None:
        bs = self.sr_bounds
        v = max(bs) if self.sr_pair else bs[0]
        self.ub = min(self.ub, math.floor(v))

    def _isr(self) -> None:
        cands, self.candidates = self.candidates, []
        cfg = dataclasses.replace(self.cfg, surrogate=False, multiplicity_reduction=False,
                                  budget=self.cfg.candidate_budget * len(self.S), time_limit=None)
        for k, o, items, ids in cands:
            c = sur.make_candidate(items, self.W, o.mu, o.card)
            if c is None:
                self.sr_bounds[k] = sur.INFEASIBLE
                continue
            y = [0] * self.n
            for j, cnt in c.forced:
                y[ids[j]] += cnt
            if c.instance is None:
                value = c.offset
            else:
                res = _solve(c.instance, cfg, self.z - c.offset, None, self.depth + 1, self.deadline)
                if not res.proven:
                    self.stats["candidates_abandoned"] += 1
                    continue
                self.stats["candidates_solved"] += 1
                value = c.offset + (res.optimum if res.found else self.z - c.offset)
                if res.found:
                    for j, cnt in zip(c.index, res.solution.multiplicities):
                        y[ids[j]] += cnt
            self.sr_bounds[k] = Fraction(value)
            pv = sum(a * b for a, b in zip(y, self.P))
            wv = sum(a * b for a, b in zip(y, self.Wt))
            if pv > self.z and wv <= self.W_orig and all(a <= d for a, d in zip(y, self.D)):
                self._offer(_Incumbent(pv, wv, x=y, origin="surrogate"))
        self._apply_sr_bound()

    # -- divisibility and reductions ------------------------------------------
    def _set_W(self, W: int) -> None:
        if W >= self.W:
            return
        self.W = W
        self.ctx.W = W
        self.ledger.W = W
        self.stats["capacity_reductions"] += 1
        b = self.brk.item
        self.ub = min(self.ub, math.floor(lp_value(self.brk.p_hat, self.brk.w_hat, W, self.P[b], self.Wt[b])))

    def _trivial_divisibility(self) -> None:
        P, Wt, D, U = self.P, self.Wt, self.D, self.U
        fixed_w = sum((D[i] - U[i]) * Wt[i] for i in range(self.n) if self.is_left[i])
        self._set_W(trivial_divisibility(self.W, fixed_w, (Wt[i] for i in range(self.n) if U[i] > 0)))

    def _divisibility(self) -> None:
        self.stats["divisibility_calls"] += 1
        self._trivial_divisibility()
        if not self.cfg.divisibility_bounds:
            return
        n, P, Wt, D, U = self.n, self.P, self.Wt, self.D, self.U
        for i in range(n):
            if self.is_left[i] and not self.processed[i]:
                self._refresh(i)
        units = [UnitItem(i, P[i], Wt[i]) for i in range(n) if self.is_left[i] and U[i] == 1]
        keys = {u.key for u in units}
        fixed_p = sum((D[i] - U[i]) * P[i] for i in range(n) if self.is_left[i])
        fixed_w = sum((D[i] - U[i]) * Wt[i] for i in range(n) if self.is_left[i])
        residual = [(P[i], Wt[i]) for i in range(n) if U[i] > 0 and i not in keys]
        cand = [u.key for u in units if not self.processed[u.key]]
        for h in enhanced_divisibility(self.ctx, units, fixed_p, fixed_w, residual, cand):
            self._set_u(h, 0)

    def _reductions(self) -> None:
        if not self.cfg.item_aggregation:
            return
        P, Wt, D, U, perm, st = self.P, self.Wt, self.D, self.U, self.perm, self.st
        before = len(self.log)
        for order in (perm[0:st.l], perm[st.r + 1:self.n]):
            red.aggregate_identical(order, P, Wt, D, U, self.log)
            if self.cfg.multiplicity_reduction:
                red.multiplicity_reduce(order, P, Wt, D, U, self.log)
        for k in range(st.r + 1, self.n):
            i = perm[k]
            cap = red.cap_availability(D[i], Wt[i], self.W_orig)
            if cap < D[i]:
                D[i] = cap
                self._set_u(i, min(U[i], cap))
        new = self.log.entries[before:]
        self.stats["reductions"] += len(new)
        if new and self.inc is not None:
            self.inc = self._forward(self.inc, new)

    def _forward(self, inc: _Incumbent, entries) -> _Incumbent:
        if inc.x is not None:
            x = red.ReductionLog(list(entries)).forward(inc.x)
            return dataclasses.replace(inc, x=x)
        extra = list(inc.extra)
        for kind, i, j, _ in entries:
            extra = [(i, c if kind == "agg" else 2 * c) if a == j else (a, c) for a, c in extra]
        return dataclasses.replace(inc, extra=tuple(extra))

    # -- result ----------------------------------------------------------------
    def _materialize(self) -> list[int]:
        inc = self.inc
        if inc.x is not None:
            return list(inc.x)
        dec = decode(inc.snap, self.perm, self.P, self.Wt, self.D, self.pos_b,
                     self.history.entries, self.history.bits)

        def sub(inst: Instance, target: int):
            cfg = dataclasses.replace(self.cfg, time_limit=None, budget=None)
            res = _solve(inst, cfg, target - 1, target, self.depth + 1, None)
            self.stats["recursion_depth"] = max(self.stats["recursion_depth"], res.stats["recursion_depth"])
            return res.solution.multiplicities if res.found else None

        x = solve_reduced(dec, self.P, self.Wt, sub)
        return apply_extra(x, inc.extra)

    def _result(self, x_work: list[int] | None, proven: bool) -> SolveResult:
        if x_work is None and self.inc is not None:
            x_work = self.log.reverse_map(self._materialize(), self.D)
        sol = None
        if x_work is not None:
            x = [0] * len(self.inst.items)
            for k, i0 in enumerate(self.ids0):
                x[i0] = x_work[k]
            sol = make_solution(self.inst, x)
            if self.inc is not None and sol.value < self.z:
                raise AssertionError(f"recovered value {sol.value} below incumbent {self.z}")
        found = sol is not None and (self.initial_z is None or sol.value > self.initial_z)
        optimum = sol.value if found else self.z
        ub = optimum if proven else max(self.ub, optimum)
        return SolveResult(optimum, sol, proven, ub, found, self.stats)


def _solve(inst: Instance, cfg: SolverConfig, initial_z: int | None, target: int | None,
           depth: int, deadline: float | None) -> SolveResult:
    t0 = time.perf_counter()
    if cfg.time_limit is not None:
        own = t0 + cfg.time_limit
        deadline = own if deadline is None else min(deadline, own)
    res = _Run(inst, cfg, initial_z, target, depth, deadline).run()
    res.elapsed = time.perf_counter() - t0
    return res


def solve(inst: Instance, config: SolverConfig | None = None, initial_z: int | None = None,
          target: int | None = None) -> SolveResult:
    """Solve ``inst`` exactly.

    ``initial_z`` is a value known to be achievable or uninteresting: only strictly
    better solutions are searched for, and ``found`` is False when none exists.
    ``target`` stops the search at the first solution reaching it.
    """
    return _solve(inst, config or SolverConfig(), initial_z, target, 0, None)


def solve_no_surrogate(inst: Instance, config: SolverConfig | None = None,
                       initial_z: int | None = None) -> SolveResult:
    cfg = dataclasses.replace(config or SolverConfig(), surrogate=False, multiplicity_reduction=False)
    return _solve(inst, cfg, initial_z, None, 0, None)
