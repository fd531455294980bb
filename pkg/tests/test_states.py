import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus
from recordkp import kernels
from recordkp.oracle import textbook_dp
from recordkp.states import (
    GUARD_FORCE, GUARD_START, GuardCounter, History, Ledger, Neighbours, binary_decompose, extend,
    guarded_can_extend, max_state_bound, skip_after_empty_bucket, skip_first_iteration,
)

KERNELS = sorted(kernels.available().items())
kernel_param = pytest.mark.parametrize("name,mod", KERNELS, ids=[k for k, _ in KERNELS])


def states(S):
    return list(zip(S.profits(), S.weights()))


@pytest.mark.parametrize("u, out", [(10, [1, 2, 4, 3]), (1, [1]), (7, [1, 2, 4]), (0, [])])
def test_binary_decompose(u, out):
    assert binary_decompose(u) == out


@given(st.integers(1, 5000))
def test_binary_decompose_covers(u):
    parts = binary_decompose(u)
    assert sum(parts) == u
    assert len(parts) == u.bit_length()  # ceil(log2(u + 1))
    sums = {0}
    for m in parts:
        sums |= {s + m for s in sums}
    assert sums == set(range(u + 1))


@kernel_param
def test_extend_examples(name, mod):
    S = mod.StateSet(10, 5)
    led = Ledger(W=10, left_rem=0, p_right=0, enabled=False, static_wmax=10)
    gen = extend(S, 3, 3, 0, 10, led, 0, Neighbours(None, None))
    assert gen == 1 and states(S) == [(10, 5), (13, 8)]

    led = Ledger(W=10, left_rem=5, p_right=0, enabled=False, static_wmax=15)
    assert guarded_can_extend(S, 6, 4, 10, led, 16, Neighbours(None, None)) is False
    assert extend(S, 6, 4, 1, 10, led, 16, Neighbours(None, None)) == 0


@kernel_param
def test_guarded_check_is_read_only(name, mod):
    S = mod.StateSet(10, 5)
    led = Ledger(W=10, left_rem=0, p_right=0, enabled=False, static_wmax=10)
    nb = Neighbours(None, None)
    assert guarded_can_extend(S, 3, 3, 10, led, 0, nb) is True
    assert states(S) == [(10, 5)]
    # every shifted state lands past W_max
    assert guarded_can_extend(S, 3, 30, 10, led, 0, nb) is False


def test_guard_counter():
    g = GuardCounter()
    assert g.threshold == GUARD_START
    for _ in range(GUARD_START):
        g.record(0)
    assert not g.wants_check()
    g.record(0)
    assert g.wants_check()
    assert g.record_check(False) is False
    assert g.threshold == GUARD_START
    assert g.record_check(True) is True
    assert g.threshold == 2 * GUARD_START
    g.record(3)
    assert g.empty == 0


def test_guard_forced_expansion():
    g = GuardCounter()
    results = [g.record_check(False) for _ in range(GUARD_FORCE + 1)]
    assert results[:GUARD_FORCE] == [False] * GUARD_FORCE
    assert results[GUARD_FORCE] is True and g.forced == 1
    assert g.threshold == GUARD_START


def test_skip_rules():
    assert skip_first_iteration(0) and not skip_first_iteration(3)
    assert skip_after_empty_bucket(0) and not skip_after_empty_bucket(1)


def test_ledger():
    led = Ledger(W=10, left_rem=5, p_right=3)
    assert led.wmax == 15
    led.drop_left(1, 5)
    assert led.wmax == 10
    assert led.pmin(16) == 13  # (10, 5) has 10 <= 13 and is evicted
    assert led.pmin(0) < 0
    led.drop_right(1, 3)
    assert led.p_right == 0


@kernel_param
def test_profit_floor_evicts(name, mod):
    S = mod.StateSet(10, 5)
    led = Ledger(W=10, left_rem=0, p_right=3)
    extend(S, 3, 3, 0, 10, led, 16, Neighbours(None, (1, 1)))
    assert all(p > 13 for p, _ in states(S))


@kernel_param
def test_max_state_bound(name, mod):
    S = mod.StateSet(10, 5)
    assert max_state_bound(S, 10, Neighbours(None, (6, 4))) == 17  # 10 + 5 * 6/4 = 17.5
    S.load([16], [9])
    assert max_state_bound(S, 10, Neighbours(None, (3, 3))) == 17
    S.load([13], [12])
    assert max_state_bound(S, 10, Neighbours(None, None)) is None


def test_history_slots():
    h = History(bits=4)
    for k in range(6):
        assert h.next_bit() == k % 4
        h.push(k, 1)
    assert h.t == 6


def reference_extend(S, dp, dw, W, wmax):
    """Naive dominance merge with only the weight window (no bounds)."""
    cand = states(S) + [(p + dp, w + dw) for p, w in states(S)]
    cand = [(p, w) for p, w in cand if 0 <= w <= wmax]
    cand.sort(key=lambda s: (s[1], -s[0]))
    out = []
    for p, w in cand:
        if not out or p > out[-1][0]:
            if out and out[-1][1] == w:
                continue
            out.append((p, w))
    return out


ops_st = st.lists(st.tuples(st.integers(-40, 40), st.integers(-40, 40)), min_size=1, max_size=12)


@settings(max_examples=150, deadline=None)
@given(ops_st, st.integers(450, 700))
def test_kernels_match_reference(ops, W):
    # start heavy enough that removals never push a weight below zero
    sets = {name: mod.StateSet(100, 600) for name, mod in KERNELS}
    for k, (dp, dw) in enumerate(ops):
        if dw == 0:
            continue
        ref = reference_extend(next(iter(sets.values())), dp, dw, W, W + 200)
        for name, S in sets.items():
            S.extend(dp, dw, k % 64, W, W + 200, -(10**9), -(10**9), True, 1, 1, 0, 1)
            assert states(S) == ref, name
            ws, ps = S.weights(), S.profits()
            assert all(a < b for a, b in zip(ws, ws[1:])) and all(a < b for a, b in zip(ps, ps[1:]))
    masks = [S.masks() for S in sets.values()]
    assert all(m == masks[0] for m in masks)


@settings(max_examples=100, deadline=None)
@given(ops_st, st.integers(0, 300), st.integers(-5, 30))
def test_kernel_parity_with_bounds(ops, W, z):
    sets = {name: mod.StateSet(50, 30) for name, mod in KERNELS}
    for k, (dp, dw) in enumerate(ops):
        if dw == 0:
            continue
        outs = set()
        for name, S in sets.items():
            dry = S.extend(dp, dw, k % 64, W, W + 30, z - 20, z + 1, True, 3, 2, 2, 3, True)
            gen = S.extend(dp, dw, k % 64, W, W + 30, z - 20, z + 1, True, 3, 2, 2, 3)
            assert dry == (1 if gen else 0)
            outs.add((gen, tuple(states(S)), tuple(S.masks()), S.find_le(W), S.witness(dp, dw)))
        assert len(outs) == 1


@pytest.mark.slow
@kernel_param
def test_dominance_only_enumeration_matches_dp(name, mod):
    """Adding every bucket from the empty state with only dominance pruning reaches the DP optimum."""
    for inst in corpus(2000, seed=17):
        W = inst.capacity
        S = mod.StateSet(0, 0)
        for it in inst.items:
            for m in binary_decompose(it.availability):
                S.extend(m * it.profit, m * it.weight, -1, W, W, -1, 0, False, 0, 1, 0, 1)
        assert S.get(S.find_le(W))[0] == textbook_dp(inst).optimum


def test_python_kernel_big_integers():
    S = kernels.available()["python"].StateSet(0, 0)
    big = 1 << 80
    S.extend(big, big, 0, 3 * big, 3 * big, -1, 0, False, 0, 1, 0, 1)
    S.extend(big + 1, big, 1, 3 * big, 3 * big, -1, 0, False, 0, 1, 0, 1)
    assert states(S) == [(0, 0), (big + 1, big), (2 * big + 1, 2 * big)]


def test_select_falls_back_for_huge_values():
    assert kernels.select(kernels.NATIVE_LIMIT).NAME == "python"
    assert kernels.select(10).NAME == kernels.NAME
