import pytest

from corpus import corpus
from recordkp import kernels
from recordkp.instance import evaluate_solution
from recordkp.oracle import brute_force
from recordkp.recovery import (
    Decoded, RecoveryError, Snapshot, apply_extra, capture, decode, residual_instance, solve_reduced,
)
from recordkp.solver import SolverConfig, solve

P, WT, D = [10, 6, 3], [5, 4, 3], [1, 2, 1]  # E1, already in order; break at position 1
HISTORY = [(1, 1), (2, 1)]


def oracle_solver(inst, target):
    r = brute_force(inst)
    return list(r.witness.multiplicities) if r.optimum >= target else None


def test_decode_from_mask():
    dec = decode(Snapshot(16, 9, 0b01, 2, 1, 2), [0, 1, 2], P, WT, D, 1, HISTORY, 64)
    assert dec.x == [1, 1, 0] and dec.done
    dec = decode(Snapshot(19, 12, 0b11, 2, 1, 2), [0, 1, 2], P, WT, D, 1, HISTORY, 64)
    assert dec.x == [1, 1, 1]


def test_decode_mismatch_raises():
    with pytest.raises(RecoveryError):
        decode(Snapshot(17, 9, 0b01, 2, 1, 2), [0, 1, 2], P, WT, D, 1, HISTORY, 64)


def test_decode_forgotten_bucket_goes_to_residual():
    dec = decode(Snapshot(16, 9, 0b0, 2, 1, 2), [0, 1, 2], P, WT, D, 1, HISTORY, 1)
    assert dec.x == [1, 0, 0] and dec.residual == {1: 1}
    assert (dec.target, dec.cap) == (6, 4)
    inst, ids = residual_instance(dec, P, WT)
    assert ids == [1] and inst.capacity == 4
    assert solve_reduced(dec, P, WT, oracle_solver) == [1, 1, 0]


def test_residual_solve():
    dec = Decoded([0], {0: 2}, 14, 10)
    assert solve_reduced(dec, [7], [5], oracle_solver) == [2]
    with pytest.raises(RecoveryError):
        solve_reduced(Decoded([0], {0: 2}, 15, 10), [7], [5], oracle_solver)
    with pytest.raises(RecoveryError):
        solve_reduced(Decoded([0], {0: 2}, 7, 4), [7], [5], oracle_solver)


def test_capture_and_extra():
    S = kernels.available()["python"].StateSet(0, 0)
    S.load([0, 5], [0, 3], [0, 1])
    assert capture(S, 1, 4, 0, 2) == Snapshot(5, 3, 1, 4, 0, 2)
    assert apply_extra([1, 0, 2], [(1, 2), (2, -1)]) == [1, 2, 1]


@pytest.mark.parametrize("bits", [1, 2, 3])
def test_end_to_end_narrow_masks(bits):
    for inst in corpus(300, seed=40 + bits):
        res = solve(inst, SolverConfig(mask_bits=bits))
        ev = evaluate_solution(inst, res.solution.multiplicities)
        assert ev.feasible and ev.value == res.optimum == brute_force(inst).optimum
