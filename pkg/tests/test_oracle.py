import pytest

from gameofcards import CapExceededError, GameParams
from gameofcards.kernel import override_rule
from gameofcards.oracle import (
    SweepConfig,
    enumerate_paths,
    enumerate_plays,
    replay,
    run_sweep,
    verify_convergence_formulas,
    verify_dominance,
    verify_dual_characterization,
    verify_lattice,
    verify_order_characterization,
    verify_recurrence_bound,
    verify_scc_theorem,
    verify_shot_uniqueness,
    verify_termination,
    verify_time_to_P,
)

from .conftest import graph

P63, P64 = GameParams(6, 3), GameParams(6, 4)


def test_enumerate_paths_examples(g63):
    enum = enumerate_paths((4, 1, 1), (2, 2, 2), g63)
    assert sorted(enum.paths) == [(1, 1, 2), (1, 2, 1)]
    for path in enum.paths:
        assert replay((4, 1, 1), path)[-1] == (2, 2, 2)
    assert enumerate_paths((4, 1, 1), (4, 1, 1), g63).paths == ((),)
    unreachable = enumerate_paths((2, 2, 2), (4, 1, 1), g63)
    assert unreachable.paths == () and not unreachable.reachable


def test_enumerate_paths_cap(g63):
    with pytest.raises(CapExceededError):
        enumerate_paths((6, 0, 0), (2, 2, 2), g63, cap=1)


def test_enumerate_paths_with_circuits_is_truncated(g64):
    enum = enumerate_paths((2, 2, 1, 1), (2, 2, 1, 1), g64, circuit_free_only=False, max_length=8)
    assert not enum.complete
    assert () in enum.paths and all(len(p) <= 8 for p in enum.paths)


def test_enumerate_plays(g64):
    plays = list(enumerate_plays((3, 2, 1, 0), 2))
    assert all(len(seq) == 3 for seq in plays)
    with pytest.raises(CapExceededError):
        list(enumerate_plays((0, 0, 0, 6), 12, cap=10))


def test_verify_scc_theorem():
    out = verify_scc_theorem(P64)
    assert out.passed and out.note == "nontrivial=1"
    out = verify_scc_theorem(P63)
    assert out.passed and out.note == "nontrivial=0"
    assert verify_scc_theorem(GameParams(0, 2)).passed


def test_verify_shot_uniqueness():
    out = verify_shot_uniqueness(P63, (4, 1, 1))
    assert out.passed and out.instances_checked == 5
    assert verify_shot_uniqueness(P63, (2, 2, 2)).passed
    assert verify_shot_uniqueness(P64, (6, 0, 0, 0)).passed


def test_verify_shot_uniqueness_cap_is_inconclusive():
    out = verify_shot_uniqueness(P64, (6, 0, 0, 0), cap=5)
    assert out.inconclusive and not out.passed and out.status == "inconclusive"


def test_verify_order_and_lattice():
    for params, origin in [(P63, (4, 1, 1)), (P64, (3, 2, 1, 0)), (P63, (2, 2, 2)), (P64, (6, 0, 0, 0))]:
        assert verify_order_characterization(params, origin).passed
        assert verify_lattice(params, origin).passed


def test_verify_convergence_formulas():
    out = verify_convergence_formulas(P63, random_plays=50)
    assert out.passed
    assert verify_convergence_formulas(GameParams(0, 2)).passed
    assert verify_recurrence_bound(P64).passed


def test_time_to_P_counterexample_is_reported():
    out = verify_time_to_P(P64)
    assert out.status == "fail"
    origins = sorted(f["origin"] for f in out.failures)
    assert origins == [(0, 2, 1, 3), (0, 3, 0, 3)]
    assert verify_time_to_P(P64, dual_entry_only=True).passed


def test_global_checks_sweep_small():
    for n in range(0, 9):
        for p in range(2, 5):
            params = GameParams(n, p)
            assert verify_termination(params).passed
            assert verify_dual_characterization(params).passed
            assert verify_dominance(params).passed


def test_negative_control_fails():
    broken = lambda giver, receiver: giver > receiver + 1
    with override_rule(broken):
        assert not verify_termination(P63).passed
        assert not verify_scc_theorem(P64).passed
        assert not verify_dual_characterization(P64).passed
    # the override is scoped
    assert verify_termination(P63).passed


def test_sweep_is_deterministic():
    cfg = SweepConfig(max_n=4, max_p=3, random_plays=20)
    first = [o.to_record() for o in run_sweep(cfg)]
    second = [o.to_record() for o in run_sweep(cfg)]
    assert first == second
    assert all("status=pass" in line for line in first)


def test_failure_records_are_replayable():
    out = verify_recurrence_bound(GameParams(3, 4))
    assert out.status == "fail"
    play = out.failures[0]["play"]
    for a, b in zip(play, play[1:]):
        assert b in graph(3, 4).successors(a)
    assert play[-1] not in play[:-1]
