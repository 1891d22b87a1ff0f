import pytest

from abacus_lab import BetaSet, Partition, PropertyViolation, ValidationError, is_e_regular
from abacus_lab import involution, oracle
from abacus_lab.oracle import (
    SweepConfig,
    enumerate_e_regular,
    enumerate_partitions,
    partition_count,
    run_sweep,
    worker_count,
)


def P(*parts):
    return Partition(parts)


def test_partition_counts():
    assert partition_count(5) == 7
    assert partition_count(12) == 77
    assert [partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    for n in range(31):
        assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)


def test_enumeration_order_and_validity():
    got = list(enumerate_partitions(4))
    assert got == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
    assert list(enumerate_partitions(0)) == [P()]


def test_e_regular_enumeration():
    assert list(enumerate_e_regular(4, 2)) == [P(4), P(3, 1)]
    assert list(enumerate_e_regular(3, 3)) == [P(3), P(2, 1)]
    for n in range(12):
        expected = [lam for lam in enumerate_partitions(n) if is_e_regular(lam, 3)]
        assert list(enumerate_e_regular(n, 3)) == expected


def test_empty_sweep_is_vacuous():
    report = run_sweep(SweepConfig(max_n=0))
    assert all(line["failures"] == 0 for line in report.lines)
    assert len(report.lines) == len(oracle.PROPERTIES)


def test_sweep_is_deterministic():
    cfg = SweepConfig(max_n=9)
    first = run_sweep(cfg).to_jsonl()
    assert first == run_sweep(cfg).to_jsonl()
    assert first.count("\n") == len(oracle.PROPERTIES)


def test_parallel_sweep_matches_sequential(monkeypatch):
    monkeypatch.setenv("ABACUS_LAB_THREADS", "2")
    seq = run_sweep(SweepConfig(max_n=8)).to_jsonl()
    par = run_sweep(SweepConfig(max_n=8, parallel=True)).to_jsonl()
    assert seq == par


def test_thread_env_validation(monkeypatch):
    monkeypatch.setenv("ABACUS_LAB_THREADS", "three")
    with pytest.raises(ValidationError):
        worker_count()
    monkeypatch.setenv("ABACUS_LAB_THREADS", "0")
    assert worker_count() == 1


def test_sweep_catches_corrupted_ms(monkeypatch):
    real = involution.Ms

    def corrupted(B, e):
        out = real(B, e)
        # shove the top bead one step to the right
        return out.with_moves(remove=(out.max,), add=(out.max + 1,))

    monkeypatch.setattr(involution, "Ms", corrupted)
    with pytest.raises(PropertyViolation) as info:
        run_sweep(SweepConfig(max_n=8), only={"ama_matches_xu"})
    assert info.value.witness


def test_sweep_catches_corrupted_leading_beads(monkeypatch):
    real = involution.leading_beads

    def corrupted(B, e):
        lead = real(B, e)
        return involution.LeadingBeads(lead.beads, max(lead.z - 1, 0), e)

    monkeypatch.setattr(involution, "leading_beads", corrupted)
    with pytest.raises(PropertyViolation):
        run_sweep(SweepConfig(max_n=10), only={"ama_matches_xu"})


def test_advisory_failure_does_not_abort(monkeypatch):
    def broken(cfg):
        oracle._fail("involution", lam="x")

    props = [(n, broken if n == "mullineux_involution" else f, a) for n, f, a in oracle.PROPERTIES]
    monkeypatch.setattr(oracle, "PROPERTIES", props)
    report = run_sweep(SweepConfig(max_n=4))
    line = [x for x in report.lines if x["property"] == "mullineux_involution"][0]
    assert line["advisory"] and line["failures"] == 1


def test_bad_pairs_rejected():
    with pytest.raises(ValidationError):
        run_sweep(SweepConfig(max_n=4, d_pairs=((2, 4),)))


def test_hook_removal_reference():
    assert oracle.core_by_hook_removal(P(6, 4, 2), 5) == (P(1, 1), 2)
    assert oracle.core_by_hook_removal(P(), 3) == (P(), 0)


def test_window_choice_does_not_change_equality():
    assert BetaSet(0, (1,)) == BetaSet(-4, (-4, -3, -2, -1, 1))
    assert BetaSet(0, (1,)) != BetaSet(-4, (-4, -3, -2, -1, 0, 1))
