import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abacus_lab import (
    BetaSet,
    Partition,
    ValidationError,
    bd,
    beta_set,
    e_core,
    e_core_weight,
    emp,
    emp_range,
    format_beta_set,
    parse_beta_set,
    partition_of,
    render_abacus,
    same_core,
    size_of,
)
from abacus_lab import oracle
from abacus_lab.abacus import slide_up
from abacus_lab.oracle import SweepConfig, core_by_hook_removal, partitions_upto


def P(*parts):
    return Partition(parts)


def as_set(B, low, high):
    return {v for v in range(low, high + 1) if v in B}


def test_canonical_beta_sets():
    B = beta_set(P(6, 4, 2))
    assert as_set(B, -20, 20) == {5, 2, -1} | set(range(-20, -3))
    assert as_set(beta_set(P()), -20, 20) == set(range(-20, 0))
    assert as_set(beta_set(P(1, 1)), -20, 20) == {0, -1} | set(range(-20, -2))


def test_partition_of_examples():
    assert partition_of(BetaSet(-3, (5, 2, -1))) == (P(6, 4, 2), 0)
    assert partition_of(BetaSet(0)) == (P(), 0)
    assert partition_of(BetaSet(-3, (2, 0))) == (P(4, 3), -1)


def test_counting_examples():
    B = beta_set(P(6, 4, 2))
    assert bd(B, -6, 8) == 6
    assert emp_range(B, -6, 8) == 9
    assert (emp(B, 5), emp(B, 2), emp(B, -1)) == (6, 4, 2)
    assert bd(B, 3, 2) == emp_range(B, 3, 2) == 0


def brute_emp(B, v):
    return sum(1 for x in range(B.floor - 5, v + 1) if x not in B)


def test_emp_matches_direct_count():
    for lam in partitions_upto(8):
        B = beta_set(lam, 1)
        for v in range(B.floor - 3, B.max + 3):
            assert emp(B, v) == brute_emp(B, v)


def test_size_examples():
    assert size_of(beta_set(P(6, 4, 2))) == 12
    assert size_of(beta_set(P())) == 0
    assert size_of(beta_set(P(5, 3, 3, 1))) == 12


def test_round_trip_up_to_20():
    assert oracle.prop_round_trip(SweepConfig(max_n=20)) > 0


def test_text_format():
    B = beta_set(P(6, 4, 2))
    assert format_beta_set(B) == "floor=-4; beads=5,2,-1"
    assert parse_beta_set("floor=-4; beads=5,2,-1") == B
    assert parse_beta_set("floor=-1; beads=") == beta_set(P())


@pytest.mark.parametrize("text", ["floor=-4", "floor=x; beads=1", "floor=0; beads=0", "floor=0; beads=2,2"])
def test_text_format_rejects(text):
    with pytest.raises(ValidationError):
        parse_beta_set(text)


def test_core_examples():
    assert e_core_weight(beta_set(P(6, 4, 2)), 5) == (P(1, 1), 2)
    assert e_core_weight(beta_set(P(5, 3, 3, 1)), 5) == (P(1, 1), 2)
    for lam in partitions_upto(10):
        core, _ = e_core_weight(beta_set(lam), 4)
        assert e_core_weight(beta_set(core), 4) == (core, 0)


def test_core_matches_diagram_hook_removal():
    for lam in partitions_upto(14):
        for e in (3, 5):
            assert e_core_weight(beta_set(lam), e) == core_by_hook_removal(lam, e)


def test_same_core():
    B1, B2 = beta_set(P(6, 4, 2)), beta_set(P(5, 3, 3, 1))
    assert same_core(B1, B2, 5)
    assert same_core(B1, B1, 5)
    B3 = beta_set(P(5))
    assert same_core(B1, B3, 5) == (e_core(P(6, 4, 2), 5) == e_core(P(5), 5))
    with pytest.raises(ValidationError):
        same_core(B1, beta_set(P(1), 1), 5)


def test_same_core_matches_core_equality():
    parts = partitions_upto(8)
    for a in parts:
        for b in parts:
            assert same_core(beta_set(a), beta_set(b), 3) == (e_core(a, 3) == e_core(b, 3))


def test_slide_order_independence():
    assert oracle.prop_core_slides(SweepConfig(max_n=12, e_values=(3, 4, 5))) > 0
    rng = random.Random(7)
    B = beta_set(P(6, 4, 2))
    while True:
        movable = [b for b in B.explicit if b - 5 not in B]
        if not movable:
            break
        B = slide_up(B, rng.choice(movable), 5)
    assert partition_of(B)[0] == P(1, 1)


def test_hook_bead_correspondence():
    assert oracle.prop_hook_beads(SweepConfig(max_n=18)) > 0


def test_render_abacus():
    text = render_abacus(beta_set(P(6, 4, 2)), 5)
    assert text.splitlines() == ["o o o o o", "o o . . o", ". . o . .", "o . . . ."]


windows = st.tuples(
    st.integers(-15, 5),
    st.sets(st.integers(-15, 25), max_size=12),
    st.integers(1, 10),
)


@settings(max_examples=300, deadline=None)
@given(windows)
def test_rewindow_probe(data):
    floor, beads, drop = data
    B = BetaSet.from_beads(beads, floor)
    W = B.rewindow(floor - drop)
    assert W == B and hash(W) == hash(B)
    assert partition_of(W) == partition_of(B)
    assert size_of(W) == size_of(B)
    for u in range(floor - drop - 3, B.max + 3, 3):
        for v in range(u - 1, B.max + 3, 4):
            assert W.bd(u, v) == B.bd(u, v)
            assert W.emp_range(u, v) == B.emp_range(u, v)
    for e in (3, 4):
        assert e_core_weight(W, e) == e_core_weight(B, e)


def test_rewindow_sweep():
    assert oracle.prop_rewindow(SweepConfig(max_n=14)) > 0
