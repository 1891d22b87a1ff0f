"""Brute-force enumeration, independent reference computations and the property sweep."""
from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from . import abacus, extremal, hooks, involution, partition, runner
from .abacus import beta_set, e_core_weight, partition_of
from .errors import PropertyViolation, ValidationError
from .partition import OrderRelation, Partition


def enumerate_partitions(n: int, max_part: int | None = None):
    """All partitions of n in descending lexicographic order (streaming)."""
    if n < 0:
        raise ValidationError(f"n must be non-negative, got {n}")
    for parts in _parts(n, n if max_part is None else max_part):
        yield Partition(parts)


def _parts(n, cap):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _parts(n - first, first):
            yield (first,) + rest


def enumerate_e_regular(n: int, e: int):
    return (lam for lam in enumerate_partitions(n) if partition.is_e_regular(lam, e))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
        if g1 > n:
            return total
        sign = 1 if k % 2 else -1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1


def conjugate_by_transpose(lam: Partition) -> Partition:
    return partition.from_cells({(j, i) for i, j in Partition(lam).cells()})


def core_by_hook_removal(lam: Partition, e: int) -> tuple[Partition, int]:
    """Strip e-hooks on the diagram until none is left."""
    lam, weight = Partition(lam), 0
    while True:
        col = partition.conjugate(lam)
        cell = next(((i, j) for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] + 1)
                     if partition.hook_length(lam, i, j, col) == e), None)
        if cell is None:
            return lam, weight
        lam = partition.remove_rim_hook(lam, partition.rim_hook(lam, *cell))
        weight += 1


def coprime_pairs(e_values) -> tuple[tuple[int, int], ...]:
    return tuple((d, e) for e in e_values for d in range(2, e) if gcd(d, e) == 1)


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 18
    e_values: tuple = (3, 4, 5)
    d_pairs: tuple | None = None
    parallel: bool = False
    seed: int = 0

    def pairs(self) -> tuple[tuple[int, int], ...]:
        pairs = coprime_pairs(self.e_values) if self.d_pairs is None else tuple(map(tuple, self.d_pairs))
        for d, e in pairs:
            runner.validate_de(d, e)
        return pairs


@lru_cache(maxsize=8)
def partitions_upto(n: int) -> tuple[Partition, ...]:
    return tuple(lam for k in range(n + 1) for lam in enumerate_partitions(k))


def _fail(prop: str, **witness):
    raise PropertyViolation(prop, witness)


# --- partition-core -------------------------------------------------------

def prop_partition_count(cfg):
    n_max = max(cfg.max_n, 0)
    for n in range(n_max + 1):
        got = sum(1 for _ in enumerate_partitions(n))
        if got != partition_count(n):
            _fail("partition_count", n=n, enumerated=got, recurrence=partition_count(n))
    return n_max + 1


def prop_conjugate(cfg):
    count = 0
    for lam in partitions_upto(cfg.max_n):
        c = partition.conjugate(lam)
        if c != conjugate_by_transpose(lam) or partition.conjugate(c) != lam:
            _fail("conjugate", lam=str(lam))
        count += 1
    return count


def prop_rim_hooks(cfg):
    count = 0
    for lam in partitions_upto(cfg.max_n):
        for i in range(1, len(lam) + 1):
            for j in range(1, lam[i - 1] + 1):
                h = partition.rim_hook(lam, i, j)
                rest = partition.remove_rim_hook(lam, h)
                if h.arm + h.leg != h.size - 1 or rest.size != lam.size - h.size:
                    _fail("rim_hooks", lam=str(lam), cell=(i, j))
                if h.top != i or h.bottom != max(r for r, _ in h.cells):
                    _fail("rim_hooks", lam=str(lam), cell=(i, j), top=h.top, bottom=h.bottom)
                count += 1
    return count


def prop_proper_rim(cfg):
    count = 0
    for e in cfg.e_values:
        for lam in partitions_upto(cfg.max_n):
            if not lam:
                continue
            full, proper = partition.e_rim(lam, e), partition.proper_e_rim(lam, e)
            if (full == proper) != (len(full) % e == 0) or not proper <= full or len(proper) % e:
                _fail("proper_rim", lam=str(lam), e=e)
            count += 1
    return count


def prop_dominance_order(cfg):
    count = 0
    for n in range(min(cfg.max_n, 12) + 1):
        parts = list(enumerate_partitions(n))
        rel = {(a, b): partition.dominance(a, b) for a in parts for b in parts}
        for a in parts:
            for b in parts:
                r = rel[a, b]
                if (r == OrderRelation.EQUAL) != (a == b):
                    _fail("dominance_order", mu=str(a), lam=str(b))
                if r == OrderRelation.LESS and rel[b, a] != OrderRelation.GREATER:
                    _fail("dominance_order", mu=str(a), lam=str(b))
                if r == OrderRelation.GREATER and partition.lex_compare(a, b) != OrderRelation.GREATER:
                    _fail("dominance_lex", mu=str(a), lam=str(b))
                if r == OrderRelation.LESS:
                    for c in parts:
                        if rel[b, c] == OrderRelation.LESS and rel[a, c] != OrderRelation.LESS:
                            _fail("dominance_transitive", a=str(a), b=str(b), c=str(c))
                count += 1
    return count


def prop_j_map_abacus(cfg):
    count = 0
    for e in cfg.e_values:
        for lam in partitions_upto(cfg.max_n):
            if not lam or not partition.is_e_regular(lam, e):
                continue
            for s in (-2, 0, 2):
                J, t = partition_of(involution.Ms(beta_set(lam, s), e))
                if J != partition.j_map(lam, e) or t != s - 1:
                    _fail("j_map_abacus", lam=str(lam), e=e, s=s, abacus=str(J))
            if partition.j_map(lam, e).size >= lam.size:
                _fail("j_map_shrinks", lam=str(lam), e=e)
            count += 1
    return count


# --- abacus ---------------------------------------------------------------

def prop_round_trip(cfg):
    count = 0
    for lam in partitions_upto(cfg.max_n):
        for s in range(-3, 4):
            B = beta_set(lam, s)
            if partition_of(B) != (lam, s) or abacus.size_of(B) != lam.size:
                _fail("round_trip", lam=str(lam), s=s)
            if abacus.parse_beta_set(abacus.format_beta_set(B)) != B:
                _fail("beta_text", lam=str(lam), s=s)
            count += 1
    return count


def prop_rewindow(cfg):
    rng = random.Random(cfg.seed)
    count = 0
    for lam in partitions_upto(cfg.max_n):
        B = beta_set(lam, rng.randint(-3, 3))
        low = B.floor - rng.randint(1, 10)
        W = B.rewindow(low)
        probes = range(low - 3, B.max + 3)
        if W != B or partition_of(W) != partition_of(B) or any(
                W.emp(v) != B.emp(v) or W.bd(low - 2, v) != B.bd(low - 2, v) for v in probes):
            _fail("rewindow", lam=str(lam), floor=low)
        for e in cfg.e_values:
            if e_core_weight(W, e) != e_core_weight(B, e):
                _fail("rewindow_core", lam=str(lam), e=e)
        for d, e in cfg.pairs():
            if runner.runner_matrix_of_beta_set(W, d, e) != runner.runner_matrix_of_beta_set(B, d, e):
                _fail("rewindow_matrix", lam=str(lam), d=d, e=e)
            if hooks.classify_beta_set(W, d, e).flags() != hooks.classify_beta_set(B, d, e).flags():
                _fail("rewindow_classes", lam=str(lam), d=d, e=e)
        count += 1
    return count


def prop_hook_beads(cfg):
    count = 0
    for e in cfg.e_values:
        for lam in partitions_upto(cfg.max_n):
            B = beta_set(lam)
            movable = [b for b in B.explicit if b - e not in B]
            hooks_e = [h for h in partition.e_divisible_hooks(lam, e) if h.size == e]
            if len(movable) != len(hooks_e):
                _fail("hook_beads", lam=str(lam), e=e)
            desc = list(reversed(B.explicit))
            for h in hooks_e:
                b = desc[h.top - 1]
                if b not in movable or B.bd(b - e + 1, B.max) != h.bottom:
                    _fail("hook_beads", lam=str(lam), e=e, hook=h.start)
                if partition_of(abacus.slide_up(B, b, e))[0] != partition.remove_rim_hook(lam, h):
                    _fail("hook_slide", lam=str(lam), e=e, hook=h.start)
                count += 1
    return count


def prop_core_slides(cfg):
    rng = random.Random(cfg.seed)
    count = 0
    for e in cfg.e_values:
        for lam in partitions_upto(cfg.max_n):
            core, w = e_core_weight(beta_set(lam), e)
            if (core, w) != core_by_hook_removal(lam, e):
                _fail("core_reference", lam=str(lam), e=e)
            B, steps = beta_set(lam), 0
            while True:
                movable = [b for b in B.explicit if b - e not in B]
                if not movable:
                    break
                B = abacus.slide_up(B, rng.choice(movable), e)
                steps += 1
            if partition_of(B)[0] != core or steps != w:
                _fail("core_slide_order", lam=str(lam), e=e)
            count += 1
    return count


# --- runner-matrix --------------------------------------------------------

def prop_rotation(cfg):
    count = 0
    for d, e in cfg.pairs():
        for lam in partitions_upto(cfg.max_n):
            R = runner.runner_matrix_of_partition(lam, d, e)
            if R.total != sum(1 for p in lam if p % d):
                _fail("matrix_total", lam=str(lam), d=d, e=e)
            for s in range(-2, 3):
                if runner.runner_matrix_of_beta_set(beta_set(lam, s), d, e).rotated(s) != R:
                    _fail("matrix_rotation", lam=str(lam), d=d, e=e, s=s)
                count += 1
    return count


def prop_ama_pairs(cfg):
    """AMA states of balanced partitions are combined pairs with a constant matrix."""
    count = 0
    for d, e in cfg.pairs():
        for lam in partitions_upto(cfg.max_n):
            if not partition.is_e_regular(lam, e) or not hooks.classify_partition(lam, d, e).balanced:
                continue
            trace = involution.ama_trace(lam, e, d)
            R = runner.runner_matrix_of_partition(lam, d, e)
            if not all(trace.pair_checks) or any(M != R for M in trace.combined_matrices):
                _fail("ama_pairs", lam=str(lam), d=d, e=e)
            for S, T in trace.states:
                P = runner.CombinedPair(S.rewindow(S.floor - 2 * e), T)
                if not runner.is_d_combined_pair(P, d, e):
                    _fail("pair_window", lam=str(lam), d=d, e=e)
            count += len(trace.states)
    return count


# --- hook-classes ---------------------------------------------------------

def prop_classes(cfg):
    count = 0
    for d, e in cfg.pairs():
        for lam in partitions_upto(cfg.max_n):
            rep = hooks.classify_partition(lam, d, e)
            for s in (-2, 0, 2):
                if hooks.classify_beta_set(beta_set(lam, s), d, e).flags() != rep.flags():
                    _fail("classes_agree", lam=str(lam), d=d, e=e, s=s)
            if (rep.balanced and not rep.shift_skewed) or (rep.shift_balanced and not rep.skewed):
                _fail("classes_hierarchy", lam=str(lam), d=d, e=e)
            if d == 2 and (rep.balanced != rep.shift_skewed or rep.shift_balanced != rep.skewed):
                _fail("classes_d2", lam=str(lam), e=e)
            R = runner.runner_matrix_of_partition(lam, d, e)
            if rep.balanced and R.row_has_zero(1) and not partition.is_e_regular(lam, e):
                _fail("balanced_regular", lam=str(lam), d=d, e=e)
            if rep.balanced and lam:
                B = beta_set(lam)
                if not hooks.classify_beta_set(involution.Ms(B, e), d, e).balanced:
                    _fail("ms_keeps_balanced", lam=str(lam), d=d, e=e)
            count += 1
    return count


# --- mullineux ------------------------------------------------------------

def _proper_rim_pieces(lam, e):
    pieces, last_divisible = partition._e_rim_pieces(lam, e)
    return pieces if last_divisible else pieces[:-1]


def prop_ama_xu(cfg):
    count = 0
    for e in cfg.e_values:
        for lam in partitions_upto(cfg.max_n):
            if not partition.is_e_regular(lam, e):
                continue
            got = involution.ama(lam, e)
            if got != involution.xu_recursive(lam, e):
                _fail("ama_xu", lam=str(lam), e=e, ama=str(got))
            if e_core_weight(beta_set(got), e) != e_core_weight(beta_set(lam), e):
                _fail("ama_core", lam=str(lam), e=e)
            if lam:
                B = beta_set(lam)
                lead = involution.leading_beads(B, e)
                M = involution.Ms(B, e)
                if lead.beads[lead.z] in M:
                    _fail("ms_drops_stable", lam=str(lam), e=e)
                for i in range(lead.z + 1):
                    expected = i > 0 and lead.beads[i] + e == lead.beads[i - 1]
                    if (lead.beads[i] in M) != expected:
                        _fail("ms_membership", lam=str(lam), e=e, i=i)
                absent = sum(1 for b in lead.beads[:lead.z + 1] if b not in M)
                if absent != len(_proper_rim_pieces(lam, e)) + 1:
                    _fail("rim_pieces_count", lam=str(lam), e=e)
                removed = partition.from_cells(lam.cells() - partition.proper_e_rim(lam, e))
                if involution.proper_rim_removal_via_abacus(B, e) != removed:
                    _fail("proper_rim_abacus", lam=str(lam), e=e)
            count += 1
    return count


def prop_balanced_to_shift_balanced(cfg):
    count = 0
    for d, e in cfg.pairs():
        for lam in partitions_upto(cfg.max_n):
            rep = hooks.classify_partition(lam, d, e)
            R = runner.runner_matrix_of_partition(lam, d, e)
            if not rep.balanced or not R.row_has_zero(1):
                continue
            out = involution.ama(lam, e)
            if not hooks.classify_partition(out, d, e).shift_balanced:
                _fail("ama_shift_balanced", lam=str(lam), d=d, e=e, out=str(out))
            if runner.runner_matrix_of_partition(out, d, e) != R:
                _fail("ama_matrix", lam=str(lam), d=d, e=e)
            if abacus.e_core(out, e) != abacus.e_core(lam, e):
                _fail("ama_core", lam=str(lam), d=d, e=e)
            if extremal.minimize(lam, d, e) != out:
                _fail("ama_is_minimize", lam=str(lam), d=d, e=e)
            count += 1
    return count


def prop_involution(cfg):
    count = 0
    for e in cfg.e_values:
        for lam in partitions_upto(cfg.max_n):
            if partition.is_e_regular(lam, e):
                m = involution.mullineux(lam, e)
                if not partition.is_e_regular(m, e) or involution.mullineux(m, e) != lam:
                    _fail("involution", lam=str(lam), e=e)
                count += 1
    return count


# --- extremal -------------------------------------------------------------

def swap_instances(cfg_pairs, max_n):
    for d, e in cfg_pairs:
        for lam in partitions_upto(max_n):
            B = beta_set(lam)
            for b, a in hooks.divisible_hooks_of_beta_set(B, e):
                yield d, e, lam, B, b, a


def check_swap_instance(d, e, lam, B, b, a) -> tuple[bool, bool]:
    """Check a1 (and a2 when allowed) on one hook; returns which ran."""
    ae = a * e
    R = runner.runner_matrix_of_beta_set(B, d, e)
    n0, _ = partition_of(B)
    core0 = e_core_weight(B, e)[0]
    results = [("a1", extremal.a1, OrderRelation.GREATER, B.emp_range(b - ae, b))]
    if R.every_row_has_zero():
        results.append(("a2", extremal.a2, OrderRelation.LESS, B.emp_range(b - ae + 1, b)))
    for name, algo, direction, gap in results:
        out, log = algo(B, b, a, d, e)
        lam1, s1 = partition_of(out)
        wit = dict(lam=str(lam), d=d, e=e, b=b, a=a, algo=name)
        if s1 != B.shift or e_core_weight(out, e)[0] != core0:
            _fail("swap_core", **wit)
        if not (lam1.size < n0.size or (lam1.size == n0.size and partition.dominance(lam1, n0) == direction)):
            _fail("swap_order", out=str(lam1), **wit)
        if gap % d == 0 and runner.runner_matrix_of_beta_set(out, d, e) != R:
            _fail("swap_matrix", **wit)
        if not log.short_circuit and (log.count("up") - log.count("down")) not in (0, d):
            _fail("swap_balance", **wit)
        if extremal.replay_runnerwise(B, log, a, e) != out:
            _fail("swap_runnerwise", **wit)
    return True, len(results) == 2


def prop_swaps(cfg):
    count = 0
    for inst in swap_instances(cfg.pairs(), cfg.max_n):
        ran1, ran2 = check_swap_instance(*inst)
        count += ran1 + ran2
    return count


def families(d, e, max_n):
    """Group partitions of size <= max_n by (core, matrix); keep least-weight members and all members."""
    groups: dict = {}
    for lam in partitions_upto(max_n):
        core, w = e_core_weight(beta_set(lam), e)
        key = (core, runner.runner_matrix_of_partition(lam, d, e))
        groups.setdefault(key, []).append((w, lam))
    return groups


def prop_families(cfg):
    count = 0
    for d, e in cfg.pairs():
        for (core, R), entries in families(d, e, cfg.max_n).items():
            w = min(x for x, _ in entries)
            members = [lam for x, lam in entries if x == w]
            everyone = [lam for _, lam in entries]
            top = extremal._extreme(members, OrderRelation.GREATER)
            wit = dict(core=str(core), R=str(R), d=d, e=e)
            shift_skewed = [lam for lam in everyone if hooks.classify_partition(lam, d, e).shift_skewed]
            if top is None or shift_skewed != [top]:
                _fail("family_max", members=[str(m) for m in members], **wit)
            if extremal.greedy_max(core, R) != top:
                _fail("greedy_max", **wit)
            for lam in everyone:
                if extremal.maximize(lam, d, e) != top:
                    _fail("maximize", lam=str(lam), **wit)
            skewed = [lam for lam in everyone if hooks.classify_partition(lam, d, e).skewed]
            if R.every_row_has_zero():
                bottom = extremal._extreme(members, OrderRelation.LESS)
                if bottom is None or skewed != [bottom]:
                    _fail("family_min", members=[str(m) for m in members], **wit)
                for lam in everyone:
                    if extremal.minimize(lam, d, e) != bottom:
                        _fail("minimize", lam=str(lam), **wit)
                if hooks.classify_partition(top, d, e).balanced and involution.ama(top, e) != bottom:
                    _fail("ama_max_is_min", **wit)
            elif skewed:
                _fail("no_skewed", lam=str(skewed[0]), **wit)
            count += 1
    return count


def random_core_and_matrix(rng: random.Random, d: int, e: int, max_n: int = 12, max_entry: int = 2):
    lam = rng.choice(partitions_upto(max_n))
    core = e_core_weight(beta_set(lam), e)[0]
    rows = tuple(tuple(rng.randint(0, max_entry) for _ in range(e)) for _ in range(d - 1))
    return core, runner.RunnerMatrix(d, e, rows)


def prop_greedy_random(cfg, samples: int = 30):
    rng = random.Random(cfg.seed)
    count = 0
    for d, e in cfg.pairs():
        for _ in range(samples):
            core, R = random_core_and_matrix(rng, d, e)
            lam = extremal.greedy_max(core, R)
            if (abacus.e_core(lam, e) != core or runner.runner_matrix_of_partition(lam, d, e) != R
                    or not hooks.classify_partition(lam, d, e).shift_skewed):
                _fail("greedy_random", core=str(core), R=str(R), d=d, e=e, out=str(lam))
            count += 1
    return count


PROPERTIES = [
    ("partition_count", prop_partition_count, False),
    ("conjugate_involution", prop_conjugate, False),
    ("rim_hook_arm_leg", prop_rim_hooks, False),
    ("proper_rim_iff_divisible", prop_proper_rim, False),
    ("dominance_partial_order", prop_dominance_order, False),
    ("j_map_matches_abacus", prop_j_map_abacus, False),
    ("beta_set_round_trip", prop_round_trip, False),
    ("rewindow_invariance", prop_rewindow, False),
    ("hook_bead_correspondence", prop_hook_beads, False),
    ("core_slide_order", prop_core_slides, False),
    ("runner_matrix_rotation", prop_rotation, False),
    ("ama_states_are_combined_pairs", prop_ama_pairs, False),
    ("hook_classes", prop_classes, False),
    ("ama_matches_xu", prop_ama_xu, False),
    ("balanced_to_shift_balanced", prop_balanced_to_shift_balanced, False),
    ("swap_algorithms", prop_swaps, False),
    ("family_extremes", prop_families, False),
    ("greedy_random", prop_greedy_random, False),
    ("mullineux_involution", prop_involution, True),
]


@dataclass
class SweepReport:
    lines: list = field(default_factory=list)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(line, separators=(", ", ": ")) + "\n" for line in self.lines)


def _run_one(args):
    name, cfg = args
    fn, advisory = {n: (f, a) for n, f, a in PROPERTIES}[name]
    try:
        return {"property": name, "instances": fn(cfg), "failures": 0}, None
    except PropertyViolation as exc:
        if advisory:
            return {"property": name, "instances": 0, "failures": 1, "advisory": True}, None
        return None, (exc.prop, exc.witness)


def worker_count() -> int:
    raw = os.environ.get("ABACUS_LAB_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValidationError(f"ABACUS_LAB_THREADS must be an integer, got {raw!r}") from None


def run_sweep(cfg: SweepConfig, only=None) -> SweepReport:
    """Run every property; the first non-advisory failure raises PropertyViolation."""
    cfg.pairs()
    names = [n for n, _, _ in PROPERTIES if only is None or n in only]
    jobs = [(n, cfg) for n in names]
    workers = min(worker_count(), len(jobs)) if cfg.parallel else 1
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = map(_run_one, jobs)
    report = SweepReport()
    for line, failure in results:
        if failure is not None:
            raise PropertyViolation(*failure)
        report.lines.append(line)
    return report
