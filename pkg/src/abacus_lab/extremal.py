"""Swap algorithms A1/A2 and the extremal members of a family E_R(gamma).

E_R(gamma) is the set of partitions with e-core gamma and d-runner matrix R
having the least possible e-weight.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .abacus import BetaSet, beta_set, e_core_weight, partition_of
from .errors import PreconditionError, PropertyViolation, ValidationError
from .hooks import classify_partition, divisible_hooks_of_beta_set
from .partition import OrderRelation, Partition, dominance
from .runner import RunnerMatrix, runner_matrix_of_beta_set, runner_matrix_of_partition, validate_de

UP, DOWN, NEUTRAL = "up", "down", "neutral"
DEFAULT_SWAP_CAP = 10**6


@dataclass(frozen=True)
class Swap:
    step: int
    low: int
    high: int
    kind: str


@dataclass
class SwapLog:
    swaps: list = field(default_factory=list)
    short_circuit: bool = False

    @property
    def terminal(self) -> int:
        return self.swaps[-1].step

    def count(self, kind: str) -> int:
        return sum(1 for s in self.swaps if s.kind == kind)

    def steps(self, kind: str) -> list[int]:
        return [s.step for s in self.swaps if s.kind == kind]


class _Board:
    """Mutable bead set that grows its window downwards on demand."""

    def __init__(self, B: BetaSet, pad: int):
        self.lo = B.floor
        self.beads = set(B.explicit)
        self.pad = pad

    def has(self, v: int) -> bool:
        return v < self.lo or v in self.beads

    def _reach(self, v: int):
        if v < self.lo:
            new_lo = v - self.pad
            self.beads.update(range(new_lo, self.lo))
            self.lo = new_lo

    def swap(self, step: int, low: int, high: int) -> Swap:
        self._reach(low)
        at_low, at_high = low in self.beads, high in self.beads
        if at_high and not at_low:
            self.beads.remove(high)
            self.beads.add(low)
            return Swap(step, low, high, UP)
        if at_low and not at_high:
            self.beads.remove(low)
            self.beads.add(high)
            return Swap(step, low, high, DOWN)
        return Swap(step, low, high, NEUTRAL)

    def freeze(self) -> BetaSet:
        return BetaSet(self.lo, tuple(self.beads)).normalized()


def _check_hook(B: BetaSet, b: int, a: int, e: int):
    if a <= 0:
        raise ValidationError(f"a must be positive, got {a}")
    if b not in B or b - a * e in B:
        raise PreconditionError(f"need a bead at {b} and an empty position at {b - a * e}")


def _run(B: BetaSet, b: int, a: int, d: int, e: int, direction: int, cap: int):
    ae = a * e
    board = _Board(B, ae)
    log = SwapLog()
    up = down = 0
    i = 0
    while True:
        if i >= cap:
            raise PropertyViolation("swap.cap", {"beta_set": str(B), "b": b, "a": a, "cap": cap})
        high = b + direction * i
        s = board.swap(i, high - ae, high)
        log.swaps.append(s)
        up += s.kind == UP
        down += s.kind == DOWN
        if (up - down) % d == 0:
            return board.freeze(), log
        i += 1


def a1(B: BetaSet, b: int, a: int, d: int, e: int, cap: int = DEFAULT_SWAP_CAP) -> tuple[BetaSet, SwapLog]:
    """Push the ae-hook at b upwards, propagating to the right until the
    up- and down-move counts agree mod d."""
    validate_de(d, e)
    _check_hook(B, b, a, e)
    if B.bd(b - a * e + 1, b - 1) == 0:
        board = _Board(B, a * e)
        log = SwapLog([board.swap(0, b - a * e, b)], short_circuit=True)
        return board.freeze(), log
    return _run(B, b, a, d, e, +1, cap)


def a2(B: BetaSet, b: int, a: int, d: int, e: int, cap: int = DEFAULT_SWAP_CAP) -> tuple[BetaSet, SwapLog]:
    """Like a1 but propagating to the left. Needs a zero in every row of the runner matrix."""
    validate_de(d, e)
    _check_hook(B, b, a, e)
    if not runner_matrix_of_beta_set(B, d, e).every_row_has_zero():
        raise PreconditionError("a2 needs a zero in every row of the runner matrix")
    return _run(B, b, a, d, e, -1, cap)


def apply_swaps(B: BetaSet, swaps) -> BetaSet:
    """Replay swaps in the given order."""
    pad = max((s.high - s.low for s in swaps), default=1)
    board = _Board(B, pad)
    for s in swaps:
        board.swap(s.step, s.low, s.high)
    return board.freeze()


def replay_runnerwise(B: BetaSet, log: SwapLog, a: int, e: int) -> BetaSet:
    """Replay the swaps one runner (mod ae) at a time, keeping the order within a runner."""
    ae = a * e
    groups: dict[int, list[Swap]] = {}
    for s in log.swaps:
        groups.setdefault(s.low % ae, []).append(s)
    return apply_swaps(B, [s for r in sorted(groups) for s in groups[r]])


def _first_witness(B: BetaSet, d: int, e: int, shifted: bool):
    for b, a in divisible_hooks_of_beta_set(B, e):
        low = b - a * e if shifted else b - a * e + 1
        if B.emp_range(low, b) % d == 0:
            return b, a
    return None


def maximize(lam: Partition, d: int, e: int, cap: int = 10**5) -> Partition:
    """Apply a1 until the partition is d-shift-skewed."""
    validate_de(d, e)
    B = beta_set(lam)
    for _ in range(cap):
        w = _first_witness(B, d, e, shifted=True)
        if w is None:
            return partition_of(B)[0]
        B, _ = a1(B, w[0], w[1], d, e)
    raise PropertyViolation("maximize.cap", {"lambda": str(lam), "d": d, "e": e})


def minimize(lam: Partition, d: int, e: int, cap: int = 10**5) -> Partition:
    """Apply a2 until the partition is d-skewed."""
    validate_de(d, e)
    if not runner_matrix_of_partition(lam, d, e).every_row_has_zero():
        raise PreconditionError("minimize needs a zero in every row of the runner matrix")
    B = beta_set(lam)
    for _ in range(cap):
        w = _first_witness(B, d, e, shifted=False)
        if w is None:
            return partition_of(B)[0]
        B, _ = a2(B, w[0], w[1], d, e)
    raise PropertyViolation("minimize.cap", {"lambda": str(lam), "d": d, "e": e})


def _check_core_matrix(gamma: Partition, R: RunnerMatrix):
    validate_de(R.d, R.e)
    gamma = Partition(gamma)
    if e_core_weight(beta_set(gamma), R.e)[1] != 0:
        raise PreconditionError(f"{gamma} is not an {R.e}-core")
    return gamma


def greedy_max(gamma: Partition, R: RunnerMatrix) -> Partition:
    """Fill positions left to right, placing a bead wherever the matrix still
    asks for one on that runner with that d-emptiness."""
    gamma = _check_core_matrix(gamma, R)
    d, e = R.d, R.e
    B = beta_set(gamma)
    N = R.total
    low = B.floor - e * N
    avail = [0] * e
    for v in range(low, B.floor):
        avail[v % e] += 1
    for b in B.explicit:
        avail[b % e] += 1
    need = [[avail[y] - sum(R.rows[x][y] for x in range(d - 1)) for y in range(e)]]
    need += [list(row) for row in R.rows]
    if min(need[0]) < 0:
        raise PropertyViolation("greedy.window", {"gamma": str(gamma), "R": str(R)})
    left = sum(map(sum, need))
    beads, empties, i = [], 0, low
    while left:
        x, y = empties % d, i % e
        if need[x][y]:
            need[x][y] -= 1
            left -= 1
            beads.append(i)
        else:
            empties += 1
        i += 1
    return partition_of(BetaSet(low, tuple(beads)))[0]


@dataclass
class FamilyResult:
    gamma: Partition
    R: RunnerMatrix
    w: int
    members: list
    max_elem: Partition
    min_elem: Partition | None

    def to_dict(self) -> dict:
        return {
            "core": str(self.gamma),
            "matrix": self.R.to_dict(),
            "weight": self.w,
            "members": [str(m) for m in self.members],
            "max": str(self.max_elem),
            "min": None if self.min_elem is None else str(self.min_elem),
        }


def _extreme(members, want: OrderRelation):
    """The unique member that is not beaten in direction ``want``, else None."""
    tops = [m for m in members if not any(dominance(o, m) == want for o in members)]
    return tops[0] if len(tops) == 1 else None


def family_members(gamma: Partition, R: RunnerMatrix, w: int) -> list[Partition]:
    from .oracle import enumerate_partitions

    n = Partition(gamma).size + w * R.e
    return [
        lam for lam in enumerate_partitions(n)
        if runner_matrix_of_partition(lam, R.d, R.e) == R and e_core_weight(beta_set(lam), R.e)[0] == gamma
    ]


def min_weight_and_family(gamma: Partition, R: RunnerMatrix) -> FamilyResult:
    """Enumerate E_R(gamma) by brute force, searching weights upwards."""
    gamma = _check_core_matrix(gamma, R)
    top = greedy_max(gamma, R)
    bound = (top.size - gamma.size) // R.e
    for w in range(bound + 1):
        members = family_members(gamma, R, w)
        if members:
            break
    else:
        raise PropertyViolation("family.greedy_member", {"gamma": str(gamma), "R": str(R)})
    max_elem = _extreme(members, OrderRelation.GREATER)
    if max_elem is None:
        raise PropertyViolation("family.unique_max", {"gamma": str(gamma), "R": str(R)})
    min_elem = None
    if R.every_row_has_zero():
        min_elem = _extreme(members, OrderRelation.LESS)
        if min_elem is None:
            raise PropertyViolation("family.unique_min", {"gamma": str(gamma), "R": str(R)})
    return FamilyResult(gamma, R, w, members, max_elem, min_elem)


def no_skewed_exists(R: RunnerMatrix, bound: int) -> bool:
    """Search all partitions of size <= bound for a d-skewed one with matrix R."""
    from .oracle import enumerate_partitions

    validate_de(R.d, R.e)
    if not R.has_positive_row():
        raise PreconditionError("the matrix has no row of positive entries")
    for n in range(bound + 1):
        for lam in enumerate_partitions(n):
            if runner_matrix_of_partition(lam, R.d, R.e) == R and classify_partition(lam, R.d, R.e).skewed:
                return False
    return True
