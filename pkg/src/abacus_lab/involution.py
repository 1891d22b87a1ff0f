"""Leading beads, the Ms move, the abacus Mullineux algorithm and the J-map recursion."""
from __future__ import annotations

from dataclasses import dataclass, field

from .abacus import BetaSet, beta_set, partition_of
from .errors import PreconditionError, PropertyViolation
from .partition import Partition, conjugate, is_e_regular, j_map


@dataclass(frozen=True)
class LeadingBeads:
    """b_0 > b_1 > ... up to the stable index z, plus one confirming bead."""

    beads: tuple[int, ...]
    z: int
    e: int

    @property
    def hat(self) -> int:
        return self.beads[self.z] + self.z * self.e


def leading_beads(B: BetaSet, e: int) -> LeadingBeads:
    seq = [B.max]
    # once b - e falls below the floor every later step is exactly -e
    while seq[-1] - e >= B.floor:
        nxt = seq[-1] - e
        while nxt not in B:
            nxt -= 1
        seq.append(nxt)
    seq.append(seq[-1] - e)
    z = len(seq) - 1
    while z > 0 and seq[z - 1] - e == seq[z]:
        z -= 1
    return LeadingBeads(tuple(seq[:z + 2]), z, e)


def ms(B: BetaSet, e: int) -> int:
    """The value b_z + z*e for the stable index z."""
    return leading_beads(B, e).hat


def Ms(B: BetaSet, e: int) -> BetaSet:
    """Move each leading bead b_0..b_{z-1} up one row and drop b_z."""
    lead = leading_beads(B, e)
    moved = lead.beads[:lead.z]
    return B.with_moves(remove=lead.beads[:lead.z + 1], add=[b - e for b in moved])


def proper_rim_removal_via_abacus(B: BetaSet, e: int) -> Partition:
    """Partition left after taking the proper e-rim off the partition of B."""
    lead = leading_beads(B, e)
    lam, _ = partition_of(Ms(B, e).with_moves(add=[lead.beads[lead.z]]))
    return lam


@dataclass
class AmaTrace:
    """``states`` lists (S, T) before each step including the final one;
    ``emitted`` lists the hats in order."""

    states: list = field(default_factory=list)
    emitted: list = field(default_factory=list)
    final_T: BetaSet | None = None
    pair_checks: list = field(default_factory=list)
    combined_matrices: list = field(default_factory=list)

    @property
    def result(self) -> Partition:
        return partition_of(self.final_T)[0]


def _require_regular(lam: Partition, e: int):
    if not is_e_regular(lam, e):
        raise PreconditionError(f"{lam} is not {e}-regular")


def ama_trace(lam: Partition, e: int, d: int | None = None) -> AmaTrace:
    """Run the algorithm from the canonical beta-set, keeping every state.

    With ``d`` given, each state (S, T) is also checked as a d-combined pair and
    its combined runner matrix is recorded.
    """
    from .runner import CombinedPair, combined_runner_matrix, is_d_combined_pair

    lam = Partition(lam)
    _require_regular(lam, e)
    trace = AmaTrace()
    S, T = beta_set(lam), []
    while True:
        trace.states.append((S, tuple(T)))
        if d is not None:
            P = CombinedPair(S, tuple(T))
            trace.pair_checks.append(is_d_combined_pair(P, d, e))
            trace.combined_matrices.append(combined_runner_matrix(P, d, e))
        if S.is_empty_partition():
            break
        if len(T) >= max(lam.size, 1):
            # one emission per part of the output, which has size |lam|
            raise PropertyViolation("ama.terminates", {"lambda": str(lam), "e": e, "steps": len(T)})
        hat = ms(S, e)
        if T and hat >= T[-1]:
            raise PropertyViolation("ama.hats_decrease", {"lambda": str(lam), "e": e, "hats": T + [hat]})
        T.append(hat)
        trace.emitted.append(hat)
        S = Ms(S, e)
    if any(t in S for t in T):
        raise PropertyViolation("ama.final_disjoint", {"lambda": str(lam), "e": e})
    trace.final_T = S.with_moves(add=T)
    if trace.final_T.shift != 0:
        raise PropertyViolation("ama.canonical_output", {"lambda": str(lam), "e": e})
    return trace


def ama(lam: Partition, e: int) -> Partition:
    """m_e(lam)' computed on the abacus."""
    return ama_trace(lam, e).result


def mullineux(lam: Partition, e: int) -> Partition:
    return conjugate(ama(lam, e))


def xu_recursive(lam: Partition, e: int) -> Partition:
    """m_e(lam)' from the J map: parts are the successive size drops."""
    lam = Partition(lam)
    _require_regular(lam, e)
    parts = []
    while lam:
        nxt = j_map(lam, e)
        parts.append(lam.size - nxt.size)
        lam = nxt
    try:
        return Partition(parts)
    except ValueError:
        raise PropertyViolation("xu.parts_decrease", {"parts": parts, "e": e}) from None
