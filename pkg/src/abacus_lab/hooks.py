"""Balanced / skewed classification of e-divisible hooks by arm length mod d."""
from __future__ import annotations

from dataclasses import dataclass, field

from .abacus import BetaSet
from .errors import PreconditionError
from .partition import Partition, e_divisible_hooks, is_e_regular
from .runner import validate_de

FLAGS = ("balanced", "shift_balanced", "skewed", "shift_skewed")


@dataclass(frozen=True)
class HookClassReport:
    """One flag per class; ``witnesses[name]`` is a hook that breaks the class.

    Partition witnesses are ``(i, j, arm)``; beta-set witnesses are ``(b, a)``.
    """

    balanced: bool
    shift_balanced: bool
    skewed: bool
    shift_skewed: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (self.balanced, self.shift_balanced, self.skewed, self.shift_skewed)

    def to_dict(self) -> dict:
        out = {name: getattr(self, name) for name in FLAGS}
        out["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return out


def _report(items, d: int) -> HookClassReport:
    """items yields (witness, r) where r is the arm length (or its beta-set count)."""
    witnesses = {}
    for wit, r in items:
        if r % d:
            witnesses.setdefault("balanced", wit)
        else:
            witnesses.setdefault("skewed", wit)
        if (r + 1) % d:
            witnesses.setdefault("shift_balanced", wit)
        else:
            witnesses.setdefault("shift_skewed", wit)
    return HookClassReport(*(name not in witnesses for name in FLAGS), witnesses=witnesses)


def classify_partition(lam: Partition, d: int, e: int) -> HookClassReport:
    validate_de(d, e)
    return _report((((h.start[0], h.start[1], h.arm), h.arm) for h in e_divisible_hooks(lam, e)), d)


def divisible_hooks_of_beta_set(B: BetaSet, e: int):
    """Pairs (b, a) with b a bead, a > 0 and b - a*e empty."""
    for b in reversed(B.explicit):
        a = 1
        while b - a * e >= B.floor:
            if b - a * e not in B:
                yield b, a
            a += 1


def classify_beta_set(B: BetaSet, d: int, e: int) -> HookClassReport:
    validate_de(d, e)
    return _report((((b, a), B.emp_range(b - a * e + 1, b)) for b, a in divisible_hooks_of_beta_set(B, e)), d)


def regularity_from_balance(lam: Partition, d: int, e: int) -> bool:
    """For a d-balanced partition, report whether it is e-regular."""
    if not classify_partition(lam, d, e).balanced:
        raise PreconditionError(f"{lam} is not {d}-balanced for e={e}")
    return is_e_regular(lam, e)
