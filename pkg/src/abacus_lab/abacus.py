"""Beta-sets on the James abacus.

A ``BetaSet`` is a set of integers containing every integer below ``floor``
plus finitely many explicit beads at or above it. Position ``b`` sits on
runner ``b % e`` in row ``b // e``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import comb

from .errors import PropertyViolation, ValidationError
from .partition import Partition


@dataclass(frozen=True, eq=False)
class BetaSet:
    floor: int
    explicit: tuple[int, ...] = ()

    def __post_init__(self):
        beads = tuple(sorted(set(int(b) for b in self.explicit)))
        if beads and beads[0] < self.floor:
            raise ValidationError(f"explicit beads must be >= floor {self.floor}: {beads[0]}")
        object.__setattr__(self, "floor", int(self.floor))
        object.__setattr__(self, "explicit", beads)

    @classmethod
    def from_beads(cls, beads, floor: int) -> "BetaSet":
        """Beads given as any iterable; those below ``floor`` are absorbed."""
        return cls(floor, tuple(b for b in set(beads) if b >= floor))

    def normalized(self) -> "BetaSet":
        floor, beads = self.floor, list(self.explicit)
        k = 0
        while k < len(beads) and beads[k] == floor:
            floor += 1
            k += 1
        return BetaSet(floor, tuple(beads[k:]))

    def rewindow(self, new_floor: int) -> "BetaSet":
        """Same set, stored with a lower floor."""
        if new_floor > self.floor:
            missing = [v for v in range(self.floor, new_floor) if v not in self]
            if missing:
                raise ValidationError(f"cannot raise floor past empty position {missing[0]}")
            return BetaSet(new_floor, tuple(b for b in self.explicit if b >= new_floor))
        return BetaSet(new_floor, tuple(range(new_floor, self.floor)) + self.explicit)

    def __contains__(self, v: int) -> bool:
        if v < self.floor:
            return True
        k = bisect_left(self.explicit, v)
        return k < len(self.explicit) and self.explicit[k] == v

    def __eq__(self, other) -> bool:
        if not isinstance(other, BetaSet):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.floor == b.floor and a.explicit == b.explicit

    def __hash__(self) -> int:
        n = self.normalized()
        return hash((n.floor, n.explicit))

    def __repr__(self) -> str:
        return f"BetaSet(floor={self.floor}, explicit={self.explicit})"

    def __str__(self) -> str:
        return format_beta_set(self)

    @property
    def shift(self) -> int:
        """The s with self == B_s(partition)."""
        return self.floor + len(self.explicit)

    @property
    def max(self) -> int:
        return self.explicit[-1] if self.explicit else self.floor - 1

    def is_empty_partition(self) -> bool:
        return not self.normalized().explicit

    def beads_desc(self):
        """Every bead, largest first (infinite)."""
        yield from reversed(self.explicit)
        v = self.floor - 1
        while True:
            yield v
            v -= 1

    def bd(self, u: int, v: int) -> int:
        if v < u:
            return 0
        solid = max(0, min(v, self.floor - 1) - u + 1)
        return solid + bisect_right(self.explicit, v) - bisect_left(self.explicit, u)

    def emp_range(self, u: int, v: int) -> int:
        if v < u:
            return 0
        return v - u + 1 - self.bd(u, v)

    def emp(self, v: int) -> int:
        """Number of empty positions <= v."""
        return self.emp_range(self.floor, v)

    def translate(self, k: int) -> "BetaSet":
        return BetaSet(self.floor + k, tuple(b + k for b in self.explicit))

    def with_moves(self, remove=(), add=()) -> "BetaSet":
        low = min([self.floor, *remove, *add])
        beads = set(self.rewindow(low).explicit)
        for v in remove:
            if v not in beads:
                raise ValidationError(f"no bead at {v}")
            beads.discard(v)
        for v in add:
            if v in beads:
                raise ValidationError(f"position {v} already holds a bead")
            beads.add(v)
        return BetaSet(low, tuple(beads)).normalized()


def beta_set(lam: Partition, s: int = 0) -> BetaSet:
    """B_s(lam) = {lam_i - i + s}."""
    lam = Partition(lam)
    return BetaSet(s - len(lam), tuple(p - i + s for i, p in enumerate(lam, 1)))


def partition_of(B: BetaSet) -> tuple[Partition, int]:
    """Recover (lam, s) with B == B_s(lam)."""
    parts = [b - B.floor - k for k, b in enumerate(B.explicit)]
    return Partition(sorted(parts, reverse=True)), B.shift


def bd(B: BetaSet, u: int, v: int) -> int:
    return B.bd(u, v)


def emp_range(B: BetaSet, u: int, v: int) -> int:
    return B.emp_range(u, v)


def emp(B: BetaSet, v: int) -> int:
    return B.emp(v)


def size_of(B: BetaSet) -> int:
    """Size of the underlying partition, computed two ways and cross-checked."""
    by_empties = sum(B.emp(b) for b in B.explicit)
    # translate so that every non-positive integer is a bead
    T = B.translate(max(0, 1 - B.floor))
    nonneg = list(range(0, T.floor)) + list(T.explicit)
    by_sum = sum(nonneg) - comb(len(nonneg), 2)
    if by_empties != by_sum:
        raise PropertyViolation("size_formula", {"beta_set": str(B), "values": (by_empties, by_sum)})
    return by_empties


def _check_e(e: int):
    if not isinstance(e, int) or e < 2:
        raise ValidationError(f"e must be an integer >= 2, got {e!r}")


def _runner_counts(B: BetaSet, e: int, low: int) -> list[int]:
    counts = [0] * e
    for v in range(low, B.floor):
        counts[v % e] += 1
    for b in B.explicit:
        counts[b % e] += 1
    return counts


def e_core_weight(B: BetaSet, e: int) -> tuple[Partition, int]:
    """Slide every bead up its runner; return (core, weight)."""
    _check_e(e)
    low = B.floor - B.floor % e
    counts = _runner_counts(B, e, low)
    slid = [low + r + k * e for r in range(e) for k in range(counts[r])]
    total = sum(range(low, B.floor)) + sum(B.explicit)
    weight, rem = divmod(total - sum(slid), e)
    assert rem == 0
    core, _ = partition_of(BetaSet(low, tuple(slid)))
    return core, weight


def e_core(lam: Partition, e: int) -> Partition:
    return e_core_weight(beta_set(lam), e)[0]


def slide_up(B: BetaSet, b: int, e: int) -> BetaSet:
    """Move the bead at b to b - e; b - e must be empty."""
    if b not in B or b - e in B:
        raise ValidationError(f"cannot slide bead {b} up by {e}")
    return B.with_moves(remove=[b], add=[b - e])


def same_core(B1: BetaSet, B2: BetaSet, e: int) -> bool:
    _check_e(e)
    if B1.shift != B2.shift:
        raise ValidationError(f"shift mismatch: {B1.shift} vs {B2.shift}")
    low = min(B1.floor, B2.floor)
    low -= low % e
    return _runner_counts(B1, e, low) == _runner_counts(B2, e, low)


def format_beta_set(B: BetaSet) -> str:
    """``floor=F; beads=...`` where every integer <= F is a bead."""
    n = B.normalized()
    return f"floor={n.floor - 1}; beads={','.join(map(str, reversed(n.explicit)))}"


def parse_beta_set(text: str) -> BetaSet:
    fields = {}
    for item in text.split(";"):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValidationError(f"bad beta-set field {item!r}")
        fields[key.strip()] = value.strip()
    if set(fields) != {"floor", "beads"}:
        raise ValidationError(f"beta-set needs floor and beads, got {sorted(fields)}")
    try:
        top = int(fields["floor"])
        beads = [int(x) for x in fields["beads"].split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"bad beta-set {text!r}") from None
    if any(b <= top for b in beads):
        raise ValidationError("explicit beads must lie above the floor")
    if len(set(beads)) != len(beads):
        raise ValidationError("repeated bead")
    return BetaSet(top + 1, tuple(beads))


def render_abacus(B: BetaSet, e: int, marks=(), rows: tuple[int, int] | None = None) -> str:
    """ASCII abacus: one line per row, smallest row on top.

    ``o`` is a bead, ``.`` an empty position and ``#`` a bead listed in ``marks``.
    """
    _check_e(e)
    marks = set(marks)
    if rows is None:
        top = max([B.max, *marks]) // e
        bottom = (B.floor - 1) // e - 1
        rows = (bottom, top)
    lines = []
    for r in range(rows[0], rows[1] + 1):
        cells = []
        for y in range(e):
            v = r * e + y
            cells.append("#" if v in marks else "o" if v in B else ".")
        lines.append(" ".join(cells))
    return "\n".join(lines)
