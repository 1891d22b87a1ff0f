"""d-runner matrices of partitions, beta-sets and combined pairs."""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .abacus import BetaSet
from .errors import ValidationError
from .partition import Partition


def validate_de(d: int, e: int) -> None:
    if not (isinstance(d, int) and isinstance(e, int)):
        raise ValidationError(f"d and e must be integers, got {d!r}, {e!r}")
    if e <= 2 or not 1 < d < e or gcd(d, e) != 1:
        raise ValidationError(f"need e > 2, 1 < d < e and gcd(d, e) = 1; got d={d}, e={e}")


@dataclass(frozen=True)
class RunnerMatrix:
    """Rows indexed by residues x = 1..d-1, columns by runners y = 0..e-1."""

    d: int
    e: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if len(rows) != self.d - 1 or any(len(row) != self.e for row in rows):
            raise ValidationError(f"matrix must be {self.d - 1} x {self.e}")
        if any(v < 0 for row in rows for v in row):
            raise ValidationError("matrix entries must be non-negative")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zeros(cls, d: int, e: int) -> "RunnerMatrix":
        return cls(d, e, ((0,) * e,) * (d - 1))

    def entry(self, x: int, y: int) -> int:
        return self.rows[x - 1][y]

    @property
    def total(self) -> int:
        return sum(map(sum, self.rows))

    def row_has_zero(self, x: int) -> bool:
        return 0 in self.rows[x - 1]

    def every_row_has_zero(self) -> bool:
        return all(0 in row for row in self.rows)

    def has_positive_row(self) -> bool:
        return any(0 not in row for row in self.rows)

    def rotated(self, s: int) -> "RunnerMatrix":
        """Entry (x, y) of the result is entry (x, y + s) of self."""
        return RunnerMatrix(self.d, self.e, tuple(
            tuple(row[(y + s) % self.e] for y in range(self.e)) for row in self.rows))

    def to_dict(self) -> dict:
        return {"d": self.d, "e": self.e, "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str, d: int | None = None, e: int | None = None) -> "RunnerMatrix":
        """Accept the full object form or a bare list of rows (then d and e are required)."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"bad matrix JSON: {exc}") from None
        if isinstance(data, list):
            if e is None:
                raise ValidationError("bare matrix rows need e")
            d = len(data) + 1 if d is None else d
            data = {"d": d, "e": e, "rows": data}
        if not isinstance(data, dict) or set(data) != {"d", "e", "rows"}:
            raise ValidationError("matrix JSON needs keys d, e, rows")
        if (d is not None and data["d"] != d) or (e is not None and data["e"] != e):
            raise ValidationError("matrix d/e disagree with the requested d/e")
        return cls(data["d"], data["e"], tuple(tuple(r) for r in data["rows"]))

    def __str__(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))


def _build(d: int, e: int, pairs) -> RunnerMatrix:
    counts = [[0] * e for _ in range(d - 1)]
    for x, y in pairs:
        if x % d:
            counts[x % d - 1][y % e] += 1
    return RunnerMatrix(d, e, tuple(map(tuple, counts)))


def runner_matrix_of_partition(lam: Partition, d: int, e: int) -> RunnerMatrix:
    validate_de(d, e)
    return _build(d, e, ((p, p - i) for i, p in enumerate(Partition(lam), 1)))


def runner_matrix_of_beta_set(B: BetaSet, d: int, e: int) -> RunnerMatrix:
    validate_de(d, e)
    # beads below the floor have no empty position beneath them
    return _build(d, e, ((B.emp(b), b) for b in B.explicit))


@dataclass(frozen=True)
class CombinedPair:
    B: BetaSet
    C: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "C", tuple(sorted(set(self.C))))

    def is_well_formed(self) -> bool:
        return not self.C or self.B.max <= self.C[0]

    def bd_C(self, u: int, v: int) -> int:
        return sum(1 for c in self.C if u <= c <= v)

    def emp_range(self, u: int, v: int) -> int:
        return self.B.emp_range(u, v) - self.bd_C(u, v)

    def emp(self, v: int) -> int:
        return self.B.emp(v) - sum(1 for c in self.C if c <= v)

    def is_empty_space(self, f: int) -> bool:
        return f not in self.B and f not in self.C


def combined_runner_matrix(P: CombinedPair, d: int, e: int) -> RunnerMatrix:
    validate_de(d, e)
    pairs = [(P.B.emp(b), b) for b in P.B.explicit]
    pairs += [(P.emp(c), c) for c in P.C]
    return _build(d, e, pairs)


def admissible(f: int, P: CombinedPair, e: int) -> bool:
    """An empty space is inadmissible only when it is the sole gap of B on the
    ladder max(B), max(B) - e, ... and max(B) is also in C."""
    if not P.is_empty_space(f):
        raise ValidationError(f"{f} is not an empty space of the pair")
    b0 = P.B.max
    if b0 not in P.C or f > b0 or (b0 - f) % e:
        return True
    gaps = [v for v in range(b0, P.B.floor - 1, -e) if v not in P.B]
    return gaps != [f]


def is_d_combined_pair(P: CombinedPair, d: int, e: int) -> bool:
    from .hooks import classify_beta_set

    validate_de(d, e)
    if not P.is_well_formed():
        return False
    if not classify_beta_set(P.B, d, e).balanced:
        return False
    for c in P.C:
        f = c - e
        while f >= P.B.floor:
            if P.is_empty_space(f) and admissible(f, P, e) and P.emp_range(f, c) % d:
                return False
            f -= e
    return True
