"""Partitions, Young diagrams, rim hooks, orders and the rim-removal map J.

Rows and columns are 1-indexed; a cell is a pair ``(row, column)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate, zip_longest

from .errors import PreconditionError, ValidationError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        try:
            parts = [int(p) for p in parts]
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"not a sequence of integers: {parts!r}") from exc
        while parts and parts[-1] == 0:
            parts.pop()
        for k, p in enumerate(parts):
            if p <= 0:
                raise ValidationError(f"parts must be positive: {parts}")
            if k and p > parts[k - 1]:
                raise ValidationError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> frozenset:
        return frozenset((i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1))

    def __contains__(self, cell) -> bool:  # type: ignore[override]
        if isinstance(cell, tuple) and len(cell) == 2:
            i, j = cell
            return 1 <= i <= len(self) and 1 <= j <= self[i - 1]
        return super().__contains__(cell)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def parse_partition(text: str) -> Partition:
    """Parse ``6,4,2``; ``-`` is the empty partition and ``1^3`` means ``1,1,1``."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        base, _, power = token.partition("^")
        try:
            value = int(base)
            count = int(power) if power else 1
        except ValueError:
            raise ValidationError(f"bad partition token {token!r}") from None
        if count < 0:
            raise ValidationError(f"bad exponent in {token!r}")
        parts.extend([value] * count)
    return Partition(parts)


def from_cells(cells) -> Partition:
    """Rebuild a partition from a set of cells, checking it is a Young diagram."""
    cells = set(cells)
    rows: dict[int, int] = {}
    for i, _ in cells:
        rows[i] = rows.get(i, 0) + 1
    lam = Partition([rows.get(i, 0) for i in range(1, max(rows, default=0) + 1)])
    if lam.cells() != cells:
        raise ValidationError("cells do not form a Young diagram")
    return lam


def conjugate(lam: Partition) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition([sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)])


def is_e_regular(lam: Partition, e: int) -> bool:
    """No part repeated e or more times."""
    run = 0
    for k, p in enumerate(lam):
        run = run + 1 if k and p == lam[k - 1] else 1
        if run >= e:
            return False
    return True


@dataclass(frozen=True)
class RimHook:
    start: tuple[int, int]
    cells: frozenset
    arm: int
    leg: int
    top: int
    bottom: int

    @property
    def size(self) -> int:
        return len(self.cells)


def rim_hook(lam: Partition, i: int, j: int) -> RimHook:
    lam = Partition(lam)
    if (i, j) not in lam:
        raise ValidationError(f"cell {(i, j)} is outside the diagram of {lam}")
    col = conjugate(lam)
    cells = frozenset(
        (r, c)
        for r in range(i, col[j - 1] + 1)
        for c in range(j, lam[r - 1] + 1)
        if (r + 1, c + 1) not in lam
    )
    return RimHook((i, j), cells, lam[i - 1] - j, col[j - 1] - i, i, col[j - 1])


def hook_length(lam: Partition, i: int, j: int, col: Partition | None = None) -> int:
    col = conjugate(lam) if col is None else col
    return lam[i - 1] - j + col[j - 1] - i + 1


def e_divisible_hooks(lam: Partition, e: int) -> list[RimHook]:
    """All rim hooks whose size is a multiple of e, in row-major order of their start cell."""
    lam = Partition(lam)
    col = conjugate(lam)
    return [
        rim_hook(lam, i, j)
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
        if hook_length(lam, i, j, col) % e == 0
    ]


def remove_rim_hook(lam: Partition, hook: RimHook) -> Partition:
    if not hook.cells <= Partition(lam).cells():
        raise ValidationError("hook is not contained in the diagram")
    return from_cells(Partition(lam).cells() - hook.cells)


def _rim_path(lam: Partition) -> list[tuple[int, int]]:
    # top-right to bottom-left
    path = []
    for i in range(1, len(lam) + 1):
        low = max(lam.part(i + 1), 1)
        path.extend((i, j) for j in range(lam[i - 1], low - 1, -1))
    return path


def _e_rim_pieces(lam: Partition, e: int) -> tuple[list[list[tuple[int, int]]], bool]:
    """Split the e-rim into maximal hooks; also report whether the last piece is e-divisible."""
    path = _rim_path(lam)
    row_start = {}
    for k, (i, _) in enumerate(path):
        row_start.setdefault(i, k)
    pieces: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] = []
    pos = 0
    last_divisible = True
    while pos < len(path):
        chunk = path[pos:pos + e]
        current.extend(chunk)
        if len(chunk) < e:
            pieces.append(current)
            last_divisible = False
            break
        r, c = chunk[-1]
        if r == len(lam):
            pieces.append(current)
            break
        if c > lam.part(r + 1):
            pieces.append(current)
            current = []
        pos = row_start[r + 1]
    return pieces, last_divisible


def _nonempty(lam: Partition) -> Partition:
    lam = Partition(lam)
    if not lam:
        raise PreconditionError("the e-rim of the empty partition is undefined")
    return lam


def e_rim(lam: Partition, e: int) -> frozenset:
    pieces, _ = _e_rim_pieces(_nonempty(lam), e)
    return frozenset(c for piece in pieces for c in piece)


def proper_e_rim(lam: Partition, e: int) -> frozenset:
    pieces, last_divisible = _e_rim_pieces(_nonempty(lam), e)
    if not last_divisible:
        pieces = pieces[:-1]
    return frozenset(c for piece in pieces for c in piece)


def j_map(lam: Partition, e: int) -> Partition:
    """Remove the e-rim, then add one box to every row except possibly the last.

    The last row gets its box back only when the whole e-rim is a union of
    e-divisible hooks.
    """
    lam = Partition(lam)
    if not lam:
        return lam
    pieces, last_divisible = _e_rim_pieces(lam, e)
    removed = [0] * len(lam)
    for piece in pieces:
        for i, _ in piece:
            removed[i - 1] += 1
    parts = [p - r + 1 for p, r in zip(lam, removed)]
    if not last_divisible:
        parts[-1] -= 1
    try:
        return Partition(parts)
    except ValidationError:
        raise ValidationError(f"J of {lam} with e={e} is not a partition: {parts}") from None


class OrderRelation(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _prefix(lam):
    return list(accumulate(lam))


def dominance(mu: Partition, lam: Partition) -> OrderRelation:
    """Compare mu against lam in the dominance order."""
    if sum(mu) != sum(lam):
        raise ValidationError(f"dominance needs equal sizes: {mu} vs {lam}")
    if tuple(mu) == tuple(lam):
        return OrderRelation.EQUAL
    below = above = True
    for a, b in zip_longest(_prefix(mu), _prefix(lam), fillvalue=sum(mu)):
        if a > b:
            below = False
        if a < b:
            above = False
    if below:
        return OrderRelation.LESS
    if above:
        return OrderRelation.GREATER
    return OrderRelation.INCOMPARABLE


def lex_compare(mu: Partition, lam: Partition) -> OrderRelation:
    a, b = tuple(mu), tuple(lam)
    if a == b:
        return OrderRelation.EQUAL
    return OrderRelation.LESS if a < b else OrderRelation.GREATER
