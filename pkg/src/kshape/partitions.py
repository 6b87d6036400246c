"""Integer partitions, cells, hooks, cores, and k-boundary profiles.

A partition is a trimmed tuple of weakly decreasing positive integers.
Cells are (row, col) pairs, 1-based, in French convention: row 1 is the
bottom row and rows grow upward, so "above" means larger row index.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]
Cell = tuple[int, int]


class SkewShape(NamedTuple):
    """A skew shape outer/inner; the fixed pair is retained, not just cells."""

    outer: Partition
    inner: Partition

    def cells(self) -> tuple[Cell, ...]:
        return skew_cells(self.outer, self.inner)

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize a weakly decreasing sequence into a partition tuple."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p!r}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; '' and '-' mean the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    return partition(int(t) for t in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "-"


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = [0] * lam[0]
    for part in lam:
        for j in range(part):
            out[j] += 1
    return tuple(out)


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff inner fits inside outer componentwise."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def cells(lam: Partition) -> Iterator[Cell]:
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield (i, j)


def cell_in(lam: Partition, cell: Cell) -> bool:
    i, j = cell
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def skew_cells(outer: Partition, inner: Partition) -> tuple[Cell, ...]:
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    out = []
    for i, part in enumerate(outer, start=1):
        lo = inner[i - 1] if i <= len(inner) else 0
        out.extend((i, j) for j in range(lo + 1, part + 1))
    return tuple(out)


def diag(cell: Cell) -> int:
    """Diagonal index col - row (negative below the main diagonal)."""
    return cell[1] - cell[0]


def arm(lam: Partition, cell: Cell) -> int:
    i, j = cell
    return lam[i - 1] - j


def leg(lam: Partition, cell: Cell) -> int:
    i, j = cell
    return conjugate(lam)[j - 1] - i


def hook_length(lam: Partition, cell: Cell) -> int:
    """Arm plus leg plus one of a cell of lam."""
    if not cell_in(lam, cell):
        raise ValueError(f"cell {cell} is outside {lam}")
    return arm(lam, cell) + leg(lam, cell) + 1


def is_p_core(lam: Partition, p: int) -> bool:
    """True iff no cell of lam has hook length exactly p."""
    if p < 2:
        raise ValueError(f"p must be at least 2: {p}")
    return all(hook_length(lam, b) != p for b in cells(lam))


@lru_cache(maxsize=None)
def k_interior(lam: Partition, k: int) -> Partition:
    """Subpartition of cells with hook length larger than k."""
    if k < 1:
        raise ValueError(f"k must be at least 1: {k}")
    # Hooks strictly decrease left to right within a row, so the interior
    # is a prefix of each row.
    rows = []
    for i in range(1, len(lam) + 1):
        width = 0
        for j in range(1, lam[i - 1] + 1):
            if hook_length(lam, (i, j)) > k:
                width = j
            else:
                break
        rows.append(width)
    return partition(rows)


def k_boundary(lam: Partition, k: int) -> SkewShape:
    """Skew shape of cells with hook length at most k."""
    return SkewShape(outer=lam, inner=k_interior(lam, k))


@lru_cache(maxsize=None)
def row_shape(lam: Partition, k: int) -> tuple[int, ...]:
    """Cells of the k-boundary per row, bottom-up; not always a partition."""
    interior = k_interior(lam, k)
    return tuple(
        lam[i] - (interior[i] if i < len(interior) else 0) for i in range(len(lam))
    )


def col_shape(lam: Partition, k: int) -> tuple[int, ...]:
    """Cells of the k-boundary per column, left to right."""
    return row_shape(conjugate(lam), k)


def boundary_size(lam: Partition, k: int) -> int:
    return sum(lam) - sum(k_interior(lam, k))


def residue(cell: Cell, k: int) -> int:
    """(col - row) mod (k+1), normalized to 0..k."""
    if k < 1:
        raise ValueError(f"k must be at least 1: {k}")
    return (cell[1] - cell[0]) % (k + 1)


def diag_count(lam: Partition, b1: Cell, b2: Cell, e: int, k: int) -> int:
    """Number of diagonals of residue e strictly between cells b1 and b2.

    b2 must be weakly below b1; the count ranges over diagonal indices
    strictly between diag(b1) and diag(b2), exclusive at both ends.  The
    partition is taken only to keep call sites explicit about which
    (k+1)-core's cells are in play.
    """
    if not 0 <= e <= k:
        raise ValueError(f"residue {e} out of range 0..{k}")
    if b2[0] > b1[0]:
        raise ValueError(f"{b2} is above {b1}")
    lo, hi = sorted((diag(b1), diag(b2)))
    m = k + 1
    # count d with lo < d < hi and d == e (mod m)
    return (hi - 1 - e) // m - (lo - e) // m if hi - lo > 1 else 0


@lru_cache(maxsize=None)
def addable_corners(lam: Partition) -> tuple[Cell, ...]:
    """Cells whose addition keeps a partition, sorted bottom-up."""
    out = []
    for i in range(1, len(lam) + 2):
        j = lam[i - 1] + 1 if i <= len(lam) else 1
        if i == 1 or j <= lam[i - 2]:
            out.append((i, j))
    return tuple(out)


@lru_cache(maxsize=None)
def removable_corners(lam: Partition) -> tuple[Cell, ...]:
    """Cells whose removal keeps a partition, sorted bottom-up."""
    out = []
    for i in range(1, len(lam) + 1):
        if i == len(lam) or lam[i] < lam[i - 1]:
            out.append((i, lam[i - 1]))
    return tuple(out)


def corners(lam: Partition) -> tuple[tuple[Cell, ...], tuple[Cell, ...]]:
    return addable_corners(lam), removable_corners(lam)


def add_cells(lam: Partition, new: Iterable[Cell]) -> Partition:
    """Add a set of cells to lam; the result must be a partition shape."""
    rows = list(lam)
    by_row: dict[int, list[int]] = {}
    for i, j in new:
        by_row.setdefault(i, []).append(j)
    for i, js in by_row.items():
        while len(rows) < i:
            rows.append(0)
        js.sort()
        for j in js:
            if j != rows[i - 1] + 1:
                raise ValueError(f"cell ({i},{j}) does not extend row of length {rows[i - 1]}")
            rows[i - 1] = j
    return partition(rows)


def remove_cells(lam: Partition, old: Iterable[Cell]) -> Partition:
    rows = list(lam)
    by_row: dict[int, list[int]] = {}
    for i, j in old:
        by_row.setdefault(i, []).append(j)
    for i, js in by_row.items():
        js.sort(reverse=True)
        for j in js:
            if i > len(rows) or rows[i - 1] != j:
                raise ValueError(f"cell ({i},{j}) is not at the end of a row of {lam}")
            rows[i - 1] = j - 1
    return partition(rows)


def union_shape(a: Partition, b: Partition) -> Partition:
    """Componentwise max; its cells are exactly cells(a) | cells(b)."""
    n = max(len(a), len(b))
    return partition(
        max(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)
    )


def partition_sum(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    return partition(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def partition_union(a: Partition, b: Partition) -> Partition:
    """Reorder the concatenation of the parts."""
    return partition(sorted(a + b, reverse=True))


def dominates(a: Partition, b: Partition) -> bool:
    """Dominance order: equal degree and prefix sums of a weakly above b's."""
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_in_box(max_len: int, max_part: int) -> Iterator[Partition]:
    """All partitions with at most max_len rows, each at most max_part."""

    def rec(rows_left: int, cap: int) -> Iterator[Partition]:
        yield ()
        if rows_left == 0:
            return
        for first in range(cap, 0, -1):
            for rest in rec(rows_left - 1, first):
                yield (first,) + rest

    yield from rec(max_len, max_part)
