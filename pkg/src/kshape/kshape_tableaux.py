"""Covers between k-shapes, k-connected rows, and charge/cocharge of
standard k-shape tableaux.

A cover is a cover-type string joining two k-shapes.  Chains of covers
are the k-shape tableaux; reverse-maximal chains ending at (k+1)-cores
are exactly the standard k-tableaux and maximal chains the standard
(k-1)-tableaux.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import IntegrityError
from .partitions import (
    Cell,
    Partition,
    add_cells,
    addable_corners,
    diag,
    is_p_core,
    k_interior,
    removable_corners,
    skew_cells,
)
from .poset import COVER, StringOfCells, classify_string, corner_chains, is_k_shape


@dataclass(frozen=True)
class Cover:
    """A cover-type string between two k-shapes."""

    inner: Partition
    outer: Partition
    string: StringOfCells

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self.string.cells

    def __len__(self) -> int:
        return len(self.string.cells)


def make_cover(inner: Partition, outer: Partition, k: int) -> Cover:
    if not (is_k_shape(inner, k) and is_k_shape(outer, k)):
        raise ValueError(f"{inner} -> {outer} does not join {k}-shapes")
    s = classify_string(inner, outer, k)
    if s is None or s.kind != COVER:
        raise ValueError(f"{outer}/{inner} is not a cover-type string")
    return Cover(inner=inner, outer=outer, string=s)


class CoverStatus(NamedTuple):
    continues_below: bool
    continues_above: bool
    reverse_below: bool
    reverse_above: bool
    maximal: bool
    reverse_maximal: bool


def _corner_at_diags(corners, diags) -> Cell | None:
    for c in corners:
        if diag(c) in diags:
            return c
    return None


def cover_status(c: Cover, k: int) -> CoverStatus:
    """Continuation flags of a cover.

    A cover continues below (above) when the inner shape has an addable
    corner contiguous to the bottom (top) cell of the string; reverse
    continuation asks for a removable corner of the outer shape instead.
    """
    bot, top = c.string.bottom, c.string.top
    add = addable_corners(c.inner)
    rem = removable_corners(c.outer)
    below = _corner_at_diags(add, {diag(bot) + k, diag(bot) + k + 1})
    above = _corner_at_diags(add, {diag(top) - k, diag(top) - k - 1})
    rbelow = _corner_at_diags(rem, {diag(bot) + k, diag(bot) + k + 1})
    rabove = _corner_at_diags(rem, {diag(top) - k, diag(top) - k - 1})
    return CoverStatus(
        continues_below=below is not None,
        continues_above=above is not None,
        reverse_below=rbelow is not None,
        reverse_above=rabove is not None,
        maximal=below is None and above is None,
        reverse_maximal=rbelow is None and rabove is None,
    )


@lru_cache(maxsize=None)
def enumerate_covers(lam: Partition, k: int) -> tuple[Cover, ...]:
    """All covers with the given inner k-shape."""
    if not is_k_shape(lam, k):
        raise ValueError(f"{lam} is not a {k}-shape")
    out = []
    for chain in corner_chains(lam, k):
        outer = add_cells(lam, chain)
        if not is_k_shape(outer, k):
            continue
        s = classify_string(lam, outer, k)
        if s is not None and s.kind == COVER:
            out.append(Cover(inner=lam, outer=outer, string=s))
    return tuple(sorted(out, key=lambda c: c.string.top))


@dataclass(frozen=True)
class KShapeTableau:
    k: int
    chain: tuple[Partition, ...]

    @property
    def shape(self) -> Partition:
        return self.chain[-1]

    @property
    def letters(self) -> int:
        return len(self.chain) - 1

    def cover(self, n: int) -> Cover:
        return make_cover(self.chain[n - 1], self.chain[n], self.k)

    def cells_of_letter(self, n: int) -> tuple[Cell, ...]:
        return skew_cells(self.chain[n], self.chain[n - 1])

    def up(self, n: int) -> Cell:
        return max(self.cells_of_letter(n), key=lambda c: c[0])

    def down(self, n: int) -> Cell:
        return min(self.cells_of_letter(n), key=lambda c: c[0])

    def filling(self) -> tuple[tuple[int, ...], ...]:
        shape = self.shape
        grid = [[0] * shape[i] for i in range(len(shape))]
        for n in range(1, self.letters + 1):
            for (i, j) in self.cells_of_letter(n):
                grid[i - 1][j - 1] = n
        return tuple(tuple(r) for r in grid)

    def text(self) -> str:
        return " / ".join(" ".join(str(x) for x in row) for row in self.filling())


def make_kshape_tableau(k: int, chain: Sequence[Partition]) -> KShapeTableau:
    chain = tuple(tuple(c) for c in chain)
    if not chain or chain[0] != ():
        raise ValueError("chain must start at the empty partition")
    for inner, outer in zip(chain, chain[1:]):
        make_cover(inner, outer, k)  # raises when a step is not a cover
    return KShapeTableau(k=k, chain=chain)


def kshape_tableau_from_filling(k: int, rows: Sequence[Sequence[int]]) -> KShapeTableau:
    rows = [list(r) for r in rows if r]
    if not rows:
        return make_kshape_tableau(k, [()])
    n = max(max(r) for r in rows)
    chain = [()]
    for letter in range(1, n + 1):
        widths = [sum(1 for x in r if 0 < x <= letter) for r in rows]
        chain.append(tuple(w for w in widths if w))
    return make_kshape_tableau(k, chain)


def chain_characterization(chain: Sequence[Partition], k: int) -> tuple[bool, bool]:
    """(is k-tableau, is (k-1)-tableau) for a chain of covers.

    The chain is a standard k-tableau iff it ends at a (k+1)-core and
    every cover is reverse-maximal; it is a standard (k-1)-tableau iff
    every cover is maximal.
    """
    chain = tuple(tuple(c) for c in chain)
    statuses = []
    for inner, outer in zip(chain, chain[1:]):
        statuses.append(cover_status(make_cover(inner, outer, k), k))
    is_k = is_p_core(chain[-1], k + 1) and all(s.reverse_maximal for s in statuses)
    is_km1 = all(s.maximal for s in statuses)
    return is_k, is_km1


def enumerate_kshape_tableaux(n: int, k: int) -> Iterator[KShapeTableau]:
    """All standard k-shape tableaux on n letters."""

    def rec(chain: list[Partition]):
        if len(chain) == n + 1:
            yield KShapeTableau(k=k, chain=tuple(chain))
            return
        for c in enumerate_covers(chain[-1], k):
            chain.append(c.outer)
            yield from rec(chain)
            chain.pop()

    yield from rec([()])


# ---------------------------------------------------------------------------
# k-connected rows


@dataclass(frozen=True)
class ConnectedRowStructure:
    """Successor map of k-connected rows of a k-shape.

    Rows are those carrying an addable corner.  The successor of row r is
    the lowest such row whose corner is within diagonal distance k+1;
    the pair is contiguous when the distance is exactly k or k+1.
    """

    lam: Partition
    k: int
    rows: tuple[int, ...]
    successor: dict[int, int]
    contiguous: frozenset[tuple[int, int]]

    def chain_from(self, r: int) -> tuple[int, ...]:
        out = [r]
        while out[-1] in self.successor:
            out.append(self.successor[out[-1]])
        return tuple(out)


@lru_cache(maxsize=None)
def connected_rows(lam: Partition, k: int) -> ConnectedRowStructure:
    corners = {c[0]: c for c in addable_corners(lam)}
    rows = tuple(sorted(corners))
    succ: dict[int, int] = {}
    contig = set()
    for r in rows:
        below = [
            r2
            for r2 in rows
            if r2 < r and abs(diag(corners[r]) - diag(corners[r2])) <= k + 1
        ]
        if below:
            r2 = min(below)
            succ[r] = r2
            if abs(diag(corners[r]) - diag(corners[r2])) in (k, k + 1):
                contig.add((r, r2))
    return ConnectedRowStructure(
        lam=lam, k=k, rows=rows, successor=succ, contiguous=frozenset(contig)
    )


def _interval(lam: Partition, k: int, r: int, rp: int, closed_left: bool, closed_right: bool) -> int:
    """Length of the longest k-connected row sequence from r staying >= rp,
    not counting the endpoint rows excluded by the open sides."""
    structure = connected_rows(lam, k)
    if r not in structure.rows:
        raise IntegrityError(f"row {r} of {lam} has no addable corner")
    chain = structure.chain_from(r)
    count = 0
    for idx, row in enumerate(chain):
        if row < rp:
            break
        if idx == 0 and not closed_left:
            continue
        if row == rp and not closed_right:
            continue
        count += 1
    return count


def interval_cc(lam, k, r, rp) -> int:
    """[r, rp]"""
    return _interval(lam, k, r, rp, True, True)


def interval_co(lam, k, r, rp) -> int:
    """[r, rp)"""
    return _interval(lam, k, r, rp, True, False)


def interval_oc(lam, k, r, rp) -> int:
    """(r, rp]"""
    return _interval(lam, k, r, rp, False, True)


def interval_oo(lam, k, r, rp) -> int:
    """(r, rp)"""
    return _interval(lam, k, r, rp, False, False)


# ---------------------------------------------------------------------------
# charge and cocharge


def charge_kshape(t: KShapeTableau) -> int:
    """Charge driven by connected-row intervals on the previous shape."""
    total = 0
    ch = 0
    for n in range(2, t.letters + 1):
        shape = t.chain[n - 1]
        r = t.up(n - 1)[0] + 1
        rp = t.up(n)[0]
        if r >= rp:
            ch = ch + interval_co(shape, t.k, r, rp)
        else:
            ch = ch - interval_oc(shape, t.k, rp, r)
        total += ch
    return total


def cocharge_kshape(t: KShapeTableau) -> int:
    total = 0
    co = 0
    for n in range(2, t.letters + 1):
        shape = t.chain[n - 1]
        r = t.down(n - 1)[0] + 1
        rp = t.down(n)[0]
        if r > rp:
            co = co - interval_oo(shape, t.k, r, rp)
        else:
            co = co + interval_cc(shape, t.k, rp, r)
        total += co
    return total


def letter_charges(t: KShapeTableau) -> tuple[int, ...]:
    out = [0]
    ch = 0
    for n in range(2, t.letters + 1):
        shape = t.chain[n - 1]
        r = t.up(n - 1)[0] + 1
        rp = t.up(n)[0]
        ch = ch + (interval_co(shape, t.k, r, rp) if r >= rp else -interval_oc(shape, t.k, rp, r))
        out.append(ch)
    return tuple(out)


def letter_cocharges(t: KShapeTableau) -> tuple[int, ...]:
    out = [0]
    co = 0
    for n in range(2, t.letters + 1):
        shape = t.chain[n - 1]
        r = t.down(n - 1)[0] + 1
        rp = t.down(n)[0]
        co = co + (-interval_oo(shape, t.k, r, rp) if r > rp else interval_cc(shape, t.k, rp, r))
        out.append(co)
    return tuple(out)


def charge_cocharge_residual(t: KShapeTableau) -> int:
    """charge - (n(n-1)/2 - cocharge - interior size); zero on valid input."""
    n = t.letters
    interior = sum(k_interior(t.shape, t.k))
    return charge_kshape(t) - (n * (n - 1) // 2 - cocharge_kshape(t) - interior)
