"""The poset of k-shapes: strings, moves, paths, and diamond equivalence.

Strings are chains of addable corners at diagonal distance k or k+1;
moves stack translated row-type (or column-type) strings with top cells
in consecutive columns (rows).  Moves are the edges of the poset (the
order is their transitive closure; a move may itself factor through a
vertex, and is then diamond-equivalent to its factorization).  Paths
are move sequences and carry a charge (cells of column moves) and a
cocharge (cells of row moves).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import IntegrityError
from .partitions import (
    Cell,
    Partition,
    add_cells,
    addable_corners,
    boundary_size,
    cell_in,
    conjugate,
    contains,
    diag,
    format_partition,
    k_interior,
    partitions_in_box,
    row_shape,
    skew_cells,
)

ROW = "row"
COLUMN = "column"
COVER = "cover"
COCOVER = "cocover"


@dataclass(frozen=True)
class StringOfCells:
    """A contiguity chain of cells between two shapes, with its type."""

    cells: tuple[Cell, ...]  # top to bottom
    inner: Partition
    outer: Partition
    kind: str

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def top(self) -> Cell:
        return self.cells[0]

    @property
    def bottom(self) -> Cell:
        return self.cells[-1]


def is_k_shape(lam: Partition, k: int) -> bool:
    """True iff both k-boundary profiles of lam are partitions."""
    if k < 2:
        raise ValueError(f"k must be at least 2: {k}")
    rs = row_shape(lam, k)
    if any(rs[i] < rs[i + 1] for i in range(len(rs) - 1)):
        return False
    cs = col_shape_cached(lam, k)
    return all(cs[i] >= cs[i + 1] for i in range(len(cs) - 1))


def col_shape_cached(lam: Partition, k: int) -> tuple[int, ...]:
    return row_shape(conjugate(lam), k)


def _delta(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    )


def classify_string(inner: Partition, outer: Partition, k: int) -> StringOfCells | None:
    """Classify outer/inner as a string, or return None if it is not one.

    The cells must form a chain, top to bottom, with consecutive cells in
    strictly lower rows at diagonal distance k or k+1.  The kind is read
    off the change of the boundary profiles; a string matching none or
    several of the four type conditions raises IntegrityError.
    """
    if not contains(outer, inner):
        return None
    cs = skew_cells(outer, inner)
    if not cs:
        return None
    ordered = sorted(cs, key=lambda c: -c[0])
    for a, b in zip(ordered, ordered[1:]):
        if b[0] >= a[0]:
            return None  # two cells share a row
        if abs(diag(a) - diag(b)) not in (k, k + 1):
            return None
    drs = _delta(row_shape(outer, k), row_shape(inner, k))
    dcs = _delta(col_shape_cached(outer, k), col_shape_cached(inner, k))
    kinds = []
    if all(x == 0 for x in drs):
        kinds.append(ROW)
    if all(x == 0 for x in dcs):
        kinds.append(COLUMN)
    if any(x > 0 for x in drs) and any(x > 0 for x in dcs):
        kinds.append(COVER)
    if any(x < 0 for x in drs) and any(x < 0 for x in dcs):
        kinds.append(COCOVER)
    if len(kinds) != 1:
        raise IntegrityError(
            f"string {outer}/{inner} matches type conditions {kinds or 'none'}"
        )
    return StringOfCells(cells=tuple(ordered), inner=inner, outer=outer, kind=kinds[0])


def corner_chains(lam: Partition, k: int) -> Iterator[tuple[Cell, ...]]:
    """All strings over lam, as chains of addable corners, top to bottom.

    From a corner, the next cell below is the unique addable corner at
    diagonal distance k or k+1, if any (corners sit at least two
    diagonals apart, so at most one of the two candidates exists).
    """
    corners = addable_corners(lam)
    by_diag = {diag(c): c for c in corners}
    for start in corners:
        chain = [start]
        while True:
            yield tuple(chain)
            d = diag(chain[-1])
            nxt = by_diag.get(d + k) or by_diag.get(d + k + 1)
            if nxt is None:
                break
            chain.append(nxt)


def _string_signature(s: StringOfCells, k: int):
    """Translation-invariant diagram of a string.

    Records, relative to the top cell: the added cells, the boundary
    cells of the inner shape that leave the boundary, and the lengths of
    the surviving boundary segments in every touched row and column.
    Two strings are translates exactly when their signatures agree.
    """
    top = s.top
    rel = lambda c: (c[0] - top[0], c[1] - top[1])
    bullets = tuple(sorted(rel(c) for c in s.cells))
    inner_int = k_interior(s.inner, k)
    outer_int = k_interior(s.outer, k)
    circles = tuple(
        sorted(
            rel(c)
            for c in skew_cells(s.inner, inner_int)
            if cell_in(outer_int, c)
        )
    )
    rows = {c[0] for c in s.cells} | {c[0] + top[0] for c in circles}
    cols = {c[1] for c in s.cells} | {c[1] + top[1] for c in circles}
    shared = [
        c
        for c in skew_cells(s.inner, inner_int)
        if not cell_in(outer_int, c) and (c[0] in rows or c[1] in cols)
    ]
    row_segs = tuple(
        sorted((r - top[0], sum(1 for c in shared if c[0] == r)) for r in rows)
    )
    col_segs = tuple(
        sorted((c0 - top[1], sum(1 for c in shared if c[1] == c0)) for c0 in cols)
    )
    return bullets, circles, row_segs, col_segs


@dataclass(frozen=True)
class Move:
    """A rank-r stack of translated strings joining two k-shapes."""

    orientation: str  # ROW or COLUMN
    rank: int
    length: int
    strings: tuple[StringOfCells, ...]
    source: Partition
    target: Partition

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset(c for s in self.strings for c in s.cells)

    def key(self):
        return (self.orientation, self.source, tuple(sorted(self.cells)))

    def sort_key(self):
        s1 = self.strings[0]
        return (0 if self.orientation == ROW else 1, s1.top, self.rank, self.length)

    def __eq__(self, other):
        return isinstance(other, Move) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def move_charge(m: Move) -> int:
    """Zero for row moves, rank*length (the cell count) for column moves."""
    return 0 if m.orientation == ROW else m.rank * m.length


def move_cocharge(m: Move) -> int:
    return 0 if m.orientation == COLUMN else m.rank * m.length


def _conjugate_cells(cs) -> tuple[Cell, ...]:
    return tuple((j, i) for i, j in cs)


def _conjugate_string(s: StringOfCells, k: int) -> StringOfCells:
    flipped = {ROW: COLUMN, COLUMN: ROW, COVER: COVER, COCOVER: COCOVER}[s.kind]
    return StringOfCells(
        cells=tuple(sorted(_conjugate_cells(s.cells), key=lambda c: -c[0])),
        inner=conjugate(s.inner),
        outer=conjugate(s.outer),
        kind=flipped,
    )


def _conjugate_move(m: Move, k: int) -> Move:
    return Move(
        orientation=COLUMN if m.orientation == ROW else ROW,
        rank=m.rank,
        length=m.length,
        strings=tuple(_conjugate_string(s, k) for s in m.strings),
        source=conjugate(m.source),
        target=conjugate(m.target),
    )


def _grow_row_move(
    lam: Partition, s1_cells: tuple[Cell, ...], k: int, max_rank: int | None = None
) -> Iterator[Move]:
    """Extend a row-type string to ranks 1..max_rank and yield the valid
    moves (the default cap k-1 is the proven bound on ranks).

    The i-th string is forced: its top cell is the unique addable corner
    of the intermediate shape in the next column over, and the chain from
    it must be a translate of the first string.  Intermediate shapes need
    not be k-shapes; a move is emitted whenever the final shape is one.
    """
    ell = len(s1_cells)
    s1 = classify_string(lam, add_cells(lam, s1_cells), k)
    if s1 is None or s1.kind != ROW:
        return
    sig = _string_signature(s1, k)
    strings = [s1]
    current = s1.outer
    for r in range(1, (k - 1 if max_rank is None else max_rank) + 1):
        if r > 1:
            prev_top = strings[-1].top
            col = prev_top[1] + 1
            tops = [c for c in addable_corners(current) if c[1] == col]
            if not tops:
                return
            chain = [tops[0]]
            by_diag = {diag(c): c for c in addable_corners(current)}
            while len(chain) < ell:
                d = diag(chain[-1])
                nxt = by_diag.get(d + k) or by_diag.get(d + k + 1)
                if nxt is None:
                    return
                chain.append(nxt)
            nxt_outer = add_cells(current, chain)
            s = classify_string(current, nxt_outer, k)
            if s is None or s.kind != ROW or _string_signature(s, k) != sig:
                return
            strings.append(s)
            current = nxt_outer
        if is_k_shape(current, k):
            yield Move(
                orientation=ROW,
                rank=r,
                length=ell,
                strings=tuple(strings),
                source=lam,
                target=current,
            )


@lru_cache(maxsize=None)
def enumerate_row_moves(lam: Partition, k: int) -> tuple[Move, ...]:
    if not is_k_shape(lam, k):
        raise ValueError(f"{lam} is not a {k}-shape")
    seen: dict[tuple, Move] = {}
    for chain in corner_chains(lam, k):
        try:
            for m in _grow_row_move(lam, chain, k):
                seen.setdefault(m.key(), m)
        except IntegrityError:
            continue  # ambiguous strings cannot occur inside a valid move
    return tuple(sorted(seen.values(), key=Move.sort_key))


@lru_cache(maxsize=None)
def enumerate_moves(lam: Partition, k: int) -> tuple[Move, ...]:
    """All row and column moves with source lam, duplicate-free."""
    rows = enumerate_row_moves(lam, k)
    cols = tuple(
        _conjugate_move(m, k) for m in enumerate_row_moves(conjugate(lam), k)
    )
    return tuple(sorted(rows + cols, key=Move.sort_key))


def _parse_row_move(source: Partition, cells: frozenset[Cell], k: int) -> Move:
    """Reconstruct a row move from its cell set, validating every condition."""
    n = len(cells)
    # the leftmost cell is always the top of the first string
    start = min(cells, key=lambda c: (c[1], c[0]))
    for ell in range(n, 0, -1):
        if n % ell:
            continue
        chain = [start]
        cur = source
        ok = True
        by_diag = {diag(c): c for c in addable_corners(cur)}
        while len(chain) < ell:
            d = diag(chain[-1])
            nxt = by_diag.get(d + k) or by_diag.get(d + k + 1)
            if nxt is None or nxt not in cells:
                ok = False
                break
            chain.append(nxt)
        if not ok:
            continue
        for m in _grow_row_move(source, tuple(chain), k):
            if m.cells == cells:
                return m
    raise IntegrityError(f"cells {sorted(cells)} do not form a row move over {source}")


def move_from_cells(source: Partition, cells, orientation: str, k: int) -> Move:
    cs = frozenset(cells)
    if orientation == ROW:
        return _parse_row_move(source, cs, k)
    m = _parse_row_move(conjugate(source), frozenset(_conjugate_cells(cs)), k)
    return _conjugate_move(m, k)


@dataclass(frozen=True)
class Path:
    """A composable sequence of moves in the poset of k-shapes."""

    start: Partition
    moves: tuple[Move, ...] = ()

    def __post_init__(self):
        cur = self.start
        for m in self.moves:
            if m.source != cur:
                raise ValueError(
                    f"move from {m.source} does not compose at {cur}"
                )
            cur = m.target

    @property
    def end(self) -> Partition:
        return self.moves[-1].target if self.moves else self.start

    def charge(self) -> int:
        return sum(move_charge(m) for m in self.moves)

    def cocharge(self) -> int:
        return sum(move_cocharge(m) for m in self.moves)

    def shapes(self) -> tuple[Partition, ...]:
        out = [self.start]
        for m in self.moves:
            out.append(m.target)
        return tuple(out)

    def sort_key(self):
        return tuple(m.sort_key() + (m.target,) for m in self.moves)

    def text(self) -> str:
        head = format_partition(self.start)
        parts = [head]
        for m in self.moves:
            o = "r" if m.orientation == ROW else "c"
            r, c = m.strings[0].top
            parts.append(f"{o}:{m.rank}:{m.length}@({r},{c})")
        return "; ".join(parts)


@dataclass(frozen=True)
class PathClass:
    """A diamond-equivalence class of paths with common endpoints."""

    representative: Path
    members: frozenset[Path]

    @property
    def charge(self) -> int:
        return self.representative.charge()

    @property
    def cocharge(self) -> int:
        return self.representative.cocharge()


@dataclass
class KShapePoset:
    k: int
    size: int
    vertices: tuple[Partition, ...]
    edges: dict[Partition, tuple[Move, ...]] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.edges.values())

    def maximal_vertices(self) -> tuple[Partition, ...]:
        """Vertices no move reaches; these should be the (k+1)-cores."""
        targets = {m.target for ms in self.edges.values() for m in ms}
        return tuple(v for v in self.vertices if v not in targets)

    def minimal_vertices(self) -> tuple[Partition, ...]:
        """Vertices with no move out; these should be the k-cores."""
        return tuple(v for v in self.vertices if not self.edges.get(v))

    def to_dot(self) -> str:
        lines = ["digraph kshapes {"]
        for v in self.vertices:
            lines.append(f'  "{format_partition(v)}";')
        for v in self.vertices:
            for m in self.edges.get(v, ()):
                o = "r" if m.orientation == ROW else "c"
                lines.append(
                    f'  "{format_partition(v)}" -> "{format_partition(m.target)}"'
                    f' [label="{o} ({m.rank},{m.length})"];'
                )
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def kshapes_of_size(k: int, size: int) -> tuple[Partition, ...]:
    """All k-shapes with k-boundary of the given size.

    Every row and column of a k-shape holds at least one boundary cell,
    so candidates live in a size x size box.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2: {k}")
    if size == 0:
        return ((),)
    found = [
        lam
        for lam in partitions_in_box(size, size)
        if boundary_size(lam, k) == size and is_k_shape(lam, k)
    ]
    return tuple(sorted(found))


def build_poset(k: int, size: int) -> KShapePoset:
    verts = kshapes_of_size(k, size)
    edges = {v: enumerate_moves(v, k) for v in verts}
    return KShapePoset(k=k, size=size, vertices=verts, edges=edges)


def enumerate_paths(lam: Partition, mu: Partition, k: int) -> tuple[Path, ...]:
    """All move sequences from lam to mu; the empty path iff lam == mu."""
    if boundary_size(lam, k) != boundary_size(mu, k):
        raise ValueError(
            f"boundary sizes differ: {lam} vs {mu} at k={k}"
        )

    @lru_cache(maxsize=None)
    def suffixes(nu: Partition) -> tuple[tuple[Move, ...], ...]:
        if nu == mu:
            return ((),)
        out = []
        for m in enumerate_moves(nu, k):
            if not contains(mu, m.target):
                continue
            for rest in suffixes(m.target):
                out.append((m,) + rest)
        return tuple(out)

    return tuple(Path(start=lam, moves=ms) for ms in suffixes(lam))


@lru_cache(maxsize=None)
def _moves_between(a: Partition, b: Partition, k: int) -> tuple[Move, ...]:
    return tuple(m for m in enumerate_moves(a, k) if m.target == b)


@lru_cache(maxsize=None)
def _window_replacements(a: Partition, b: Partition, total_charge: int, k: int):
    """Move windows from a to b (length one or two) of the given charge."""
    out = []
    for m in _moves_between(a, b, k):
        if move_charge(m) == total_charge:
            out.append((m,))
    for m1 in enumerate_moves(a, k):
        if not contains(b, m1.target):
            continue
        for m2 in _moves_between(m1.target, b, k):
            if move_charge(m1) + move_charge(m2) == total_charge:
                out.append((m1, m2))
    return tuple(out)


def _rewrite_neighbors(path: Path, k: int) -> Iterator[Path]:
    """Single diamond rewrites: replace a window of one or two moves by
    another window with the same endpoints and the same charge, allowing
    one side of the diamond to be empty."""
    moves = path.moves
    shapes = path.shapes()
    for i in range(len(moves)):
        for width in (1, 2):
            if i + width > len(moves):
                continue
            window = moves[i : i + width]
            total = sum(move_charge(m) for m in window)
            for repl in _window_replacements(shapes[i], shapes[i + width], total, k):
                if tuple(repl) == tuple(window):
                    continue
                yield Path(start=path.start, moves=moves[:i] + tuple(repl) + moves[i + width :])


def equivalence_classes(paths, k: int) -> tuple[PathClass, ...]:
    """Partition paths under the closure of single diamond rewrites."""
    paths = list(paths)
    if not paths:
        return ()
    starts = {p.start for p in paths}
    ends = {p.end for p in paths}
    if len(starts) != 1 or len(ends) != 1:
        raise ValueError("paths must share both endpoints")
    index = {p: None for p in paths}
    classes = []
    for p in paths:
        if index[p] is not None:
            continue
        comp = {p}
        frontier = [p]
        while frontier:
            q = frontier.pop()
            for nb in _rewrite_neighbors(q, k):
                if nb not in comp:
                    if nb not in index:
                        raise IntegrityError(
                            f"rewrite left the enumerated path set: {nb.text()}"
                        )
                    comp.add(nb)
                    frontier.append(nb)
        for q in comp:
            index[q] = len(classes)
        rep = min(comp, key=Path.sort_key)
        classes.append(PathClass(representative=rep, members=frozenset(comp)))
    return tuple(classes)


def path_classes(lam: Partition, mu: Partition, k: int) -> tuple[PathClass, ...]:
    return equivalence_classes(enumerate_paths(lam, mu, k), k)
