"""The pushout algorithm and the weak bijection, standard case.

A cover is first maximized (adding the longest run of contiguous
addable corners below, then above, each emitting a move along the
bottom).  A maximal cover is then pushed through each move of the top
path via a four-way case split, producing the corresponding bottom
move.  Iterating over the covers of a standard k-tableau yields a
standard (k-1)-tableau and a path whose charge accounts exactly for the
difference of the two tableau charges.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import IntegrityError
from .partitions import (
    Cell,
    Partition,
    add_cells,
    addable_corners,
    diag,
    format_partition,
    union_shape,
)
from .poset import (
    COLUMN,
    ROW,
    Move,
    Path,
    PathClass,
    is_k_shape,
    move_from_cells,
    path_classes,
)
from .kshape_tableaux import Cover, cover_status, make_cover, chain_characterization
from .kshape_tableaux import KShapeTableau, charge_kshape, cocharge_kshape
from .weak_tableaux import WeakTableau, make_weak_tableau


@dataclass(frozen=True)
class PushoutSquare:
    """One commuting square of the algorithm."""

    kind: str  # max-below, max-above, row-I..row-IV, col-I..col-IV
    top_left: Partition
    top_right: Partition
    bottom_left: Partition
    bottom_right: Partition
    cover_in: Cover
    cover_out: Cover
    move_in: Move | None
    move_out: Move | None


def _chain_below(inner: Partition, start_diags, k: int) -> tuple[Cell, ...]:
    """Longest run of contiguous addable corners going down from a start."""
    by_diag = {diag(c): c for c in addable_corners(inner)}
    start = next((by_diag[d] for d in start_diags if d in by_diag), None)
    if start is None:
        return ()
    chain = [start]
    while True:
        d = diag(chain[-1])
        nxt = by_diag.get(d + k) or by_diag.get(d + k + 1)
        if nxt is None:
            return tuple(chain)
        chain.append(nxt)


def _chain_above(inner: Partition, start_diags, k: int) -> tuple[Cell, ...]:
    by_diag = {diag(c): c for c in addable_corners(inner)}
    start = next((by_diag[d] for d in start_diags if d in by_diag), None)
    if start is None:
        return ()
    chain = [start]
    while True:
        d = diag(chain[-1])
        nxt = by_diag.get(d - k) or by_diag.get(d - k - 1)
        if nxt is None:
            return tuple(reversed(chain))  # cells listed top to bottom
        chain.append(nxt)


def maximize_below(c: Cover, k: int) -> tuple[Cover, Move]:
    """Extend a cover by the longest corner run below its bottom cell.

    The added cells form a row move along the bottom of the square.
    """
    bot = c.string.bottom
    cells = _chain_below(c.inner, (diag(bot) + k, diag(bot) + k + 1), k)
    if not cells:
        raise ValueError("cover cannot be continued below")
    move = move_from_cells(c.outer, cells, ROW, k)
    grown = make_cover(c.inner, move.target, k)
    return grown, move


def maximize_above(c: Cover, k: int) -> tuple[Cover, Move]:
    """Extend a cover by the longest corner run above its top cell."""
    top = c.string.top
    cells = _chain_above(c.inner, (diag(top) - k, diag(top) - k - 1), k)
    if not cells:
        raise ValueError("cover cannot be continued above")
    move = move_from_cells(c.outer, cells, COLUMN, k)
    grown = make_cover(c.inner, move.target, k)
    return grown, move


def _split_at_intersection(c: Cover, inter: frozenset[Cell]):
    """Cells of c before and after the intersection block, which must be
    one contiguous run of the string."""
    cells = c.string.cells
    idx = [i for i, x in enumerate(cells) if x in inter]
    if idx != list(range(idx[0], idx[-1] + 1)):
        raise IntegrityError("cover meets the move in a non-contiguous block")
    return cells[: idx[0]], cells[idx[-1] + 1 :]


def maximal_pushout(c: Cover, m: Move, k: int) -> PushoutSquare:
    """Push a maximal cover through one move.

    Non-intersecting inputs either commute outright or interfere, in
    which case both sides absorb the completion of the move (its extreme
    string translated one step outward).  Intersecting inputs drop the
    common cells, translating them upward (row) or rightward (column)
    when the cover sticks out on both sides.
    """
    if c.inner != m.source:
        raise ValueError("cover and move must start at the same shape")
    if not cover_status(c, k).maximal:
        raise ValueError("pushout requires a maximal cover")
    lam, nu, mu = c.inner, m.target, c.outer
    cells_c = frozenset(c.cells)
    inter = cells_c & m.cells
    row = m.orientation == ROW

    if not inter:
        union = union_shape(mu, nu)
        if is_k_shape(union, k):
            kind = "row-I" if row else "col-I"
            new_c_cells: frozenset[Cell] = cells_c
            new_m_cells: frozenset[Cell] = m.cells
        else:
            kind = "row-II" if row else "col-II"
            extreme = m.strings[-1].cells
            comp = (
                frozenset((r, j + 1) for r, j in extreme)
                if row
                else frozenset((r + 1, j) for r, j in extreme)
            )
            new_c_cells = cells_c | comp
            new_m_cells = m.cells | comp
    else:
        above, below = _split_at_intersection(c, inter)
        if row and above and not below:
            kind = "row-III"
            new_c_cells = cells_c - inter
            new_m_cells = m.cells - inter
        elif not row and below and not above:
            kind = "col-III"
            new_c_cells = cells_c - inter
            new_m_cells = m.cells - inter
        elif above and below:
            kind = "row-IV" if row else "col-IV"
            shifted = (
                frozenset((r + 1, j) for r, j in inter)
                if row
                else frozenset((r, j + 1) for r, j in inter)
            )
            new_c_cells = (cells_c - inter) | shifted
            new_m_cells = (m.cells - inter) | shifted
        else:
            raise IntegrityError(
                f"no pushout type applies: cover {sorted(cells_c)} vs "
                f"{m.orientation} move {sorted(m.cells)} over {lam}"
            )

    try:
        eta = add_cells(nu, new_c_cells)
        new_cover = make_cover(nu, eta, k)
    except ValueError as exc:
        raise IntegrityError(f"{kind}: output cover is invalid: {exc}") from exc
    if new_m_cells:
        new_move = move_from_cells(mu, new_m_cells, m.orientation, k)
        if new_move.target != eta:
            raise IntegrityError(f"{kind}: square does not commute")
    else:
        new_move = None
        if eta != mu:
            raise IntegrityError(f"{kind}: empty bottom move but corners differ")
    # types I and III leave the union of the input cells; II appends the
    # completion and IV translates the overlap block to fresh cells
    if kind in ("row-I", "col-I", "row-III", "col-III") and eta != union_shape(mu, nu):
        raise IntegrityError(f"{kind}: corner is not the union of the inputs")
    return PushoutSquare(
        kind=kind,
        top_left=lam,
        top_right=nu,
        bottom_left=mu,
        bottom_right=eta,
        cover_in=c,
        cover_out=new_cover,
        move_in=m,
        move_out=new_move,
    )


def _maximize(c: Cover, k: int, squares: list[PushoutSquare] | None, out: list[Move]) -> Cover:
    guard = 0
    while True:
        st = cover_status(c, k)
        if st.maximal:
            return c
        if st.continues_below:
            grown, mv, kind = (*maximize_below(c, k), "max-below")
        else:
            grown, mv, kind = (*maximize_above(c, k), "max-above")
        out.append(mv)
        if squares is not None:
            squares.append(
                PushoutSquare(
                    kind=kind,
                    top_left=c.inner,
                    top_right=c.inner,
                    bottom_left=c.outer,
                    bottom_right=grown.outer,
                    cover_in=c,
                    cover_out=grown,
                    move_in=None,
                    move_out=mv,
                )
            )
        c = grown
        guard += 1
        if guard > sum(grown.outer) + 2:
            raise IntegrityError("maximization does not terminate")


def push_cover_through_path(
    c: Cover, p: Path, k: int, squares: list[PushoutSquare] | None = None
) -> tuple[Cover, Path]:
    """Convert an arbitrary cover and top path into a maximal cover and
    the corresponding bottom path, in canonical order: maximize fully,
    push one move, repeat."""
    if c.inner != p.start:
        raise ValueError("cover must start where the path starts")
    out: list[Move] = []
    start = c.outer
    for m in p.moves:
        c = _maximize(c, k, squares, out)
        sq = maximal_pushout(c, m, k)
        if squares is not None:
            squares.append(sq)
        if sq.move_out is not None:
            out.append(sq.move_out)
        c = sq.cover_out
    c = _maximize(c, k, squares, out)
    return c, Path(start=start, moves=tuple(out))


@dataclass(frozen=True)
class WeakBijectionResult:
    """Image of a standard k-tableau: the (k-1)-tableau chain and path."""

    k: int
    source: WeakTableau
    target_chain: tuple[Partition, ...]
    path: Path
    squares: tuple[PushoutSquare, ...] = field(repr=False, default=())

    @property
    def target_tableau(self) -> WeakTableau:
        return make_weak_tableau(self.k - 1, self.target_chain)

    def path_class(self) -> PathClass:
        for cls in path_classes(self.path.start, self.path.end, self.k):
            if self.path in cls.members:
                return cls
        raise IntegrityError("emitted path missing from the enumerated classes")


def weak_bijection_standard(
    t: WeakTableau, keep_squares: bool = False
) -> WeakBijectionResult:
    """Map a standard k-tableau to a standard (k-1)-tableau and a path.

    Every cover of the input chain is pushed through the path produced
    so far; the collected maximal covers form the output chain.  Charge
    and cocharge additivity across the square diagram is asserted.
    """
    if not t.is_standard():
        raise ValueError("the weak bijection requires a standard tableau")
    k = t.k
    if k < 2:
        raise ValueError("descent requires k >= 2")
    squares: list[PushoutSquare] | None = [] if keep_squares else None
    path = Path(start=())
    target_chain: list[Partition] = [()]
    for i in range(1, t.letters + 1):
        c = make_cover(t.chain[i - 1], t.chain[i], k)
        if not cover_status(c, k).reverse_maximal:
            raise IntegrityError(f"standard tableau step {i} is not reverse-maximal")
        c_out, path = push_cover_through_path(c, path, k, squares)
        if c_out.inner != target_chain[-1]:
            raise IntegrityError("output covers do not chain")
        target_chain.append(c_out.outer)
    chain = tuple(target_chain)
    is_k, is_km1 = chain_characterization(chain, k)
    if not is_km1:
        raise IntegrityError("output chain is not a maximal-cover chain")
    tk = KShapeTableau(k=k, chain=t.chain)
    uk = KShapeTableau(k=k, chain=chain)
    if charge_kshape(tk) != charge_kshape(uk) + path.charge():
        raise IntegrityError("charge additivity failed")
    if cocharge_kshape(tk) != cocharge_kshape(uk) + path.cocharge():
        raise IntegrityError("cocharge additivity failed")
    return WeakBijectionResult(
        k=k,
        source=t,
        target_chain=chain,
        path=path,
        squares=tuple(squares) if squares else (),
    )


@dataclass(frozen=True)
class DescentLevel:
    k: int
    chain: tuple[Partition, ...]
    path: Path

    @property
    def charge(self) -> int:
        return self.path.charge()

    @property
    def cocharge(self) -> int:
        return self.path.cocharge()


@dataclass(frozen=True)
class DescentRecord:
    """Result of iterating the weak bijection down to the 1-tableau."""

    source: WeakTableau
    levels: tuple[DescentLevel, ...]

    @property
    def total_charge(self) -> int:
        return sum(lv.charge for lv in self.levels)

    @property
    def total_cocharge(self) -> int:
        return sum(lv.cocharge for lv in self.levels)

    def to_text(self) -> str:
        lines = [f"source: {self.source.text() or '-'}"]
        for lv in self.levels:
            lines.append(
                f"k={lv.k}: path {lv.path.text()}"
                f" | charge {lv.charge} cocharge {lv.cocharge}"
            )
        lines.append(
            f"total charge {self.total_charge} cocharge {self.total_cocharge}"
        )
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "source": self.source.text(),
                "levels": [
                    {
                        "k": lv.k,
                        "path": lv.path.text(),
                        "chain": [format_partition(s) for s in lv.chain],
                        "charge": lv.charge,
                        "cocharge": lv.cocharge,
                    }
                    for lv in self.levels
                ],
                "total_charge": self.total_charge,
                "total_cocharge": self.total_cocharge,
            },
            indent=2,
        )


def descend(t: WeakTableau) -> DescentRecord:
    """Iterate the weak bijection from level k down to the 1-tableau."""
    levels = []
    cur = t
    for kk in range(t.k, 1, -1):
        res = weak_bijection_standard(cur)
        levels.append(DescentLevel(k=kk, chain=res.target_chain, path=res.path))
        cur = make_weak_tableau(kk - 1, res.target_chain)
    return DescentRecord(source=t, levels=tuple(levels))


def full_descent(chain: Sequence[Partition]) -> DescentRecord:
    """Descend from an ordinary standard Young tableau given as a chain."""
    chain = tuple(tuple(c) for c in chain)
    n = len(chain) - 1
    return descend(make_weak_tableau(max(n, 1), chain))
