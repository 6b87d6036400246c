import pytest

from kshape.kshape_tableaux import (
    chain_characterization,
    charge_cocharge_residual,
    charge_kshape,
    cocharge_kshape,
    connected_rows,
    cover_status,
    enumerate_covers,
    enumerate_kshape_tableaux,
    interval_cc,
    interval_co,
    interval_oc,
    interval_oo,
    kshape_tableau_from_filling,
    letter_charges,
    letter_cocharges,
    make_cover,
    make_kshape_tableau,
)
from kshape.partitions import k_interior
from kshape.weak_tableaux import enumerate_standard_k_tableaux, standard_shapes

EXA36_ROWS = [[1, 2, 4, 6, 8, 9], [3, 5, 7], [4, 6, 9], [7], [9]]


def test_make_cover_validation():
    c = make_cover((), (1,), 2)
    assert c.cells == ((1, 1),)
    with pytest.raises(ValueError):
        make_cover((1, 1), (2, 1), 2)  # row-type string, not a cover
    with pytest.raises(ValueError):
        make_cover((3, 3, 1), (3, 3, 2), 4)  # inner is not a 4-shape


def test_cover_status_small():
    st = cover_status(make_cover((), (1,), 2), 2)
    assert st.maximal and st.reverse_maximal
    st = cover_status(make_cover((1,), (1, 1), 2), 2)
    assert st.continues_below and not st.continues_above


def _brute_status(c, k):
    """Recompute continuation flags by scanning raw cells for corners."""
    from kshape.partitions import cell_in, diag

    def is_addable(lam, cell):
        i, j = cell
        if cell_in(lam, cell):
            return False
        rows = list(lam) + [0] * (i - len(lam))
        return rows[i - 1] == j - 1 and (i == 1 or rows[i - 2] >= j)

    def is_removable(lam, cell):
        i, j = cell
        if i > len(lam) or lam[i - 1] != j:
            return False
        return i == len(lam) or lam[i] < j

    top, bot = c.string.top, c.string.bottom
    height = max(len(c.outer), top[0]) + k + 2
    width = (c.outer[0] if c.outer else 0) + k + 2
    flags = [False, False, False, False]
    for i in range(1, height + 1):
        for j in range(1, width + 1):
            cell = (i, j)
            if is_addable(c.inner, cell):
                if i < bot[0] and abs(diag(cell) - diag(bot)) in (k, k + 1):
                    flags[0] = True
                if i > top[0] and abs(diag(cell) - diag(top)) in (k, k + 1):
                    flags[1] = True
            if is_removable(c.outer, cell):
                if i < bot[0] and abs(diag(cell) - diag(bot)) in (k, k + 1):
                    flags[2] = True
                if i > top[0] and abs(diag(cell) - diag(top)) in (k, k + 1):
                    flags[3] = True
    return tuple(flags)


def test_cover_status_matches_brute_force():
    from kshape.poset import kshapes_of_size

    seen = set()
    for k in (2, 3, 5):
        for size in range(0, 6):
            for lam in kshapes_of_size(k, size):
                for c in enumerate_covers(lam, k):
                    st = cover_status(c, k)
                    got = (
                        st.continues_below,
                        st.continues_above,
                        st.reverse_below,
                        st.reverse_above,
                    )
                    assert got == _brute_status(c, k)
                    seen.add(got[:2])
    # continuations of every kind occur at this scale
    assert {(False, False), (True, False), (False, True)} <= seen


def test_section5_kshape_tableau():
    t = kshape_tableau_from_filling(3, [[1, 2, 4, 5, 6, 7], [3, 5, 6], [4, 8], [6], [8]])
    assert t.chain == (
        (), (1,), (2,), (2, 1), (3, 1, 1), (4, 2, 1), (5, 3, 1, 1),
        (6, 3, 1, 1), (6, 3, 2, 1, 1),
    )


def test_single_cell_chain_characterization():
    is_k, is_km1 = chain_characterization([(), (1,)], 2)
    assert is_k and is_km1


def test_characterization_matches_standard_enumeration():
    for k in (2, 3):
        for n in range(0, 6):
            direct = {
                t.chain
                for lam in standard_shapes(k, n)
                for t in enumerate_standard_k_tableaux(lam, k)
            }
            from_covers = {
                t.chain
                for t in enumerate_kshape_tableaux(n, k)
                if chain_characterization(t.chain, k)[0]
            }
            assert direct == from_covers


def test_connected_rows_example():
    s = connected_rows((12, 8, 6, 4, 2, 1), 5)
    assert sorted(s.successor.items()) == [
        (2, 1), (3, 2), (4, 2), (5, 3), (6, 4), (7, 5),
    ]
    # pairs at corner distance exactly k or k+1
    assert {(4, 2), (5, 3)} <= set(s.contiguous)
    assert s.chain_from(7) == (7, 5, 3, 2, 1)
    assert interval_cc((12, 8, 6, 4, 2, 1), 5, 7, 1) == 5


def test_connected_rows_empty():
    s = connected_rows((), 3)
    assert s.rows == (1,) and not s.successor


def test_intervals():
    lam = (3, 1, 1)  # addable corners in rows 1, 2, 4
    assert interval_co(lam, 4, 4, 2) == 1
    assert interval_cc(lam, 4, 4, 2) == 2
    assert interval_oc(lam, 4, 4, 2) == 1
    assert interval_oo(lam, 4, 4, 2) == 0
    assert interval_co(lam, 4, 2, 2) == 0  # empty half-open interval


def test_charge_cocharge_exa36_37():
    t = kshape_tableau_from_filling(4, EXA36_ROWS)
    assert letter_charges(t) == (0, 1, 1, 1, 2, 2, 2, 4, 3)
    assert charge_kshape(t) == 16
    assert letter_cocharges(t) == (0, 0, 1, 1, 2, 2, 3, 3, 3)
    assert cocharge_kshape(t) == 15
    assert sum(k_interior(t.shape, 4)) == 5
    assert charge_kshape(t) == 9 * 8 // 2 - cocharge_kshape(t) - 5
    assert charge_cocharge_residual(t) == 0


def test_single_letter_charges():
    t = make_kshape_tableau(2, [(), (1,)])
    assert charge_kshape(t) == 0 and cocharge_kshape(t) == 0
    assert charge_cocharge_residual(t) == 0


def test_duality_sweep_small():
    for k in (2, 3):
        for n in range(1, 5):
            for t in enumerate_kshape_tableaux(n, k):
                assert charge_cocharge_residual(t) == 0
                chs, cos = letter_charges(t), letter_cocharges(t)
                for m in range(1, t.letters + 1):
                    assert chs[m - 1] == m - cos[m - 1] - len(t.cells_of_letter(m))


def test_boundary_grows_by_one_per_cover():
    from kshape.partitions import boundary_size

    for k in (2, 3):
        for size in range(0, 6):
            from kshape.poset import kshapes_of_size

            for lam in kshapes_of_size(k, size):
                for c in enumerate_covers(lam, k):
                    assert boundary_size(c.outer, k) == size + 1


def test_grounded_residue_connectivity():
    # in a (k+1)-core, a grounded residue in a row recurs in the connected
    # row below it, with no other diagonal of that residue in between
    from kshape.partitions import cell_in, diag, residue
    from kshape.weak_tableaux import standard_shapes

    for k in (2, 3):
        for lam in standard_shapes(k, 6):
            rows = connected_rows(lam, k)
            width = (lam[0] if lam else 0) + k + 2
            for r in rows.rows:
                if r not in rows.successor:
                    continue
                rp = rows.successor[r]
                for j in range(1, width):
                    grounded = not cell_in(lam, (r, j)) and (
                        r == 1 or cell_in(lam, (r - 1, j))
                    )
                    if not grounded:
                        continue
                    e = residue((r, j), k)
                    ground_rp = [
                        jj
                        for jj in range(1, width)
                        if residue((rp, jj), k) == e
                        and not cell_in(lam, (rp, jj))
                        and (rp == 1 or cell_in(lam, (rp - 1, jj)))
                    ]
                    assert ground_rp, (lam, r, rp, j)
                    # and no diagonal of that residue strictly in between
                    from kshape.partitions import diag_count

                    gaps = [
                        diag_count(lam, (r, j), (rp, jj), e, k)
                        for jj in ground_rp
                        if diag((rp, jj)) >= diag((r, j))
                    ]
                    assert 0 in gaps, (lam, r, rp, j)
