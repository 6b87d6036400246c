import pytest

from kshape.errors import IntegrityError
from kshape.partitions import is_p_core
from kshape.poset import (
    COVER,
    ROW,
    build_poset,
    classify_string,
    corner_chains,
    enumerate_moves,
    enumerate_paths,
    equivalence_classes,
    is_k_shape,
    kshapes_of_size,
    move_charge,
    move_cocharge,
    move_from_cells,
    path_classes,
    row_shape,
)


def test_is_k_shape_fixture():
    assert is_k_shape((8, 4, 3, 2, 1, 1, 1), 4)
    assert not is_k_shape((3, 3, 1), 4)
    assert is_k_shape((), 4)
    with pytest.raises(ValueError):
        is_k_shape((1,), 1)


def test_cores_are_k_shapes():
    for size in range(0, 7):
        for lam in kshapes_of_size(3, size):
            pass  # enumeration itself exercises the filter
    for lam in [(4, 3, 2, 1), (2, 1), (5, 3, 1, 1)]:
        for k in (3, 4):
            if is_p_core(lam, k) or is_p_core(lam, k + 1):
                assert is_k_shape(lam, k)


def test_classify_string_examples():
    s = classify_string((4, 2, 1), (5, 3, 1, 1), 3)
    assert s is not None and len(s) == 3
    assert s.cells == ((4, 1), (2, 3), (1, 5))
    s2 = classify_string((), (1,), 2)
    assert s2 is not None and s2.kind == COVER and len(s2) == 1
    s3 = classify_string((1, 1), (2, 1), 2)
    assert s3 is not None and s3.kind == ROW
    # not a string: two cells in one row
    assert classify_string((1,), (3,), 2) is None
    assert classify_string((2, 2), (3, 3), 3) is None


def test_enumerate_moves_fixtures():
    # one row move only from the 3-core (2,2,1,1) at k=2
    moves = enumerate_moves((2, 2, 1, 1), 2)
    assert len(moves) == 1
    assert moves[0].orientation == ROW and moves[0].target == (3, 2, 1, 1)
    # (3,1,1) has a row and a column move
    moves = enumerate_moves((3, 1, 1), 2)
    assert {(m.orientation, m.target) for m in moves} == {
        (ROW, (4, 2, 1)),
        ("column", (3, 2, 1, 1)),
    }
    # the 2-core is minimal: no moves
    assert enumerate_moves((4, 3, 2, 1), 2) == ()
    # the diamond at (3,2,1), k=3
    moves = enumerate_moves((3, 2, 1), 3)
    assert {(m.orientation, m.target) for m in moves} == {
        (ROW, (4, 2, 1)),
        ("column", (3, 2, 1, 1)),
    }
    with pytest.raises(ValueError):
        enumerate_moves((3, 3, 1), 4)


def test_move_charges():
    for size in range(1, 6):
        for lam in kshapes_of_size(2, size):
            for m in enumerate_moves(lam, 2):
                if m.orientation == ROW:
                    assert move_charge(m) == 0
                    assert move_cocharge(m) == m.rank * m.length == len(m.cells)
                else:
                    assert move_cocharge(m) == 0
                    assert move_charge(m) == m.rank * m.length == len(m.cells)


def test_move_profile_preservation():
    from kshape.partitions import col_shape

    for k, size in ((2, 5), (3, 5)):
        for lam in kshapes_of_size(k, size):
            for m in enumerate_moves(lam, k):
                if m.orientation == ROW:
                    assert row_shape(m.target, k) == row_shape(lam, k)
                else:
                    assert col_shape(m.target, k) == col_shape(lam, k)


def test_move_rank_bound():
    # regrow without the production cap: no valid move reaches rank k
    from kshape.errors import IntegrityError
    from kshape.poset import _grow_row_move, corner_chains
    from kshape.partitions import conjugate

    for k in (2, 3):
        for size in range(0, 7):
            for lam in kshapes_of_size(k, size):
                for shape in (lam, conjugate(lam)):
                    for chain in corner_chains(shape, k):
                        try:
                            for m in _grow_row_move(shape, chain, k, max_rank=k + 1):
                                assert m.rank <= k - 1, (shape, k, m.rank)
                        except IntegrityError:
                            continue


def test_move_from_cells_round_trip():
    for k, size in ((2, 5), (3, 6)):
        for lam in kshapes_of_size(k, size):
            for m in enumerate_moves(lam, k):
                again = move_from_cells(lam, m.cells, m.orientation, k)
                assert again.cells == m.cells and again.target == m.target
    with pytest.raises(IntegrityError):
        move_from_cells((3, 1, 1), frozenset({(1, 4)}), ROW, 2)


def test_poset_2_4():
    p = build_poset(2, 4)
    assert len(p.vertices) == 6 and p.edge_count == 6
    assert set(p.vertices) == {
        (2, 2, 1, 1), (3, 1, 1), (4, 2), (3, 2, 1, 1), (4, 2, 1), (4, 3, 2, 1),
    }
    assert set(p.maximal_vertices()) == {(2, 2, 1, 1), (3, 1, 1), (4, 2)}
    assert p.minimal_vertices() == ((4, 3, 2, 1),)


def test_poset_extremes_are_cores():
    for k in (2, 3, 4):
        for size in range(0, 9):
            p = build_poset(k, size)
            assert set(p.maximal_vertices()) == {
                v for v in p.vertices if is_p_core(v, k + 1)
            }
            assert set(p.minimal_vertices()) == {
                v for v in p.vertices if is_p_core(v, k)
            }


def test_poset_acyclic():
    # moves strictly add cells, so any path strictly increases the degree
    for k, size in ((2, 5), (3, 5)):
        p = build_poset(k, size)
        for v in p.vertices:
            for m in p.edges[v]:
                assert sum(m.target) > sum(v)


def test_poset_trivial_and_dot():
    p = build_poset(2, 0)
    assert p.vertices == ((),) and p.edge_count == 0
    dot = build_poset(2, 4).to_dot()
    assert dot.startswith("digraph")
    assert '"3,1,1" -> "4,2,1" [label="r (1,2)"];' in dot


def test_paths_fixtures():
    paths = enumerate_paths((3, 1, 1), (4, 3, 2, 1), 2)
    assert sorted(p.charge() for p in paths) == [2, 3]
    assert len(path_classes((3, 1, 1), (4, 3, 2, 1), 2)) == 2
    paths3 = enumerate_paths((3, 2, 1), (4, 2, 1, 1), 3)
    assert [p.charge() for p in paths3] == [1, 1]
    assert len(path_classes((3, 2, 1), (4, 2, 1, 1), 3)) == 1
    selfp = enumerate_paths((3, 1, 1), (3, 1, 1), 2)
    assert len(selfp) == 1 and not selfp[0].moves
    with pytest.raises(ValueError):
        enumerate_paths((3, 1, 1), (4, 3, 2, 1), 3)


def test_composite_move_is_equivalent_to_factorization():
    paths = enumerate_paths((3, 1, 1, 1), (4, 2, 1, 1), 3)
    lengths = sorted(len(p.moves) for p in paths)
    assert lengths == [1, 2]
    assert len(equivalence_classes(paths, 3)) == 1


def test_charge_constant_on_classes():
    for k, size in ((2, 6), (3, 6)):
        p = build_poset(k, size)
        tops = [v for v in p.vertices if is_p_core(v, k + 1)]
        bots = [v for v in p.vertices if is_p_core(v, k)]
        for a in tops:
            for b in bots:
                for cls in path_classes(a, b, k):
                    charges = {q.charge() for q in cls.members}
                    cocharges = {q.cocharge() for q in cls.members}
                    assert len(charges) == 1 and len(cocharges) == 1


def test_equivalence_requires_common_endpoints():
    p1 = enumerate_paths((3, 1, 1), (4, 3, 2, 1), 2)
    p2 = enumerate_paths((2, 2, 1, 1), (4, 3, 2, 1), 2)
    with pytest.raises(ValueError):
        equivalence_classes(list(p1) + list(p2), 2)


def test_corner_chain_strings_have_unique_continuation():
    # at most one addable corner sits at diagonal distance k or k+1
    for lam in kshapes_of_size(3, 5):
        for chain in corner_chains(lam, 3):
            assert len(set(chain)) == len(chain)


def test_path_text_form():
    paths = enumerate_paths((3, 1, 1), (4, 3, 2, 1), 2)
    texts = {p.text() for p in paths}
    assert texts == {
        "3,1,1; r:1:2@(2,2); c:1:3@(4,1)",
        "3,1,1; c:1:2@(4,1); r:1:3@(3,2)",
    }
