import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kshape.partitions import (
    addable_corners,
    boundary_size,
    cells,
    col_shape,
    conjugate,
    corners,
    diag_count,
    dominates,
    format_partition,
    hook_length,
    is_p_core,
    k_boundary,
    k_interior,
    parse_partition,
    partition,
    partition_sum,
    partition_union,
    removable_corners,
    residue,
    row_shape,
    union_shape,
)

partitions_st = st.lists(st.integers(1, 8), max_size=7).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_partition_canonicalization():
    assert partition([3, 2, 0, 0]) == (3, 2)
    assert partition([]) == ()
    with pytest.raises(ValueError):
        partition([2, 3])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_text_form_round_trip():
    assert parse_partition("8,4,3,2,1,1,1") == (8, 4, 3, 2, 1, 1, 1)
    assert parse_partition("-") == ()
    assert parse_partition("") == ()
    assert format_partition(()) == "-"
    assert format_partition((3, 1)) == "3,1"


def test_hook_length_examples():
    assert hook_length((2, 1), (1, 1)) == 3
    assert hook_length((1,), (1, 1)) == 1
    lam = (8, 4, 3, 2, 1, 1, 1)
    assert sum(1 for b in cells(lam) if hook_length(lam, b) <= 4) == 12
    with pytest.raises(ValueError):
        hook_length((2, 1), (3, 1))


def test_is_p_core():
    assert is_p_core((), 5)
    assert not is_p_core((2, 1), 3)
    # hooks of (3,1) are 4,2,1,1
    assert sorted(hook_length((3, 1), b) for b in cells((3, 1))) == [1, 1, 2, 4]
    assert is_p_core((3, 1), 3)
    with pytest.raises(ValueError):
        is_p_core((2, 1), 1)


def test_k_boundary_examples():
    lam = (8, 4, 3, 2, 1, 1, 1)
    sk = k_boundary(lam, 4)
    # brute-force hook filter: cells of hook length above 4
    brute = {b for b in cells(lam) if hook_length(lam, b) > 4}
    assert set(cells(sk.inner)) == brute
    assert sk.inner == (4, 2, 1, 1)
    assert sk.outer == lam
    assert sk.size() == 12
    assert k_boundary((1,), 1) == ((1,), ())
    assert k_interior((2, 1), 2) == (1,)


def test_row_col_shapes():
    assert row_shape((8, 4, 3, 2, 1, 1, 1), 4) == (4, 2, 2, 1, 1, 1, 1)
    assert col_shape((8, 4, 3, 2, 1, 1, 1), 4) == (3, 2, 2, 1, 1, 1, 1, 1)
    assert row_shape((3, 3, 1), 4) == (2, 3, 1)  # not a partition
    assert row_shape((), 3) == ()


def test_residue():
    assert residue((1, 1), 5) == 0
    assert residue((2, 1), 3) == 3
    assert residue((1, 6), 4) == 0


def test_diag_count():
    lam = (7, 3, 2, 1, 1)
    assert diag_count(lam, (3, 1), (3, 1), 2, 4) == 0
    # the recursion steps of the worked 4-tableau
    assert diag_count(lam, (4, 1), (1, 6), 2, 4) == 1
    assert diag_count(lam, (5, 1), (1, 6), 1, 4) == 1
    with pytest.raises(ValueError):
        diag_count(lam, (1, 6), (4, 1), 2, 4)
    with pytest.raises(ValueError):
        diag_count(lam, (4, 1), (1, 6), 9, 4)


def test_corners():
    assert corners(()) == (((1, 1),), ())
    assert corners((1,)) == (((1, 2), (2, 1)), ((1, 1),))
    lam = (12, 8, 6, 4, 2, 1)
    assert addable_corners(lam) == (
        (1, 13), (2, 9), (3, 7), (4, 5), (5, 3), (6, 2), (7, 1),
    )
    assert removable_corners((2, 2, 1)) == ((2, 2), (3, 1))


def test_partition_algebra():
    assert partition_sum((3, 1), (2, 2, 1)) == (5, 3, 1)
    assert partition_union((3, 1), (2, 2)) == (3, 2, 2, 1)
    assert union_shape((3, 1), (2, 2)) == (3, 2)
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert not dominates((3,), (2, 2))


@given(partitions_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


@given(partitions_st, st.integers(1, 6))
def test_hook_transpose_symmetry(lam, k):
    for (i, j) in cells(lam):
        assert hook_length(lam, (i, j)) == hook_length(conjugate(lam), (j, i))


@given(partitions_st, st.integers(1, 6))
@settings(max_examples=60)
def test_interior_is_partition_and_sizes(lam, k):
    interior = k_interior(lam, k)
    assert all(
        interior[i] >= interior[i + 1] for i in range(len(interior) - 1)
    )
    assert boundary_size(lam, k) == sum(lam) - sum(interior)
    assert row_shape(conjugate(lam), k) == col_shape(lam, k)


@given(partitions_st, st.integers(2, 5))
@settings(max_examples=60)
def test_cores_have_no_hook(lam, p):
    if is_p_core(lam, p):
        assert all(hook_length(lam, b) != p for b in cells(lam))
