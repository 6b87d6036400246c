import pytest

from kshape.partitions import is_p_core
from kshape.poset import kshapes_of_size, path_classes
from kshape.tpoly import TPoly, TruncatedSymPoly
from kshape.verify import branching_poly, dual_kschur_truncated, k_cores_of_boundary


def test_tpoly_arithmetic():
    a = TPoly.of([1, 2])
    b = TPoly.of([0, 1, 1])
    assert (a + b).coeffs == (1, 3, 1)
    assert (a * b).coeffs == (0, 1, 3, 2)
    assert TPoly.of([1, -1]) + TPoly.of([0, 1]) == TPoly.of([1])
    assert TPoly.of([0, 0]).coeffs == ()
    assert TPoly.monomial(3, 2)(1) == 2
    assert TPoly.from_powers([0, 2, 2])(1) == 3
    assert a(3) == 7
    assert TPoly.of([1, 1]).text() == "1 + t"


def test_truncated_sym_poly():
    p = TruncatedSymPoly.of(2, {(2, 0): TPoly.of([1]), (1, 1): TPoly.of([0, 1])})
    q = TruncatedSymPoly.of(2, {(1, 1): TPoly.of([1])})
    s = p + q
    assert s.as_dict()[(1, 1)].coeffs == (1, 1)
    assert s.scale(TPoly.of([2])).as_dict()[(2, 0)].coeffs == (2,)
    reduced = s.reduce_mod(1)
    assert (2, 0) not in reduced.as_dict()
    assert reduced.reduce_mod(1) == reduced  # idempotent
    # reduction is linear
    assert (p + q).reduce_mod(1) == p.reduce_mod(1) + q.reduce_mod(1)
    with pytest.raises(ValueError):
        TruncatedSymPoly.of(2, {(1, 0, 0): TPoly.of([1])})


def test_branching_poly_trivials():
    assert branching_poly((3, 1, 1), (3, 1, 1), 2) == TPoly.of([1])
    b = branching_poly((3, 1, 1), (4, 3, 2, 1), 2)
    assert b == TPoly.of([0, 0, 1, 1])  # classes of charge 2 and 3


def test_branching_at_one_counts_classes():
    for k in (2, 3):
        for size in range(0, 6):
            tops = [v for v in kshapes_of_size(k, size) if is_p_core(v, k + 1)]
            for lam in tops:
                for mu in k_cores_of_boundary(k, size):
                    b = branching_poly(lam, mu, k)
                    assert b(1) == len(path_classes(lam, mu, k))
                    assert all(c >= 0 for c in b.coeffs)


def test_dual_kschur_single_cell():
    s = dual_kschur_truncated((1,), 3, 3)
    assert s.as_dict() == {
        (1, 0, 0): TPoly.of([1]),
        (0, 1, 0): TPoly.of([1]),
        (0, 0, 1): TPoly.of([1]),
    }


def test_dual_kschur_standard_mode():
    full = dual_kschur_truncated((2, 1), 2, 3, grading="none")
    std = dual_kschur_truncated((2, 1), 2, 3, grading="none", weights="standard")
    assert all(sorted(expo, reverse=True) == [1, 1, 1] for expo, _ in std.terms)
    assert set(std.terms) <= set(full.terms)


def test_dual_kschur_large_k_is_schur():
    # for large k the tableaux are ordinary SSYT and the t power is the
    # classical charge
    from kshape.classical import kostka_foulkes

    lam = (2, 1)
    s = dual_kschur_truncated(lam, 3, 3)
    for weight in [(2, 1, 0), (1, 1, 1)]:
        got = s.as_dict()[weight]
        want = kostka_foulkes(lam, tuple(sorted(weight, reverse=True)))
        assert {i: c for i, c in enumerate(got.coeffs) if c} == want
