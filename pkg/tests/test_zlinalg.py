import itertools
from functools import reduce
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from conftest import random_unimodular_intmatrix
from pfrigid.zlinalg import (
    HomologySummary,
    IntMatrix,
    bareiss_det,
    cokernel_invariants,
    integer_kernel,
    smith_normal_form,
)


def M(rows):
    return IntMatrix.from_rows(rows)


def check_snf(a):
    res = smith_normal_form(a)
    assert res.u @ a @ res.v == res.d
    assert res.u.det() in (1, -1)
    assert res.v.det() in (1, -1)
    d = res.d
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d[i, j] == 0
    diag = res.diagonal
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        assert (y == 0) or (x != 0 and y % x == 0)
    return diag


@pytest.mark.parametrize(
    "rows, diag",
    [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[0, 6], [0, 0]], [6, 0]),
        ([[1, 0], [0, 1]], [1, 1]),
        ([[1, 1], [1, 1]], [1, 0]),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ],
)
def test_snf_examples(rows, diag):
    assert check_snf(M(rows)) == diag


def test_snf_rectangular_and_degenerate():
    assert check_snf(M([[0, 0, 0]])) == [0]
    assert check_snf(M([[4], [6]])) == [2]
    assert check_snf(M([[0]])) == [0]
    with pytest.raises(ValueError):
        smith_normal_form(IntMatrix(0, 2, ()))


def test_snf_is_reproducible():
    a = M([[3, -7, 2], [5, 1, 9]])
    assert smith_normal_form(a) == smith_normal_form(a)


def test_snf_big_entries():
    a = M([[10**30 + 1, 10**20], [7 * 10**25, 3]])
    check_snf(a)


def test_cokernel_invariants_examples():
    assert cokernel_invariants(M([[0, 0], [0, 0]])) == HomologySummary(2, ())
    assert cokernel_invariants(M([[0, 6], [0, 0]])) == HomologySummary(1, (6,))
    assert cokernel_invariants(M([[1, 1], [1, 1]])) == HomologySummary(1, ())
    assert cokernel_invariants(M([[2, 0], [0, 3]])) == HomologySummary(0, (6,))


def test_homology_summary_str():
    assert str(HomologySummary(2, (6,))) == "Z^2 + Z/6"
    assert str(HomologySummary(0)) == "0"
    assert HomologySummary(1, (2, 4)).torsion_order == 8


def test_integer_kernel():
    ker = integer_kernel(M([[1, 2, 3], [2, 4, 6]]))
    assert len(ker) == 2
    for v in ker:
        assert 1 * v[0] + 2 * v[1] + 3 * v[2] == 0


def minors_gcd(rows, k):
    n, m = len(rows), len(rows[0])
    dets = [
        bareiss_det([[rows[i][j] for j in cs] for i in rs])
        for rs in itertools.combinations(range(n), k)
        for cs in itertools.combinations(range(m), k)
    ]
    return reduce(gcd, dets, 0)


def test_diagonal_product_is_gcd_of_maximal_minors(rng):
    # independent route: determinantal divisors by brute-force minor enumeration
    for _ in range(60):
        rows = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        diag = [x for x in check_snf(M(rows)) if x]
        r = len(diag)
        if r == 0:
            continue
        assert prod(diag) == minors_gcd(rows, r)
        if r < 3:
            assert minors_gcd(rows, r + 1) == 0


def test_matches_sympy_smith_form(rng):
    for _ in range(40):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        ours = check_snf(M(rows))
        theirs = sympy_snf(Matrix(rows))
        ref = sorted(abs(theirs[i, i]) for i in range(min(n, m)))
        assert sorted(ours) == ref


def test_cokernel_invariant_under_unimodular_change(rng):
    for _ in range(100):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a = M([[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)])
        u = random_unimodular_intmatrix(rng, n)
        v = random_unimodular_intmatrix(rng, m)
        assert cokernel_invariants(u @ a @ v) == cokernel_invariants(a)


small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(
            st.lists(st.integers(-50, 50), min_size=m, max_size=m), min_size=n, max_size=n
        )
    )
)


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_snf_properties_hypothesis(rows):
    check_snf(M(rows))


def test_bareiss_matches_expansion(rng):
    for _ in range(50):
        rows = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        expected = int(Matrix(rows).det())
        assert bareiss_det(rows) == expected
