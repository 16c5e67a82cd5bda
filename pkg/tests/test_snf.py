"""Integer matrix routines: determinants, Smith form, kernels, solving."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hktheta.snf import (
    integer_det,
    integer_kernel_basis,
    rational_solve,
    smith_normal_form,
    snf_diagonal,
)


def fraction_det(mat):
    """Independent determinant oracle: Gaussian elimination over Fraction."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


square_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-30, 30), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)

rect_matrices = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda shape: st.lists(
        st.lists(st.integers(-20, 20), min_size=shape[1], max_size=shape[1]),
        min_size=shape[0],
        max_size=shape[0],
    )
)


def test_integer_det_golden():
    assert integer_det([[0, 1], [1, 0]]) == -1
    assert integer_det([[1, 0], [0, 1]]) == 1
    assert integer_det([[2, 0], [0, 3]]) == 6
    assert integer_det([[1, 2], [2, 4]]) == 0
    assert integer_det([[-2]]) == -2
    assert integer_det([]) == 1


def test_integer_det_rejects_nonsquare():
    with pytest.raises(ValueError):
        integer_det([[1, 2, 3], [4, 5, 6]])


@given(square_matrices)
def test_integer_det_matches_fraction_elimination(mat):
    assert integer_det(mat) == fraction_det(mat)


@given(square_matrices)
def test_det_row_swap_flips_sign(mat):
    if len(mat) < 2:
        return
    swapped = [mat[1], mat[0]] + mat[2:]
    assert integer_det(swapped) == -integer_det(mat)


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


@given(rect_matrices)
def test_smith_form_factorization(mat):
    s, u, v = smith_normal_form(mat)
    rows, cols = len(mat), len(mat[0])
    assert len(s) == rows and len(s[0]) == cols
    # u and v are unimodular
    assert integer_det(u) in (1, -1)
    assert integer_det(v) in (1, -1)
    assert _mat_mul(_mat_mul(u, mat), v) == s
    # s is diagonal, nonnegative, with a divisibility chain
    diag = []
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert s[i][j] == 0
            else:
                diag.append(s[i][j])
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0


def test_snf_diagonal_golden():
    assert snf_diagonal([[4, 0], [0, 6]]) == [2, 12]
    assert snf_diagonal([[2, 1], [0, 2]]) == [1, 4]
    assert snf_diagonal([[0, 0], [0, 0]]) == [0, 0]
    assert snf_diagonal([[1, 0], [0, 1]]) == [1, 1]


def _fraction_rank(mat):
    rows = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@given(rect_matrices)
def test_kernel_basis_annihilates_and_has_full_nullity(mat):
    kernel = integer_kernel_basis(mat)
    cols = len(mat[0])
    for vec in kernel:
        assert len(vec) == cols
        assert all(isinstance(x, int) for x in vec)
        assert all(sum(row[j] * vec[j] for j in range(cols)) == 0 for row in mat)
    assert len(kernel) == cols - _fraction_rank(mat)
    # basis vectors are linearly independent
    if kernel:
        assert _fraction_rank(kernel) == len(kernel)


@given(square_matrices)
@settings(max_examples=60)
def test_rational_solve_round_trip(mat):
    n = len(mat)
    if integer_det(mat) == 0:
        with pytest.raises(ValueError):
            rational_solve(mat, [[0] for _ in range(n)])
        return
    rhs = [[i + 1] for i in range(n)]
    x = rational_solve(mat, rhs)
    assert all(
        sum(Fraction(mat[i][j]) * x[j][0] for j in range(n)) == rhs[i][0]
        for i in range(n)
    )


def test_rational_solve_golden():
    assert rational_solve([[2, 0], [0, 4]], [[1], [1]]) == [
        [Fraction(1, 2)],
        [Fraction(1, 4)],
    ]
