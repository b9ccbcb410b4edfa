from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tridecomp.exactlin import (
    NotSymmetricError,
    is_psd,
    kernel_check,
    ldlt,
    quadratic_form,
    rank,
    reconstruct,
)
from tridecomp.flags import KERNEL_VECTOR, CertificateMatrix


def permuted(m, perm):
    return [[Fraction(m[perm[i]][perm[j]]) for j in range(len(m))] for i in range(len(m))]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def test_identity():
    res = ldlt(identity(3))
    assert res.D == [1, 1, 1]
    assert res.rank == 3 and res.psd


def test_zero_matrix():
    res = ldlt([[0] * 4 for _ in range(4)])
    assert res.rank == 0 and res.psd and res.complete


def test_builtin_matrix():
    m = CertificateMatrix.builtin().entries()
    res = ldlt(m)
    assert res.rank == 6
    assert res.psd
    assert all(d >= 0 for d in res.D)
    assert reconstruct(res) == permuted(m, res.perm)
    assert kernel_check(m, KERNEL_VECTOR)


def test_builtin_first_column_nonzero():
    m = CertificateMatrix.builtin().entries()
    assert m[0][0] == Fraction(3, 20)
    assert not kernel_check(m, [1, 0, 0, 0, 0, 0, 0])
    assert kernel_check(m, [0] * 7)


def test_negated_corner_gives_witness():
    nums = [list(r) for r in CertificateMatrix.builtin().numerators]
    nums[0][0] = -nums[0][0]
    m = CertificateMatrix(12 * 10**9, tuple(map(tuple, nums))).entries()
    ok, x = is_psd(m)
    assert not ok
    assert quadratic_form(m, x) < 0


def test_diag_one_minus_one():
    ok, x = is_psd([[1, 0], [0, -1]])
    assert not ok
    assert x == [0, 1]


def test_zero_pivot_with_offdiagonal():
    m = [[0, 1], [1, 0]]
    res = ldlt(m)
    assert not res.complete and not res.psd
    assert quadratic_form([[Fraction(v) for v in r] for r in m], res.witness) < 0


def test_asymmetric_rejected():
    with pytest.raises(NotSymmetricError):
        ldlt([[1, 2], [3, 4]])
    with pytest.raises(NotSymmetricError):
        is_psd([[1, 2], [3, 4]])


def test_kernel_dimension_mismatch():
    with pytest.raises(ValueError):
        kernel_check(identity(3), [1, 2])


def test_pivot_tie_break_lowest_index():
    assert ldlt([[2, 0, 0], [0, 2, 0], [0, 0, 1]]).perm == [0, 1, 2]
    assert ldlt([[1, 0, 0], [0, 5, 0], [0, 0, 5]]).perm == [1, 2, 0]


small_ints = st.integers(-4, 4)


@st.composite
def rect(draw):
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 5))
    return [[draw(small_ints) for _ in range(cols)] for _ in range(rows)]


def gram(a):
    cols = len(a[0])
    return [[Fraction(sum(a[k][i] * a[k][j] for k in range(len(a)))) for j in range(cols)]
            for i in range(cols)]


@settings(max_examples=200, deadline=None)
@given(rect())
def test_gram_matrices_are_psd(a):
    m = gram(a)
    res = ldlt(m)
    assert res.psd and res.complete
    assert reconstruct(res) == permuted(m, res.perm)
    # rank of A^T A equals rank of A; compare with an independent elimination
    assert res.rank == _rank_by_elimination(a)


@settings(max_examples=200, deadline=None)
@given(rect(), st.integers(1, 50))
def test_shifted_gram_witness(a, k):
    m = gram(a)
    n = len(m)
    # shifting by more than the smallest diagonal entry forces indefiniteness
    eps = min(m[i][i] for i in range(n)) + Fraction(1, k)
    shifted = [[m[i][j] - (eps if i == j else 0) for j in range(n)] for i in range(n)]
    ok, x = is_psd(shifted)
    assert not ok
    assert quadratic_form(shifted, x) < 0


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_symmetric_random(b):
    n = len(b)
    m = [[Fraction(b[i][j] + b[j][i]) for j in range(n)] for i in range(n)]
    res = ldlt(m)
    if res.complete:
        assert reconstruct(res) == permuted(m, res.perm)
    if not res.psd:
        assert quadratic_form(m, res.witness) < 0
    else:
        assume(n <= 3)
        # brute check on a grid of small vectors
        grid = range(-2, 3)
        from itertools import product
        for x in product(grid, repeat=n):
            assert quadratic_form(m, [Fraction(v) for v in x]) >= 0


def _rank_by_elimination(a):
    m = [[Fraction(v) for v in row] for row in a]
    r = 0
    cols = len(m[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def test_rank_helper():
    assert rank(identity(4)) == 4
