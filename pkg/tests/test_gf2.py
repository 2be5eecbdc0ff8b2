"""Binary linear algebra invariants."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfham import gf2


def random_matrix(draw, rows, cols):
    bits = draw(st.lists(st.integers(0, 1), min_size=rows * cols, max_size=rows * cols))
    return np.array(bits, dtype=np.uint8).reshape(rows, cols)


matrix_strategy = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(
            st.integers(0, 1), min_size=r * c, max_size=r * c
        ).map(lambda bits: np.array(bits, dtype=np.uint8).reshape(r, c))
    )
)


def test_parity_dot_basics():
    assert gf2.parity_dot([1, 1, 0], [1, 0, 1]) == 1
    assert gf2.parity_dot([1, 1, 0], [1, 1, 0]) == 0
    assert gf2.parity_dot([0, 0, 0], [1, 1, 1]) == 0


def test_mat_vec_and_mat_mul_agree():
    M = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    v = np.array([1, 1, 1], dtype=np.uint8)
    assert gf2.mat_vec(M, v).tolist() == [0, 0]
    prod = gf2.mat_mul(M, M.T)
    assert prod.tolist() == [[0, 1], [1, 0]]


def test_row_reduce_known_case():
    M = np.array(
        [[1, 1, 0, 1],
         [0, 1, 1, 0],
         [1, 0, 1, 1]], dtype=np.uint8
    )
    R, rk, pivots = gf2.row_reduce(M)
    assert rk == 2
    assert list(pivots) == [0, 1]
    # third row is the sum of the first two
    assert not R[2].any()


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_row_reduce_idempotent(M):
    R, rk, pivots = gf2.row_reduce(M)
    R2, rk2, pivots2 = gf2.row_reduce(R)
    assert rk == rk2
    assert list(pivots) == list(pivots2)
    assert np.array_equal(R, R2)
    assert rk == len(pivots)


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_kernel_annihilates(M):
    K = gf2.kernel_basis(M)
    assert K.shape[0] == M.shape[1] - gf2.rank(M)
    if K.shape[0]:
        assert not (gf2.mat_mul(M, K.T) % 2).any()
        assert gf2.rank(K) == K.shape[0]


@settings(max_examples=60, deadline=None)
@given(matrix_strategy, st.integers(0, 255))
def test_row_space_membership(M, picker):
    # combinations of rows are members
    combo = np.zeros(M.shape[1], dtype=np.uint8)
    for i in range(M.shape[0]):
        if (picker >> i) & 1:
            combo ^= M[i]
    assert gf2.in_row_space(M, combo)


def test_row_space_non_member():
    M = np.array([[1, 0, 0, 0], [0, 1, 0, 0]], dtype=np.uint8)
    assert not gf2.in_row_space(M, np.array([0, 0, 1, 0], dtype=np.uint8))
    assert gf2.in_row_space(M, np.array([1, 1, 0, 0], dtype=np.uint8))


def test_rank_of_identity():
    assert gf2.rank(np.eye(5, dtype=np.uint8)) == 5
