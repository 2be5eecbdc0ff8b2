"""Linear algebra over GF(2).

Vectors and matrices are numpy arrays of dtype uint8 holding 0/1 entries.
Row reduction always picks the leftmost available pivot column and the
lowest-index row for it, so reduced forms (and everything derived from
them: kernels, membership tests) are deterministic.
"""

from __future__ import annotations

import numpy as np


def as_bits(a) -> np.ndarray:
    """Coerce to a uint8 0/1 array."""
    arr = np.asarray(a, dtype=np.uint8) & 1
    return arr


def parity_dot(u, v) -> int:
    """Inner product of two bit vectors mod 2."""
    u = as_bits(u)
    v = as_bits(v)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    return int(np.bitwise_xor.reduce(u & v)) if u.size else 0


def mat_vec(M, v) -> np.ndarray:
    """M @ v mod 2."""
    M = as_bits(M)
    v = as_bits(v)
    return (M.astype(np.int64) @ v.astype(np.int64) % 2).astype(np.uint8)


def mat_mul(A, B) -> np.ndarray:
    """A @ B mod 2."""
    A = as_bits(A)
    B = as_bits(B)
    return (A.astype(np.int64) @ B.astype(np.int64) % 2).astype(np.uint8)


def row_reduce(M) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form over GF(2).

    Returns (R, rank, pivot_cols). R has the same shape as M, pivot columns
    are listed left to right, and the reduction is fully deterministic:
    for each candidate column the lowest remaining row with a 1 is chosen.
    """
    R = as_bits(M).copy()
    if R.ndim != 2:
        raise ValueError("row_reduce expects a 2-d array")
    rows, cols = R.shape
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        ones = np.nonzero(R[r:, c])[0]
        if ones.size == 0:
            continue
        t = r + int(ones[0])
        if t != r:
            R[[r, t]] = R[[t, r]]
        # clear every other 1 in this column
        hits = np.nonzero(R[:, c])[0]
        for h in hits:
            if h != r:
                R[h] ^= R[r]
        pivot_cols.append(c)
        r += 1
    return R, len(pivot_cols), pivot_cols


def rank(M) -> int:
    return row_reduce(M)[1]


def kernel_basis(M) -> np.ndarray:
    """Basis of the right null space of M over GF(2), one vector per row.

    Deterministic free-variable construction: for each non-pivot column f
    the basis vector has a 1 at f and the pivot entries needed to cancel
    column f of the reduced form. Returns a (cols - rank, cols) array;
    a full-rank-by-columns matrix yields an empty (0, cols) array.
    """
    M = as_bits(M)
    R, rk, pivots = row_reduce(M)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            basis[i, p] = R[r, f]
    return basis


def in_row_space(M, v) -> bool:
    """True iff v is a GF(2) linear combination of the rows of M."""
    M = as_bits(M)
    v = as_bits(v)
    if v.ndim != 1 or v.shape[0] != M.shape[1]:
        raise ValueError("vector length must match matrix column count")
    R, rk, pivots = row_reduce(M)
    residue = v.copy()
    for r, p in enumerate(pivots):
        if residue[p]:
            residue ^= R[r]
    return not residue.any()
