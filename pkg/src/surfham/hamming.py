"""Quantum Hamming code family [[2^r - 1, 2^r - 2r - 1, 3]], r >= 3.

Column j of the check matrix (1-indexed) is the r-bit binary expansion of
j with bit i in row i, so a syndrome read as the little-endian integer N
directly names the flipped qubit. Qubit indices are 1-based throughout;
array storage is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import gf2
from .logical import LogicalBasis, extract_logicals


def hamming_check_matrix(r: int) -> np.ndarray:
    """The r x (2^r - 1) binary check matrix with column j = binary(j)."""
    if r < 3:
        raise ValueError("need r >= 3 for a dual-containing Hamming code")
    n = 2**r - 1
    cols = np.arange(1, n + 1, dtype=np.uint32)
    H = np.zeros((r, n), dtype=np.uint8)
    for i in range(r):
        H[i] = (cols >> i) & 1
    return H


@dataclass
class HammingLevelCode:
    """The level-l member of the concatenation family (r = l + 3)."""

    level: int
    r: int
    n: int
    k: int
    H: np.ndarray
    basis: LogicalBasis = field(repr=False)

    @property
    def L(self) -> np.ndarray:
        """Logical matrix applied to residuals: (k, n), rows are Z logicals."""
        return self.basis.z_logicals

    @property
    def k_stab(self) -> int:
        """Stabilizer generators per sector."""
        return self.r


@lru_cache(maxsize=None)
def build_level_code(level: int) -> HammingLevelCode:
    """Construct the [[2^(l+3) - 1, 2^(l+3) - 2(l+3) - 1, 3]] code."""
    if level < 0:
        raise ValueError("level must be >= 0")
    r = level + 3
    n = 2**r - 1
    k = n - 2 * r
    H = hamming_check_matrix(r)
    basis = extract_logicals(H)
    if basis.k != k:
        raise AssertionError(f"extraction produced {basis.k} logical pairs, expected {k}")
    code = HammingLevelCode(level=level, r=r, n=n, k=k, H=H, basis=basis)
    code.H.setflags(write=False)
    return code


def syndrome(H, e) -> np.ndarray:
    """H @ e mod 2 for a single error vector."""
    return gf2.mat_vec(H, e)


def steane_failure_probability(p: float) -> float:
    """Exact logical flip probability of a [[7,1,3]] block under iid flips.

    Sorting the 128 error patterns by whether lookup decoding leaves a
    logical flip: all 21 weight-2 patterns fail; of the weight-3
    patterns only the 7 Fano lines fail (any other triple corrects onto
    a stabilizer); 28 of 35 weight-4 fail; weight 5 never fails; all 7
    weight-6 patterns and the full flip fail.
    """
    q = 1.0 - p
    return (
        21 * p**2 * q**5
        + 7 * p**3 * q**4
        + 28 * p**4 * q**3
        + 7 * p**6 * q
        + p**7
    )
