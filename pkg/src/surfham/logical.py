"""Logical operator extraction for dual-containing CSS codes.

The extraction runs a symplectic Gram-Schmidt pass over the codewords of
the classical code lifted to Pauli operators: every generator-matrix row g
enters twice, once as the X-type operator with support g and once as the
Z-type copy. Pairs that anticommute are set aside as hyperbolic (logical)
pairs and the remaining generators are swept to commute with them; the
generators that end up commuting with everything span the stabilizer and
are dropped.

Because the input is CSS (all-X or all-Z generators) the sweep never mixes
types: an X-type generator can only anticommute with Z-type operators, so
it is only ever multiplied by the X-type pair member, and vice versa. The
output is therefore a canonical hyperbolic basis: z_logicals[i] has odd
overlap with x_logicals[j] exactly when i == j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2


@dataclass
class LogicalBasis:
    """Paired logical bases for one code block.

    z_logicals is the matrix the decoder applies to residuals (a frame
    bit means "coefficient of the paired X logical"), x_logicals is the
    dual basis, and the stabilizer rows are returned for validation.
    """

    z_logicals: np.ndarray   # (k, n) uint8
    x_logicals: np.ndarray   # (k, n) uint8
    stabilizers_x: np.ndarray
    stabilizers_z: np.ndarray

    @property
    def k(self) -> int:
        return self.z_logicals.shape[0]


def _symplectic(a: tuple[np.ndarray, np.ndarray], b: tuple[np.ndarray, np.ndarray]) -> int:
    ax, az = a
    bx, bz = b
    return (gf2.parity_dot(ax, bz) + gf2.parity_dot(az, bx)) % 2


def extract_logicals(H) -> LogicalBasis:
    """Extract logical operators of the CSS code with H_X = H_Z = H.

    H must satisfy H @ H.T = 0 mod 2 (dual-containing classical code).
    Raises ValueError if it does not, or if a hyperbolic pair comes out
    type-mixed (either means the generator set was inconsistent).
    """
    H = gf2.as_bits(H)
    n = H.shape[1]
    if gf2.mat_mul(H, H.T).any():
        raise ValueError("check matrix is not self-orthogonal; code is not dual-containing")
    G = gf2.kernel_basis(H)
    zeros = np.zeros(n, dtype=np.uint8)
    gens: list[tuple[np.ndarray, np.ndarray]] = []
    for row in G:
        gens.append((row.copy(), zeros.copy()))   # X-type lift
        gens.append((zeros.copy(), row.copy()))   # Z-type copy
    pairs: list[tuple[tuple, tuple]] = []
    singles: list[tuple] = []
    while gens:
        a = gens.pop(0)
        partner = None
        for j, g in enumerate(gens):
            if _symplectic(a, g) == 1:
                partner = j
                break
        if partner is None:
            singles.append(a)
            continue
        b = gens.pop(partner)
        for i, g in enumerate(gens):
            alpha = _symplectic(g, a)
            beta = _symplectic(g, b)
            if alpha or beta:
                gx, gz = g
                if beta:
                    gx, gz = gx ^ a[0], gz ^ a[1]
                if alpha:
                    gx, gz = gx ^ b[0], gz ^ b[1]
                gens[i] = (gx, gz)
        pairs.append((a, b))
    x_rows = []
    z_rows = []
    for a, b in pairs:
        # order each pair as (X-type, Z-type)
        if not a[1].any() and not b[0].any():
            x_op, z_op = a, b
        elif not b[1].any() and not a[0].any():
            x_op, z_op = b, a
        else:
            raise ValueError("symplectic processing produced a mixed-type pair")
        x_rows.append(x_op[0])
        z_rows.append(z_op[1])
    stab_x = [g[0] for g in singles if g[0].any()]
    stab_z = [g[1] for g in singles if g[1].any()]
    empty = np.zeros((0, n), dtype=np.uint8)
    return LogicalBasis(
        z_logicals=np.array(z_rows, dtype=np.uint8) if z_rows else empty,
        x_logicals=np.array(x_rows, dtype=np.uint8) if x_rows else empty,
        stabilizers_x=np.array(stab_x, dtype=np.uint8) if stab_x else empty,
        stabilizers_z=np.array(stab_z, dtype=np.uint8) if stab_z else empty,
    )


def validate_logicals(H, L) -> bool:
    """Check that L is a valid logical matrix for the code with check matrix H.

    Valid means: every row commutes with all stabilizers (H @ L.T = 0),
    no row lies in the stabilizer row space, and the rows stacked on H
    have full rank (rows independent modulo the stabilizer).
    """
    H = gf2.as_bits(H)
    L = gf2.as_bits(L)
    if L.shape[1] != H.shape[1]:
        return False
    if gf2.mat_mul(H, L.T).any():
        return False
    for row in L:
        if gf2.in_row_space(H, row):
            return False
    stacked = np.vstack([H, L])
    return gf2.rank(stacked) == gf2.rank(H) + L.shape[0]


def register_index(i: int, k: int, K_l: int) -> int:
    """Map (logical i of block k) to its register-local index, 1-based.

    Block k of a level-(l+1) concatenation re-exposes logical qubit i of
    the level-l code as register qubit (k-1)*K_l + i.
    """
    if not (1 <= i <= K_l):
        raise ValueError(f"logical index {i} outside [1, {K_l}]")
    if k < 1:
        raise ValueError("block index is 1-based")
    return (k - 1) * K_l + i


def block_coords(index: int, K_l: int) -> tuple[int, int]:
    """Inverse of register_index: register-local index -> (i, k)."""
    if index < 1:
        raise ValueError("register index is 1-based")
    k = (index - 1) // K_l + 1
    i = (index - 1) % K_l + 1
    return i, k
