"""Unrotated planar surface code on a (2d-1) x (2d-1) coordinate grid.

Data qubits sit at positions with i+j even (d^2 on the even-even
sublattice, (d-1)^2 on the odd-odd one). Z-checks (plaquettes) sit at
(i odd, j even), X-checks (stars) at (i even, j odd), d(d-1) of each.
Bit-flip chains terminate undetected on the top (i = 0) and bottom
(i = 2d-2) edges, so a plaquette's boundary distance counts vertical
steps off the lattice. One logical qubit; the stored logical_z support
is the top boundary row (weight d, even overlap with every star), the
minimum logical X is the left column (weight d).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass
class SurfaceLattice:
    d: int
    n_data: int
    qubit_coords: list[tuple[int, int]]
    qubit_index: dict[tuple[int, int], int] = field(repr=False)
    plaquette_coords: list[tuple[int, int]]
    plaquette_support: list[list[int]] = field(repr=False)
    H_plaq: np.ndarray = field(repr=False)
    star_coords: list[tuple[int, int]] = field(repr=False)
    star_support: list[list[int]] = field(repr=False)
    logical_z: np.ndarray = field(repr=False)
    logical_x: np.ndarray = field(repr=False)

    @property
    def n_plaq(self) -> int:
        return len(self.plaquette_coords)

    def check_distance(self, a: int, b: int) -> int:
        """Lattice (Manhattan) distance between plaquettes a and b."""
        (i1, j1), (i2, j2) = self.plaquette_coords[a], self.plaquette_coords[b]
        return (abs(i1 - i2) + abs(j1 - j2)) // 2

    def boundary_distance(self, a: int) -> int:
        i, _ = self.plaquette_coords[a]
        return min((i + 1) // 2, (2 * self.d - 1 - i) // 2)

    def path_between(self, a: int, b: int) -> list[int]:
        """Canonical correction path: vertical leg first, then horizontal."""
        (i1, j1), (i2, j2) = self.plaquette_coords[a], self.plaquette_coords[b]
        qubits = []
        s = 1 if i2 > i1 else -1
        for i in range(i1 + s, i2, 2 * s):
            qubits.append(self.qubit_index[(i, j1)])
        t = 1 if j2 > j1 else -1
        for j in range(j1 + t, j2, 2 * t):
            qubits.append(self.qubit_index[(i2, j)])
        return qubits

    def path_to_boundary(self, a: int) -> list[int]:
        """Shortest vertical escape; ties prefer the top edge."""
        i, j = self.plaquette_coords[a]
        top = (i + 1) // 2
        bottom = (2 * self.d - 1 - i) // 2
        if top <= bottom:
            rows = range(i - 1, -1, -2)
        else:
            rows = range(i + 1, 2 * self.d - 1, 2)
        return [self.qubit_index[(r, j)] for r in rows]


def build_surface(d: int, allow_even: bool = False) -> SurfaceLattice:
    """Build the distance-d planar lattice.

    Odd d >= 3 by default; even d must be requested explicitly.
    """
    if d < 3:
        raise ValueError("surface distance must be >= 3")
    if d % 2 == 0 and not allow_even:
        raise ValueError("even distances must be enabled explicitly (allow_even=True)")
    span = 2 * d - 1
    qubit_coords = [(i, j) for i in range(span) for j in range(span) if (i + j) % 2 == 0]
    qubit_index = {c: idx for idx, c in enumerate(qubit_coords)}
    n_data = len(qubit_coords)
    assert n_data == d * d + (d - 1) * (d - 1)

    plaquette_coords = [(i, j) for i in range(1, span, 2) for j in range(0, span, 2)]
    star_coords = [(i, j) for i in range(0, span, 2) for j in range(1, span, 2)]

    def neighbors(i: int, j: int) -> list[int]:
        out = []
        for di, dj in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            c = (i + di, j + dj)
            if c in qubit_index:
                out.append(qubit_index[c])
        return out

    plaquette_support = [neighbors(i, j) for i, j in plaquette_coords]
    star_support = [neighbors(i, j) for i, j in star_coords]

    H_plaq = np.zeros((len(plaquette_coords), n_data), dtype=np.uint8)
    for row, support in enumerate(plaquette_support):
        H_plaq[row, support] = 1

    logical_z = np.zeros(n_data, dtype=np.uint8)
    for j in range(0, span, 2):
        logical_z[qubit_index[(0, j)]] = 1
    logical_x = np.zeros(n_data, dtype=np.uint8)
    for i in range(0, span, 2):
        logical_x[qubit_index[(i, 0)]] = 1

    return SurfaceLattice(
        d=d,
        n_data=n_data,
        qubit_coords=qubit_coords,
        qubit_index=qubit_index,
        plaquette_coords=plaquette_coords,
        plaquette_support=plaquette_support,
        H_plaq=H_plaq,
        star_coords=star_coords,
        star_support=star_support,
        logical_z=logical_z,
        logical_x=logical_x,
    )
