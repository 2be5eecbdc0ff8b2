"""Concatenation schemas and resource overhead.

A schema stacks Hamming levels 1..top_level over a base: either the
level-0 [[7,1,3]] code on physical qubits ("steane") or a distance-d
planar surface block per base register ("surface"). Level l uses the
[[2^(l+3)-1, 2^(l+3)-2(l+3)-1, 3]] code; a level-l register carries all
logical qubits produced below it, and block i of level l collects qubit
i from each of the 2^(l+3)-1 registers (identity wiring).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .hamming import HammingLevelCode, build_level_code
from .surface import SurfaceLattice, build_surface


@dataclass
class ConcatenationSchema:
    top_level: int
    base: str                      # "steane" or "surface"
    surface_d: int | None
    codes: list[HammingLevelCode] = field(repr=False)   # levels 1..top_level
    steane: HammingLevelCode | None = field(repr=False)
    lattice: SurfaceLattice | None = field(repr=False)

    @property
    def N(self) -> list[int]:
        return [c.n for c in self.codes]

    @property
    def K(self) -> list[int]:
        return [c.k for c in self.codes]

    @property
    def num_base_registers(self) -> int:
        return prod(self.N)

    @property
    def total_logical(self) -> int:
        return prod(self.K)

    @property
    def base_size(self) -> int:
        if self.base == "steane":
            return 7
        return self.lattice.n_data

    @property
    def total_physical(self) -> int:
        return self.base_size * self.num_base_registers


def build_schema(top_level: int, base: str = "steane", surface_d: int | None = None,
                 allow_even: bool = False) -> ConcatenationSchema:
    if top_level < 0:
        raise ValueError("top_level must be >= 0")
    if base not in ("steane", "surface"):
        raise ValueError(f"unknown base {base!r}")
    if base == "surface" and top_level < 1:
        raise ValueError("surface base needs at least one Hamming level")
    codes = [build_level_code(l) for l in range(1, top_level + 1)]
    steane = build_level_code(0) if base == "steane" else None
    lattice = build_surface(surface_d, allow_even=allow_even) if base == "surface" else None
    return ConcatenationSchema(
        top_level=top_level,
        base=base,
        surface_d=surface_d,
        codes=codes,
        steane=steane,
        lattice=lattice,
    )


def overhead(d: int, level: int, allow_even: bool = False) -> tuple[float, int]:
    """Physical qubits per logical qubit for a surface-Hamming code.

    Level 0 is the bare distance-d surface block. Each added Hamming level
    multiplies the overhead by n_l / k_l. Returns (exact, nearest integer).
    """
    lattice = build_surface(d, allow_even=allow_even)
    exact = float(lattice.n_data)
    for l in range(1, level + 1):
        code = build_level_code(l)
        exact *= code.n / code.k
    return exact, int(round(exact))


def memory_failure_from_single(p_single: float, k: int) -> float:
    """Chance that any of k independent qubits fails: 1 - (1 - p)^k."""
    if not (0.0 <= p_single <= 1.0):
        raise ValueError("probability outside [0, 1]")
    return 1.0 - (1.0 - p_single) ** k
