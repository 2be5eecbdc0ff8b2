"""Counter-based random streams for reproducible campaigns.

Every consumer derives its stream from (seed, *ids) through Philox key
material, so results are independent of worker count and evaluation
order; chunk layout is a fixed campaign constant, never tied to the
process pool. Asking for the same ids twice yields the same bits.
"""

from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def _pack_key(seed: int, ids: tuple[int, ...]) -> np.ndarray:
    """Fold (seed, ids) into the 2-word Philox key."""
    lo = seed & _MASK64
    hi = 0
    for i, x in enumerate(ids):
        hi ^= ((x & _MASK64) * (_GOLDEN + 2 * i + 1)) & _MASK64
        hi = (hi * _GOLDEN + i + 1) & _MASK64
    return np.array([lo, hi], dtype=np.uint64)


def stream(seed: int, *ids: int) -> np.random.Generator:
    """Generator for the substream named by ids under the campaign seed."""
    return np.random.Generator(np.random.Philox(key=_pack_key(seed, ids)))


def sample_errors(seed: int, point: int, chunk: int, shape: tuple[int, ...], p: float) -> np.ndarray:
    """iid bit flips for one chunk of trials, keyed (seed, point, chunk)."""
    g = stream(seed, point, chunk)
    return (g.random(shape) < p).astype(np.uint8)
