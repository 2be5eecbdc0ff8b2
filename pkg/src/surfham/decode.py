"""Recursive bottom-up decoding of concatenated Hamming codes.

Per block: the syndrome read as a little-endian integer N names the
corrupted qubit (N = 0 means clean), the correction is the unit vector at
N, and the logical matrix maps the residual e xor q to the block's frame
bits for the next level. Identity wiring keeps every structure instance
contiguous, so one level is a reshape, a transpose, and a batched block
decode.

Two engines cover the two uses: a vectorized numpy engine for Monte
Carlo campaigns (arbitrary leading batch axes) and a plain-Python
sequential engine that decodes one block at a time for the timing
benchmark's no-parallelism arm.
"""

from __future__ import annotations

import numpy as np

from .concat import ConcatenationSchema
from .hamming import HammingLevelCode


def hamming_decode_block(s) -> int:
    """Syndrome bits -> index of the qubit to flip (0 = none)."""
    return int(sum(int(b) << i for i, b in enumerate(s)))


def decode_level(code: HammingLevelCode, E: np.ndarray) -> np.ndarray:
    """Decode one code level. E: (..., n) error bits -> (..., k) frame bits."""
    E = np.asarray(E, dtype=np.uint8)
    if E.shape[-1] != code.n:
        raise ValueError(f"expected block length {code.n}, got {E.shape[-1]}")
    lead = E.shape[:-1]
    flat = E.reshape(-1, code.n)
    big = flat.shape[0] >= 8192       # route big matmuls through BLAS;
    if big:                           # sums <= 63, exact in float32
        Hf = code.H.T.astype(np.float32)
        S = (flat.astype(np.float32) @ Hf).astype(np.int32)
    else:
        S = (flat @ code.H.T).astype(np.int32)
    S &= 1
    N = S @ (1 << np.arange(code.r, dtype=np.int32))
    R = flat.copy()
    hit = np.nonzero(N)[0]
    R[hit, N[hit] - 1] ^= 1
    if big:
        out = (R.astype(np.float32) @ code.L.T.astype(np.float32)).astype(np.uint8)
    else:
        out = R @ code.L.T
    out &= 1
    return out.reshape(lead + (code.k,))


def residual_after_decode(code: HammingLevelCode, E: np.ndarray) -> np.ndarray:
    """The post-correction residual e xor q, same shape as E."""
    E = np.asarray(E, dtype=np.uint8)
    flat = E.reshape(-1, code.n)
    S = flat @ code.H.T
    S &= 1
    N = S.astype(np.int32) @ (1 << np.arange(code.r, dtype=np.int32))
    R = flat.copy()
    hit = np.nonzero(N)[0]
    R[hit, N[hit] - 1] ^= 1
    return R.reshape(E.shape)


def decode_concatenated(schema: ConcatenationSchema, frame: np.ndarray) -> np.ndarray:
    """Decode full frames down to the top level's logical frame bits.

    For a steane base, frame holds physical bits, shape (..., total_physical).
    For a surface base, frame holds one error bit per surface register,
    shape (..., num_base_registers); the surface blocks themselves are
    handled upstream by sampling their logical error rate.
    Returns (..., total_logical) logical failure bits.
    """
    frame = np.asarray(frame, dtype=np.uint8)
    single = frame.ndim == 1
    if single:
        frame = frame[None, :]
    T = frame.shape[0]
    if schema.base == "steane":
        expected = schema.total_physical
        if frame.shape[1] != expected:
            raise ValueError(f"expected {expected} physical bits, got {frame.shape[1]}")
        blocks = frame.reshape(T, schema.num_base_registers, 7)
        current = decode_level(schema.steane, blocks).reshape(T, -1)
    else:
        expected = schema.num_base_registers
        if frame.shape[1] != expected:
            raise ValueError(f"expected {expected} register bits, got {frame.shape[1]}")
        current = frame
    k_prev = 1
    for code in schema.codes:
        m = current.shape[1]
        u = m // (code.n * k_prev)
        grouped = current.reshape(T, u, code.n, k_prev)
        blocks = np.ascontiguousarray(grouped.transpose(0, 1, 3, 2))
        out = decode_level(code, blocks)            # (T, u, k_prev, k)
        current = out.reshape(T, -1)
        k_prev *= code.k
    return current[0] if single else current


# ---------------------------------------------------------------------------
# sequential engine (benchmark arm)

def sequential_masks(code: HammingLevelCode) -> tuple[list[int], list[int]]:
    """Row bitmasks of H and L with qubit j on bit j-1."""
    h_masks = [int(sum(1 << j for j in range(code.n) if code.H[i, j])) for i in range(code.r)]
    l_masks = [int(sum(1 << j for j in range(code.n) if code.L[i, j])) for i in range(code.k)]
    return h_masks, l_masks


def sequential_decode_block(e: int, h_masks: list[int], l_masks: list[int]) -> int:
    """Single-block decode on packed ints; returns the frame bits as an int."""
    n = 0
    for i, mask in enumerate(h_masks):
        if (e & mask).bit_count() & 1:
            n |= 1 << i
    r = e ^ (1 << (n - 1)) if n else e
    out = 0
    for i, mask in enumerate(l_masks):
        if (r & mask).bit_count() & 1:
            out |= 1 << i
    return out


def pack_base_frame(schema: ConcatenationSchema, frame: np.ndarray) -> list[int]:
    """Physical bits -> one packed int per base block (data prep, untimed)."""
    frame = np.asarray(frame, dtype=np.uint8)
    if schema.base != "steane":
        return [int(b) for b in frame]
    blocks = frame.reshape(-1, 7)
    packed = blocks.astype(np.int64) @ (1 << np.arange(7, dtype=np.int64))
    return [int(x) for x in packed]


def decode_packed_sequential(schema: ConcatenationSchema, packed: list[int]) -> np.ndarray:
    """Block-at-a-time decode of one packed frame; the timed benchmark arm.

    Every block at every level is processed in order with no
    vectorization. Same outcome contract as decode_concatenated.
    """
    masks = [sequential_masks(c) for c in schema.codes]
    if schema.base == "steane":
        hm, lm = sequential_masks(schema.steane)
        bits = [sequential_decode_block(e, hm, lm) for e in packed]
    else:
        bits = list(packed)
    k_prev = 1
    for code, (hm, lm) in zip(schema.codes, masks):
        m = len(bits)
        u = m // (code.n * k_prev)
        nxt = [0] * (u * k_prev * code.k)
        for a in range(u):
            base = a * code.n * k_prev
            out_base = a * k_prev * code.k
            for k in range(k_prev):
                e = 0
                for j in range(code.n):
                    if bits[base + j * k_prev + k]:
                        e |= 1 << j
                out = sequential_decode_block(e, hm, lm)
                slot = out_base + k * code.k
                for i in range(code.k):
                    nxt[slot + i] = (out >> i) & 1
        bits = nxt
        k_prev *= code.k
    return np.array(bits, dtype=np.uint8)


def decode_concatenated_sequential(schema: ConcatenationSchema, frame: np.ndarray) -> np.ndarray:
    """Convenience wrapper: pack the frame, then decode sequentially."""
    return decode_packed_sequential(schema, pack_base_frame(schema, frame))
