"""Frame decoding: single blocks, concatenated stacks, sequential engine."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfham.concat import build_schema
from surfham.decode import (
    decode_concatenated,
    decode_concatenated_sequential,
    decode_level,
    decode_packed_sequential,
    hamming_decode_block,
    pack_base_frame,
    residual_after_decode,
)
from surfham.hamming import build_level_code


def test_hamming_decode_block_names_flipped_qubit():
    assert hamming_decode_block([0, 0, 0]) == 0
    assert hamming_decode_block([1, 0, 1]) == 5


def test_weight_zero_and_one_always_clean():
    for level in (0, 1, 2):
        code = build_level_code(level)
        E = np.zeros((code.n + 1, code.n), dtype=np.uint8)
        for q in range(code.n):
            E[q + 1, q] = 1
        out = decode_level(code, E)
        assert out.shape == (code.n + 1, code.k)
        assert not out.any()


def test_weight_two_steane_block_fails():
    # flips on qubits 1 and 2 point the decoder at qubit 3; the residual
    # {1,2,3} overlaps the logical row 0101010 on one position
    code = build_level_code(0)
    e = np.zeros((1, 7), dtype=np.uint8)
    e[0, 0] = e[0, 1] = 1
    out = decode_level(code, e)
    assert out.tolist() == [[1]]
    residual = residual_after_decode(code, e)
    assert residual[0].tolist() == [1, 1, 1, 0, 0, 0, 0]


def test_residual_is_corrected_frame():
    code = build_level_code(1)
    g = np.random.default_rng(3)
    E = (g.random((40, code.n)) < 0.2).astype(np.uint8)
    R = residual_after_decode(code, E)
    # residual always sits in the code's syndrome-zero space
    assert not (R @ code.H.T % 2).any()


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_decode_invariant_under_stabilizer_rows(data):
    level = data.draw(st.integers(0, 1))
    code = build_level_code(level)
    e = np.array(
        data.draw(st.lists(st.integers(0, 1), min_size=code.n, max_size=code.n)),
        dtype=np.uint8,
    )
    picks = data.draw(
        st.lists(st.integers(0, code.H.shape[0] - 1), max_size=4)
    )
    h = np.zeros(code.n, dtype=np.uint8)
    for row in picks:
        h ^= code.H[row].astype(np.uint8)
    a = decode_level(code, e[None, :])
    b = decode_level(code, (e ^ h)[None, :])
    assert np.array_equal(a, b)


def test_inner_logical_error_is_caught_by_outer_level():
    # a full inner logical operator (qubits 2,4,6 of one block) slips
    # through that block's decode but lands as a single flipped register
    # on the outer code, which corrects it
    schema = build_schema(1)
    for block in range(15):
        frame = np.zeros((1, 105), dtype=np.uint8)
        for q in (1, 3, 5):
            frame[0, 7 * block + q] = 1
        assert not decode_concatenated(schema, frame).any()


def test_two_inner_logical_errors_overwhelm_outer_level():
    schema = build_schema(1)
    for b1, b2 in [(0, 1), (2, 9), (5, 14)]:
        frame = np.zeros((1, 105), dtype=np.uint8)
        for block in (b1, b2):
            for q in (1, 3, 5):
                frame[0, 7 * block + q] = 1
        assert decode_concatenated(schema, frame).any()


def test_output_width_matches_logical_count():
    for top_level, k in [(0, 1), (1, 7), (2, 147)]:
        schema = build_schema(top_level)
        frame = np.zeros((3, schema.total_physical), dtype=np.uint8)
        assert decode_concatenated(schema, frame).shape == (3, k)


def test_surface_base_frame_is_register_bits():
    schema = build_schema(1, base="surface", surface_d=3)
    bits = np.zeros((2, 15), dtype=np.uint8)
    bits[0, 4] = 1          # one flipped register: corrected
    bits[1, 2] = bits[1, 8] = 1   # two flipped registers: not
    out = decode_concatenated(schema, bits)
    assert not out[0].any()
    assert out[1].any()


@pytest.mark.parametrize("top_level", [1, 2])
def test_sequential_matches_vectorized(top_level):
    schema = build_schema(top_level)
    g = np.random.default_rng(11)
    frame = (g.random((6, schema.total_physical)) < 0.03).astype(np.uint8)
    fast = decode_concatenated(schema, frame)
    slow = np.stack(
        [decode_concatenated_sequential(schema, row) for row in frame]
    )
    assert np.array_equal(fast, slow)


def test_packed_roundtrip_matches_vectorized():
    schema = build_schema(1)
    g = np.random.default_rng(12)
    frame = (g.random((5, 105)) < 0.05).astype(np.uint8)
    got = np.stack(
        [
            decode_packed_sequential(schema, pack_base_frame(schema, row))
            for row in frame
        ]
    )
    assert np.array_equal(got, decode_concatenated(schema, frame))
