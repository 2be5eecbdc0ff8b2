"""Matching decoder versus brute-force minimum-weight references."""

import numpy as np
import pytest

from surfham.mwpm import SurfaceDecoder
from surfham.surface import build_surface

from oracles import dp_matching_weight, enumerate_surface_cosets


@pytest.fixture(scope="module")
def d3():
    return SurfaceDecoder(build_surface(3))


@pytest.fixture(scope="module")
def d3_cosets(d3):
    lat = d3.lattice
    return enumerate_surface_cosets(lat.H_plaq, lat.logical_z)


def _syndrome_array(bits: bytes) -> np.ndarray:
    return np.frombuffer(bits, dtype=np.uint8).copy()


def test_corrections_reproduce_their_syndrome(d3):
    lat = d3.lattice
    for s_int in range(1 << lat.n_plaq):
        s = np.array([(s_int >> i) & 1 for i in range(lat.n_plaq)], dtype=np.uint8)
        c = d3.decode_correction(s)
        assert np.array_equal(lat.H_plaq @ c % 2, s)


def test_corrections_achieve_exhaustive_minimum(d3, d3_cosets):
    for bits, (min_overall, _, _) in d3_cosets.items():
        c = d3.decode_correction(_syndrome_array(bits))
        assert int(c.sum()) == min_overall


def test_failure_set_matches_minimum_weight_oracle(d3, d3_cosets):
    """Every error pattern lands on the oracle's side of the ledger.

    Where one class of the syndrome coset is strictly lighter, decoding
    must succeed exactly on that class. Where the classes tie at equal
    minimum weight no decoder can prefer one on weight alone, so there
    the failure bit must equal disagreement with the decoder's own
    (minimum-weight) correction class.
    """
    lat = d3.lattice
    n = lat.n_data
    all_errors = (
        (np.arange(1 << n)[:, None] >> np.arange(n)[None, :]) & 1
    ).astype(np.uint8)
    got = d3.failure_bits(all_errors)
    parity = all_errors @ lat.logical_z % 2
    syndromes = (all_errors @ lat.H_plaq.T % 2).astype(np.uint8)
    decisive = flagged = 0
    for e_idx in range(1 << n):
        bits = syndromes[e_idx].tobytes()
        _, min_trivial, min_flipped = d3_cosets[bits]
        if min_trivial != min_flipped:
            expect = int(parity[e_idx]) != (min_flipped < min_trivial)
            decisive += 1
        else:
            c = d3.decode_correction(syndromes[e_idx])
            expect = int(parity[e_idx]) != int(c @ lat.logical_z % 2)
            flagged += 1
        assert bool(got[e_idx]) == expect
    assert decisive + flagged == 1 << n
    assert decisive > 0


def test_failure_bits_consistent_with_correction_parity(d3):
    g = np.random.default_rng(21)
    E = (g.random((300, d3.lattice.n_data)) < 0.15).astype(np.uint8)
    got = d3.failure_bits(E)
    lat = d3.lattice
    for e, bit in zip(E, got):
        s = (lat.H_plaq @ e % 2).astype(np.uint8)
        expect = (int(e @ lat.logical_z % 2) + d3.correction_parity(s)) % 2
        assert int(bit) == expect


def test_star_rows_never_change_the_outcome(d3):
    lat = d3.lattice
    g = np.random.default_rng(22)
    E = (g.random((200, lat.n_data)) < 0.2).astype(np.uint8)
    base = d3.failure_bits(E)
    for support in lat.star_support:
        shifted = E.copy()
        shifted[:, support] ^= 1
        assert np.array_equal(d3.failure_bits(shifted), base)


def test_distance_five_matches_subset_dynamic_program():
    dec = SurfaceDecoder(build_surface(5))
    lat = dec.lattice
    g = np.random.default_rng(23)
    checked = 0
    for _ in range(120):
        e = (g.random(lat.n_data) < 0.06).astype(np.uint8)
        s = (lat.H_plaq @ e % 2).astype(np.uint8)
        defects = tuple(int(i) for i in np.flatnonzero(s))
        c = dec.decode_correction(s)
        assert np.array_equal(lat.H_plaq @ c % 2, s)
        want = dp_matching_weight(
            defects,
            lambda a, b: int(dec.dist[a, b]),
            lambda a: int(dec.bdist[a]),
        )
        assert int(c.sum()) == want
        checked += 1
    assert checked == 120
