"""Counter-based streams: reproducible, disjoint, honest Bernoulli draws."""

import numpy as np

from surfham.rng import sample_errors, stream


def test_same_key_same_stream():
    a = stream(7, 3, 1).integers(0, 1 << 62, size=16)
    b = stream(7, 3, 1).integers(0, 1 << 62, size=16)
    assert np.array_equal(a, b)


def test_distinct_keys_distinct_streams():
    base = stream(7, 3, 1).integers(0, 1 << 62, size=16)
    for other in [stream(8, 3, 1), stream(7, 4, 1), stream(7, 3, 2),
                  stream(7, 3), stream(7, 1, 3)]:
        assert not np.array_equal(base, other.integers(0, 1 << 62, size=16))


def test_sample_errors_shape_and_dtype():
    E = sample_errors(0, 0, 0, (50, 13), 0.1)
    assert E.shape == (50, 13)
    assert E.dtype == np.uint8
    assert set(np.unique(E)) <= {0, 1}


def test_sample_errors_deterministic_per_chunk():
    a = sample_errors(5, 2, 9, (100, 7), 0.3)
    b = sample_errors(5, 2, 9, (100, 7), 0.3)
    c = sample_errors(5, 2, 10, (100, 7), 0.3)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_sample_errors_rate_tracks_p():
    E = sample_errors(1, 0, 0, (4000, 25), 0.2)
    mean = E.mean()
    # 100k draws at p=0.2: five sigma is about 0.0063
    assert abs(mean - 0.2) < 0.0075


def test_extreme_probabilities():
    assert not sample_errors(0, 0, 0, (10, 10), 0.0).any()
    assert sample_errors(0, 0, 0, (10, 10), 1.0).all()
