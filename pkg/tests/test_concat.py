"""Schema bookkeeping: sizes, overheads, and the helper formulas."""

import pytest

from surfham.concat import build_schema, memory_failure_from_single, overhead


@pytest.mark.parametrize(
    "top_level,physical,logical",
    [(1, 105, 7), (2, 3255, 147), (3, 205065, 7497)],
)
def test_steane_base_totals(top_level, physical, logical):
    schema = build_schema(top_level)
    assert schema.total_physical == physical
    assert schema.total_logical == logical
    assert schema.base_size == 7
    assert schema.N == [2 ** (l + 3) - 1 for l in range(1, top_level + 1)]
    assert schema.K == [
        2 ** (l + 3) - 2 * (l + 3) - 1 for l in range(1, top_level + 1)
    ]


def test_level_zero_is_bare_steane():
    schema = build_schema(0)
    assert schema.total_physical == 7
    assert schema.total_logical == 1
    assert schema.codes == []


def test_surface_base_totals():
    schema = build_schema(1, base="surface", surface_d=3)
    assert schema.base_size == 13
    assert schema.num_base_registers == 15
    assert schema.total_physical == 195
    assert schema.total_logical == 7


def test_register_count_composes():
    schema = build_schema(2)
    assert schema.num_base_registers == 15 * 31


@pytest.mark.parametrize("bad_call", [
    lambda: build_schema(-1),
    lambda: build_schema(0, base="surface", surface_d=3),
    lambda: build_schema(1, base="bacon-shor"),
])
def test_schema_rejects_bad_arguments(bad_call):
    with pytest.raises(ValueError):
        bad_call()


# every (d, level) cell of the published resource table
OVERHEAD_TABLE = {
    (3, 0): 13, (3, 1): 28, (3, 2): 41, (3, 3): 51,
    (4, 0): 25, (4, 1): 54, (4, 2): 79, (4, 3): 98,
    (5, 0): 41, (5, 1): 88, (5, 2): 130, (5, 3): 160,
}


@pytest.mark.parametrize("d,level", sorted(OVERHEAD_TABLE))
def test_overhead_rounded_entries(d, level):
    exact, rounded = overhead(d, level, allow_even=(d % 2 == 0))
    assert rounded == OVERHEAD_TABLE[(d, level)]
    assert rounded == round(exact)


def test_overhead_exact_values():
    # data-qubit count times the product of n_l / k_l
    exact, _ = overhead(3, 3)
    assert exact == pytest.approx(13 * 15 * 31 * 63 / (7 * 21 * 51), rel=1e-12)
    exact, _ = overhead(5, 2)
    assert exact == pytest.approx(41 * 15 * 31 / (7 * 21), rel=1e-12)


def test_overhead_even_distance_needs_flag():
    with pytest.raises(ValueError):
        overhead(4, 1)


def test_memory_failure_from_single():
    assert memory_failure_from_single(0.1, 1) == pytest.approx(0.1)
    assert memory_failure_from_single(0.5, 2) == pytest.approx(0.75)
    assert memory_failure_from_single(0.0, 7) == 0.0
    with pytest.raises(ValueError):
        memory_failure_from_single(1.5, 7)
