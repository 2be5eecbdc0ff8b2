"""Monte Carlo memory campaigns under independent bit-flip noise.

Syndrome extraction is perfect, so a campaign is: sample iid flips,
decode, test the logical frame bits. All accumulation happens in integer
counters, and every chunk of trials draws from a stream keyed by
(seed, point, chunk index) with a chunk layout fixed by the campaign
parameters alone. Worker pools only spread chunks over processes; the
counters they return are summed, so the outcome is identical for any
worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import rng
from .concat import ConcatenationSchema, build_schema
from .decode import decode_concatenated, decode_level
from .hamming import build_level_code
from .mwpm import SurfaceDecoder
from .stats import wilson_ci
from .surface import build_surface

CHUNK_BIT_BUDGET = 1 << 24

_DECODERS: dict[tuple[int, bool], SurfaceDecoder] = {}


def _get_decoder(d: int, allow_even: bool) -> SurfaceDecoder:
    """Per-process decoder cache; its syndrome table is p-independent."""
    key = (d, allow_even)
    hit = _DECODERS.get(key)
    if hit is None:
        hit = SurfaceDecoder(build_surface(d, allow_even=allow_even))
        _DECODERS[key] = hit
    return hit


def chunk_layout(trials: int, bits_per_trial: int) -> list[int]:
    """Deterministic chunk sizes for a campaign; independent of workers."""
    if trials <= 0:
        return []
    size = max(16, min(8192, CHUNK_BIT_BUDGET // max(1, bits_per_trial)))
    full, rest = divmod(trials, size)
    out = [size] * full
    if rest:
        out.append(rest)
    return out


@dataclass
class RateEstimate:
    """Failure count with its Wilson interval."""

    trials: int
    failures: int

    @property
    def rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0

    def ci(self) -> tuple[float, float]:
        return wilson_ci(self.failures, self.trials)


@dataclass
class TrialStats:
    """Integer outcome counters for one campaign.

    memory_failures counts trials with any logical bit set;
    qubit_failures and weight_hist resolve which and how many.
    pair_counts and the full pattern histogram are only carried when the
    campaign asks for them, since they scale with k squared and 2**k.
    """

    k: int
    trials: int = 0
    memory_failures: int = 0
    qubit_failures: np.ndarray = field(default=None)
    weight_hist: np.ndarray = field(default=None)
    pair_counts: np.ndarray | None = None
    pattern_counts: np.ndarray | None = None

    def __post_init__(self):
        if self.qubit_failures is None:
            self.qubit_failures = np.zeros(self.k, dtype=np.int64)
        if self.weight_hist is None:
            self.weight_hist = np.zeros(self.k + 1, dtype=np.int64)

    def with_pairs(self) -> "TrialStats":
        if self.pair_counts is None:
            self.pair_counts = np.zeros((self.k, self.k), dtype=np.int64)
        if self.pattern_counts is None and self.k <= 16:
            self.pattern_counts = np.zeros(1 << self.k, dtype=np.int64)
        return self

    def add_outcomes(self, out: np.ndarray) -> None:
        out = np.asarray(out, dtype=np.uint8)
        weights = out.sum(axis=1, dtype=np.int64)
        self.trials += out.shape[0]
        self.memory_failures += int(np.count_nonzero(weights))
        self.qubit_failures += out.sum(axis=0, dtype=np.int64)
        self.weight_hist += np.bincount(weights, minlength=self.k + 1)
        if self.pair_counts is not None:
            self.pair_counts += out.T.astype(np.int64) @ out.astype(np.int64)
        if self.pattern_counts is not None:
            pats = out.astype(np.int64) @ (1 << np.arange(self.k, dtype=np.int64))
            self.pattern_counts += np.bincount(pats, minlength=1 << self.k)

    def merge(self, other: "TrialStats") -> None:
        self.trials += other.trials
        self.memory_failures += other.memory_failures
        self.qubit_failures += other.qubit_failures
        self.weight_hist += other.weight_hist
        if self.pair_counts is not None and other.pair_counts is not None:
            self.pair_counts += other.pair_counts
        if self.pattern_counts is not None and other.pattern_counts is not None:
            self.pattern_counts += other.pattern_counts

    @property
    def estimate(self) -> RateEstimate:
        return RateEstimate(self.trials, self.memory_failures)


# ---------------------------------------------------------------------------
# concatenated Hamming memory

def _hamming_chunk(args) -> TrialStats:
    top_level, p, seed, point, chunk_idx, count, track_pairs = args
    schema = build_schema(top_level)
    E = rng.sample_errors(seed, point, chunk_idx, (count, schema.total_physical), p)
    out = decode_concatenated(schema, E)
    stats = TrialStats(schema.total_logical)
    if track_pairs:
        stats.with_pairs()
    stats.add_outcomes(out)
    return stats


def run_hamming_campaign(
    top_level: int,
    p: float,
    trials: int,
    seed: int,
    *,
    point: int = 0,
    workers: int = 1,
    track_pairs: bool = False,
) -> TrialStats:
    """Memory campaign for the level-(top_level) concatenated Hamming code."""
    schema = build_schema(top_level)
    sizes = chunk_layout(trials, schema.total_physical)
    jobs = [
        (top_level, p, seed, point, i, ct, track_pairs)
        for i, ct in enumerate(sizes)
    ]
    total = TrialStats(schema.total_logical)
    if track_pairs:
        total.with_pairs()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_hamming_chunk, jobs):
                total.merge(part)
    else:
        for job in jobs:
            total.merge(_hamming_chunk(job))
    return total


def run_block_campaign(
    p: float, trials: int, seed: int, *, point: int = 0
) -> TrialStats:
    """Campaign on a single bare fifteen-qubit Hamming block.

    The fifteen physical qubits take iid flips directly; no inner code.
    Pair counts are always tracked, this is the correlation workload.
    """
    code = build_level_code(1)
    stats = TrialStats(code.k).with_pairs()
    for chunk_idx, ct in enumerate(chunk_layout(trials, code.n)):
        E = rng.sample_errors(seed, point, chunk_idx, (ct, code.n), p)
        stats.add_outcomes(decode_level(code, E))
    return stats


def _register_chunk(args) -> TrialStats:
    top_level, q, seed, point, chunk_idx, count = args
    schema = build_schema(top_level, base="surface", surface_d=3)
    R = schema.num_base_registers
    bits = rng.sample_errors(seed, point, chunk_idx, (count, R), q)
    out = decode_concatenated(schema, bits)
    stats = TrialStats(schema.total_logical)
    stats.add_outcomes(out)
    return stats


def run_register_campaign(
    top_level: int,
    q: float,
    trials: int,
    seed: int,
    *,
    point: int = 0,
    workers: int = 1,
) -> TrialStats:
    """Hamming stack over registers that fail iid with probability q.

    Stand-in for full patch simulation when a precomputed patch rate
    table supplies q; only the Hamming layers are decoded.
    """
    schema = build_schema(top_level, base="surface", surface_d=3)
    sizes = chunk_layout(trials, schema.num_base_registers)
    jobs = [(top_level, q, seed, point, i, ct) for i, ct in enumerate(sizes)]
    total = TrialStats(schema.total_logical)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_register_chunk, jobs):
                total.merge(part)
    else:
        for job in jobs:
            total.merge(_register_chunk(job))
    return total


# ---------------------------------------------------------------------------
# surface code and surface-Hamming memory

def estimate_surface_rate(
    d: int,
    p: float,
    trials: int,
    seed: int,
    *,
    point: int = 0,
    allow_even: bool = False,
    decoder: SurfaceDecoder | None = None,
) -> RateEstimate:
    """Logical Z failure rate of one surface patch under matching."""
    if decoder is None:
        decoder = _get_decoder(d, allow_even)
    n = decoder.lattice.n_data
    failures = 0
    for chunk_idx, ct in enumerate(chunk_layout(trials, n)):
        E = rng.sample_errors(seed, point, chunk_idx, (ct, n), p)
        failures += int(decoder.failure_bits(E).sum())
    return RateEstimate(trials, failures)


def _surface_hamming_chunk(args, decoder: SurfaceDecoder | None = None) -> TrialStats:
    top_level, d, p, seed, point, chunk_idx, count, allow_even, track_pairs = args
    schema = build_schema(top_level, base="surface", surface_d=d, allow_even=allow_even)
    if decoder is None:
        decoder = _get_decoder(d, allow_even)
    R = schema.num_base_registers
    n = schema.lattice.n_data
    E = rng.sample_errors(seed, point, chunk_idx, (count, R, n), p)
    register_bits = decoder.failure_bits(E.reshape(count * R, n)).reshape(count, R)
    out = decode_concatenated(schema, register_bits)
    stats = TrialStats(schema.total_logical)
    if track_pairs:
        stats.with_pairs()
    stats.add_outcomes(out)
    return stats


def run_surface_hamming_campaign(
    top_level: int,
    d: int,
    p: float,
    trials: int,
    seed: int,
    *,
    point: int = 0,
    workers: int = 1,
    allow_even: bool = False,
    track_pairs: bool = False,
) -> TrialStats:
    """Memory campaign for Hamming levels concatenated over surface patches.

    Every register is a full distance-d patch decoded by matching; its
    residual logical flip feeds the Hamming frame decode above.
    """
    schema = build_schema(top_level, base="surface", surface_d=d, allow_even=allow_even)
    bits = schema.num_base_registers * schema.lattice.n_data
    sizes = chunk_layout(trials, bits)
    jobs = [
        (top_level, d, p, seed, point, i, ct, allow_even, track_pairs)
        for i, ct in enumerate(sizes)
    ]
    total = TrialStats(schema.total_logical)
    if track_pairs:
        total.with_pairs()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_surface_hamming_chunk, jobs):
                total.merge(part)
    else:
        decoder = _get_decoder(d, allow_even)
        for job in jobs:
            total.merge(_surface_hamming_chunk(job, decoder))
    return total
