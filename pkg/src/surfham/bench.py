"""Decode-time comparison between the code families.

Pairs a Hamming concatenation level with the surface distance that
reaches a comparable logical rate at p = 0.01526, then times
decode-only work on one host: sampling and input packing happen outside
the clock, and the matching decoder receives precomputed syndromes the
way the Hamming engine receives packed measurement ints. Sequential
mode times one decode at a time; parallel mode spreads shots over a
process pool and divides wall time.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import rng
from .concat import build_schema
from .decode import decode_packed_sequential, pack_base_frame
from .mwpm import SurfaceDecoder
from .surface import build_surface

PAIRINGS = ((1, 5), (2, 7), (3, 9))
BENCH_P = 0.01526
WARMUP = 100


@dataclass
class TimingRecord:
    """Mean decode-only wall time for one decoder in one mode."""

    decoder: str
    mode: str
    trials: int
    mean_seconds: float
    std_seconds: float
    sampling_seconds: float


def _mean_std(times: list[float]) -> tuple[float, float]:
    arr = np.asarray(times, dtype=float)
    if arr.size == 0:
        return 0.0, 0.0
    return float(arr.mean()), float(arr.std())


def bench_hamming_sequential(level: int, p: float, trials: int, seed: int) -> TimingRecord:
    schema = build_schema(level)
    sample_t = 0.0
    times: list[float] = []
    warm = min(WARMUP, max(1, trials))
    for shot in range(warm + trials):
        t0 = time.perf_counter()
        frame = rng.sample_errors(seed, level, shot, (schema.total_physical,), p)
        packed = pack_base_frame(schema, frame)
        t1 = time.perf_counter()
        sample_t += t1 - t0
        t2 = time.perf_counter()
        decode_packed_sequential(schema, packed)
        t3 = time.perf_counter()
        if shot >= warm:
            times.append(t3 - t2)
    mean, std = _mean_std(times)
    return TimingRecord(f"hamming-{level}", "sequential", trials, mean, std, sample_t)


def bench_surface_sequential(d: int, p: float, trials: int, seed: int) -> TimingRecord:
    decoder = SurfaceDecoder(build_surface(d))
    n = decoder.lattice.n_data
    sample_t = 0.0
    times: list[float] = []
    warm = min(WARMUP, max(1, trials))
    t0 = time.perf_counter()
    E = rng.sample_errors(seed, d, 0, (warm + trials, n), p)
    S = E @ decoder.lattice.H_plaq.T
    S &= 1
    sample_t += time.perf_counter() - t0
    for shot in range(warm + trials):
        t2 = time.perf_counter()
        decoder.decode_correction(S[shot])
        t3 = time.perf_counter()
        if shot >= warm:
            times.append(t3 - t2)
    mean, std = _mean_std(times)
    return TimingRecord(f"surface-{d}", "sequential", trials, mean, std, sample_t)


def _hamming_parallel_chunk(args) -> tuple[int, float]:
    level, p, seed, chunk_idx, count = args
    schema = build_schema(level)
    total = 0.0
    for shot in range(count):
        frame = rng.sample_errors(seed, level, (chunk_idx << 20) | shot, (schema.total_physical,), p)
        packed = pack_base_frame(schema, frame)
        t0 = time.perf_counter()
        decode_packed_sequential(schema, packed)
        total += time.perf_counter() - t0
    return count, total


def _surface_parallel_chunk(args) -> tuple[int, float]:
    d, p, seed, chunk_idx, count = args
    decoder = SurfaceDecoder(build_surface(d))
    n = decoder.lattice.n_data
    E = rng.sample_errors(seed, d, chunk_idx, (count, n), p)
    S = E @ decoder.lattice.H_plaq.T
    S &= 1
    total = 0.0
    for shot in range(count):
        t0 = time.perf_counter()
        decoder.decode_correction(S[shot])
        total += time.perf_counter() - t0
    return count, total


def _bench_parallel(worker, key, p: float, trials: int, seed: int, workers: int, label: str) -> TimingRecord:
    chunks = max(workers * 2, 1)
    base, rest = divmod(trials, chunks)
    sizes = [base + (1 if i < rest else 0) for i in range(chunks)]
    jobs = [(key, p, seed, i, ct) for i, ct in enumerate(sizes) if ct > 0]
    t0 = time.perf_counter()
    per_chunk: list[float] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for count, total in pool.map(worker, jobs):
            if count:
                per_chunk.append(total / count)
    wall = time.perf_counter() - t0
    mean = wall / trials if trials else 0.0
    _, std = _mean_std(per_chunk)
    return TimingRecord(label, "parallel", trials, mean, std, 0.0)


def bench_decoders(
    pairings=PAIRINGS,
    trials: int = 100000,
    *,
    p: float = BENCH_P,
    seed: int = 0,
    workers: int = 1,
) -> list[TimingRecord]:
    """Timing records for every pairing; parallel arms when workers > 1."""
    records: list[TimingRecord] = []
    for level, d in pairings:
        records.append(bench_hamming_sequential(level, p, trials, seed))
        records.append(bench_surface_sequential(d, p, trials, seed))
        if workers > 1:
            records.append(
                _bench_parallel(
                    _hamming_parallel_chunk, level, p, trials, seed, workers,
                    f"hamming-{level}",
                )
            )
            records.append(
                _bench_parallel(
                    _surface_parallel_chunk, d, p, trials, seed, workers,
                    f"surface-{d}",
                )
            )
    return records


def benchmark_report(records: list[TimingRecord]) -> list[str]:
    """Qualitative findings: pair winners and growth in level count."""
    seq = {r.decoder: r for r in records if r.mode == "sequential"}
    # recover the benchmarked pairings from record order: each hamming
    # entry is followed by its surface partner
    ordered = [r.decoder for r in records if r.mode == "sequential"]
    pairings = [
        (int(a.split("-")[1]), int(b.split("-")[1]))
        for a, b in zip(ordered, ordered[1:])
        if a.startswith("hamming-") and b.startswith("surface-")
    ]
    lines: list[str] = []
    for level, d in pairings:
        h, s = seq.get(f"hamming-{level}"), seq.get(f"surface-{d}")
        if h is None or s is None:
            continue
        verdict = "faster" if h.mean_seconds < s.mean_seconds else "slower"
        lines.append(
            f"hamming-{level} {h.mean_seconds:.3e}s vs surface-{d} "
            f"{s.mean_seconds:.3e}s per shot: hamming {verdict}"
        )
    levels = sorted(
        (int(name.split("-")[1]), r.mean_seconds)
        for name, r in seq.items()
        if name.startswith("hamming-")
    )
    if len(levels) >= 2:
        normalized = [t / lv for lv, t in levels]
        growing = all(b > a for a, b in zip(normalized, normalized[1:]))
        lines.append(
            "sequential hamming time per level "
            + ("grows super-linearly" if growing else "does not grow super-linearly")
            + " across levels " + ",".join(str(lv) for lv, _ in levels)
        )
    return lines
