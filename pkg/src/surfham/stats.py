"""Estimation helpers: intervals, correlation measures, crossings.

Everything consumes integer counts so results are exactly reproducible
from stored counters. The failure-pattern histogram (one counter per
subset of logical qubits) is the sufficient statistic for every joint
query below.
"""

from __future__ import annotations

import math

import numpy as np

Z95 = 1.96


def wilson_ci(failures: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials == 0:
        return (0.0, 1.0)
    phat = failures / trials
    zz = z * z / trials
    center = (phat + zz / 2.0) / (1.0 + zz)
    half = (z / (1.0 + zz)) * math.sqrt(phat * (1.0 - phat) / trials + zz / (4.0 * trials))
    return (max(0.0, center - half), min(1.0, center + half))


def pearson_from_counts(n_i: int, n_j: int, n_ij: int, trials: int) -> float:
    """Pearson correlation of two failure indicators from their counts."""
    t = float(trials)
    pi, pj, pij = n_i / t, n_j / t, n_ij / t
    var = pi * (1.0 - pi) * pj * (1.0 - pj)
    if var <= 0.0:
        return 0.0
    return (pij - pi * pj) / math.sqrt(var)


def pearson_pairs(pair_counts: np.ndarray, trials: int) -> np.ndarray:
    """Matrix of pairwise correlations; diagonal fixed at one."""
    k = pair_counts.shape[0]
    out = np.eye(k)
    for i in range(k):
        for j in range(i + 1, k):
            rho = pearson_from_counts(
                int(pair_counts[i, i]), int(pair_counts[j, j]),
                int(pair_counts[i, j]), trials,
            )
            out[i, j] = rho
            out[j, i] = rho
    return out


def fisher_ci(rho: float, trials: int, z: float = Z95) -> tuple[float, float]:
    """Confidence interval for a correlation via the z-transform."""
    if trials <= 3:
        return (-1.0, 1.0)
    rho = min(max(rho, -0.999999), 0.999999)
    zr = math.atanh(rho)
    half = z / math.sqrt(trials - 3)
    return (math.tanh(zr - half), math.tanh(zr + half))


# ---------------------------------------------------------------------------
# joint failure structure from the pattern histogram

def joint_count(pattern_counts: np.ndarray, subset: tuple[int, ...]) -> int:
    """Trials in which every qubit of the subset failed."""
    mask = 0
    for q in subset:
        mask |= 1 << q
    total = 0
    for pat, ct in enumerate(pattern_counts):
        if ct and (pat & mask) == mask:
            total += int(ct)
    return total


def all_subsets(k: int, sizes: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Every subset of range(k) whose size is listed, in lex order."""
    from itertools import combinations

    out: list[tuple[int, ...]] = []
    for size in sizes:
        out.extend(combinations(range(k), size))
    return out


def set_excess(
    pattern_counts: np.ndarray, trials: int, subset: tuple[int, ...]
) -> tuple[float, float]:
    """(joint failure probability, product of the marginals) for a subset."""
    t = float(trials)
    joint = joint_count(pattern_counts, subset) / t
    indep = 1.0
    for q in subset:
        indep *= joint_count(pattern_counts, (q,)) / t
    return joint, indep


# ---------------------------------------------------------------------------
# weight decay of multi-qubit failures

def decay_rates(weight_hist: np.ndarray, trials: int, k: int) -> np.ndarray:
    """p_i: probability that i chosen qubits all fail, averaged over choices.

    Computed from the failure-weight histogram: a trial of weight w
    contributes C(w, i) of the C(k, i) size-i subsets.
    """
    out = np.zeros(k, dtype=float)
    for i in range(1, k + 1):
        num = sum(int(weight_hist[w]) * math.comb(w, i) for w in range(i, k + 1))
        out[i - 1] = num / (trials * math.comb(k, i))
    return out


def fitted_decay_rate(weight_hist: np.ndarray, trials: int, k: int) -> float:
    """Smallest geometric rate bounding the decay profile from above."""
    rates = decay_rates(weight_hist, trials, k)
    best = 0.0
    for i, p in enumerate(rates, start=1):
        if p > 0.0:
            best = max(best, float(p) ** (1.0 / i))
    return best


# ---------------------------------------------------------------------------
# threshold crossings

def _interp_crossing(ps, ya, yb) -> float | None:
    """First sign change of log ya - log yb, interpolated in log p."""
    xs, ds = [], []
    for p, a, b in zip(ps, ya, yb):
        if a > 0.0 and b > 0.0:
            xs.append(math.log(p))
            ds.append(math.log(a) - math.log(b))
    for i in range(len(ds) - 1):
        if ds[i] == 0.0:
            return math.exp(xs[i])
        if ds[i] * ds[i + 1] < 0.0:
            frac = ds[i] / (ds[i] - ds[i + 1])
            return math.exp(xs[i] + frac * (xs[i + 1] - xs[i]))
    if ds and ds[-1] == 0.0:
        return math.exp(xs[-1])
    return None


def threshold_crossing(ps, est_a, est_b) -> tuple[float | None, tuple[float, float]]:
    """Crossing of two failure-rate curves with a conservative bracket.

    est_a and est_b are (trials, failures) estimates per grid point; the
    bracket comes from crossing the upper edge of one band with the
    lower edge of the other, both ways.
    """
    ra = [e.failures / e.trials for e in est_a]
    rb = [e.failures / e.trials for e in est_b]
    ca = [wilson_ci(e.failures, e.trials) for e in est_a]
    cb = [wilson_ci(e.failures, e.trials) for e in est_b]
    center = _interp_crossing(ps, ra, rb)
    left = _interp_crossing(ps, [c[1] for c in ca], [c[0] for c in cb])
    right = _interp_crossing(ps, [c[0] for c in ca], [c[1] for c in cb])
    candidates = [x for x in (left, right, center) if x is not None]
    if center is None or not candidates:
        return None, (float("nan"), float("nan"))
    return center, (min(candidates), max(candidates))
