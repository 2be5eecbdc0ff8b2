"""Command line interface: campaigns to CSV, crossings, plots, timing.

Every CSV-writing subcommand drops a JSON manifest next to its output
with enough of the invocation to reproduce the file byte for byte;
`--from-manifest` replays one. Numeric cells are written with repr so
equal results are equal bytes. Worker pools only change wall time,
never output.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import json
import os
import sys

import numpy as np

from . import __version__
from .bench import BENCH_P, PAIRINGS, bench_decoders, benchmark_report
from .concat import overhead
from .hamming import build_level_code
from .sim import (
    estimate_surface_rate,
    run_block_campaign,
    run_hamming_campaign,
    run_register_campaign,
    run_surface_hamming_campaign,
)
from .stats import (
    all_subsets,
    decay_rates,
    fisher_ci,
    fitted_decay_rate,
    joint_count,
    pearson_from_counts,
    set_excess,
    threshold_crossing,
    wilson_ci,
)
from .svg import Series, write_plot

ENV_WORKERS = "SURFHAM_WORKERS"
SWEEP_COLUMNS = [
    "code", "d", "level", "p", "trials", "failures",
    "p_logical", "ci_low", "ci_high", "seed",
]


def _fail(message: str) -> "NoReturn":
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    if isinstance(x, np.integer):
        return str(int(x))
    return str(x)


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])


def _write_manifest(out_path: str, args: argparse.Namespace, argv: list[str],
                    started: str, outputs: list[str]) -> None:
    manifest = {
        "subcommand": args.command,
        "parameters": {
            k: v for k, v in sorted(vars(args).items()) if k != "command"
        },
        "seed": getattr(args, "seed", None),
        "argv": argv,
        "tool_version": __version__,
        "started": started,
        "finished": _now(),
        "outputs": outputs,
    }
    with open(out_path + ".manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        _fail(f"expected comma-separated integers for {flag}, got {text!r}")


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(
            f"must be a probability in [0, 1], got {text!r}"
        )
    return value


def _parse_p_grid(text: str, points: int, flag: str = "--p") -> list[float]:
    """Either lo:hi (log grid with the given point count) or a comma list."""
    if ":" in text:
        lo_s, _, hi_s = text.partition(":")
        try:
            lo, hi = float(lo_s), float(hi_s)
        except ValueError:
            _fail(f"malformed range for {flag}: {text!r}")
        if not (0.0 < lo < hi):
            _fail(f"need 0 < lo < hi for {flag}, got {text!r}")
        grid = [float(x) for x in np.geomspace(lo, hi, points)]
    else:
        try:
            grid = [float(tok) for tok in text.split(",") if tok != ""]
        except ValueError:
            _fail(f"malformed value list for {flag}: {text!r}")
        if not grid:
            _fail(f"no values given for {flag}")
    bad = [x for x in grid if not 0.0 <= x <= 1.0]
    if bad:
        _fail(f"{flag} values must be probabilities in [0, 1], got {bad[0]!r}")
    return grid


def _workers(args) -> int:
    if getattr(args, "workers", None) is not None:
        return args.workers
    raw = os.environ.get(ENV_WORKERS, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _read_csv(path: str, flag: str) -> tuple[list[str], list[dict[str, str]]]:
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot open {flag} file {path}: {exc}")
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            _fail(f"parse error in {path} at row 1: empty file")
        rows = []
        for number, raw in enumerate(reader, start=2):
            if not raw:
                continue
            if len(raw) != len(header):
                _fail(f"parse error in {path} at row {number}: "
                      f"{len(raw)} cells, expected {len(header)}")
            rows.append(dict(zip(header, raw)))
    return header, rows


# ---------------------------------------------------------------------------
# subcommands

def cmd_sweep(args, argv) -> int:
    started = _now()
    levels = _parse_int_list(args.levels, "--levels")
    grid = _parse_p_grid(args.p, args.points)
    workers = _workers(args)
    if args.code == "surface-hamming" and args.d is None:
        _fail("--d is required when --code surface-hamming")
    psur = None
    if args.psur_table is not None:
        if args.code != "surface-hamming":
            _fail("--psur-table only applies to --code surface-hamming")
        psur = _load_psur_table(args.psur_table)
    rows = []
    point = 0
    for level in levels:
        for p in grid:
            if args.code == "hamming":
                stats = run_hamming_campaign(
                    level, p, args.trials, args.seed,
                    point=point, workers=workers,
                )
                d_cell = ""
            else:
                if psur is not None:
                    key = (args.d, repr(float(p)))
                    if key not in psur:
                        _fail(f"--psur-table has no row for d={args.d} p={p!r}")
                    stats = run_register_campaign(
                        level, psur[key], args.trials, args.seed,
                        point=point, workers=workers,
                    )
                else:
                    stats = run_surface_hamming_campaign(
                        level, args.d, p, args.trials, args.seed,
                        point=point, workers=workers,
                        allow_even=args.allow_even,
                    )
                d_cell = args.d
            lo, hi = wilson_ci(stats.memory_failures, stats.trials)
            rows.append([
                args.code, d_cell, level, float(p), stats.trials,
                stats.memory_failures,
                stats.memory_failures / stats.trials, lo, hi, args.seed,
            ])
            point += 1
    _write_csv(args.out, SWEEP_COLUMNS, rows)
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


def _load_psur_table(path: str) -> dict[tuple[int, str], float]:
    header, rows = _read_csv(path, "--psur-table")
    for col in ("d", "p", "p_logical"):
        if col not in header:
            _fail(f"--psur-table file lacks column {col}")
    table = {}
    for row in rows:
        table[(int(row["d"]), repr(float(row["p"])))] = float(row["p_logical"])
    return table


def cmd_threshold(args, argv) -> int:
    started = _now()
    header, rows = _read_csv(args.input, "--input")
    for col in SWEEP_COLUMNS:
        if col not in header:
            _fail(f"--input file lacks sweep column {col}")
    selected = [
        r for r in rows
        if (args.code is None or r["code"] == args.code)
        and (args.d is None or r["d"] == str(args.d))
    ]

    def curve(level: int):
        pts = sorted(
            (float(r["p"]), int(r["trials"]), int(r["failures"]))
            for r in selected if int(r["level"]) == level
        )
        if len(pts) < 2:
            _fail(f"fewer than two grid points for level {level} (--a/--b)")
        return pts

    from .sim import RateEstimate

    ca, cb = curve(args.a), curve(args.b)
    ps_a = [p for p, _, _ in ca]
    ps_b = [p for p, _, _ in cb]
    if ps_a != ps_b:
        _fail("levels --a and --b were swept on different p grids")
    cross, (lo, hi) = threshold_crossing(
        ps_a,
        [RateEstimate(t, f) for _, t, f in ca],
        [RateEstimate(t, f) for _, t, f in cb],
    )
    if cross is None:
        _fail(f"curves for levels {args.a} and {args.b} do not cross on this grid")
    code = args.code if args.code is not None else (
        selected[0]["code"] if selected else ""
    )
    d_cell = args.d if args.d is not None else ""
    _write_csv(
        args.out,
        ["code", "d", "level_a", "level_b", "p_cross", "ci_low", "ci_high"],
        [[code, d_cell, args.a, args.b, cross, lo, hi]],
    )
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


def cmd_correlations(args, argv) -> int:
    started = _now()
    stats = run_block_campaign(args.p, args.trials, args.seed)
    t = stats.trials
    rows = []
    if args.mode == "pairs":
        header = ["i", "j", "n_i", "n_j", "n_joint", "rho", "ci_low", "ci_high"]
        for i in range(stats.k):
            for j in range(i + 1, stats.k):
                n_i = int(stats.pair_counts[i, i])
                n_j = int(stats.pair_counts[j, j])
                n_ij = int(stats.pair_counts[i, j])
                rho = pearson_from_counts(n_i, n_j, n_ij, t)
                lo, hi = fisher_ci(rho, t)
                rows.append([i, j, n_i, n_j, n_ij, rho, lo, hi])
    else:
        header = ["size", "members", "joint_p", "indep_p", "ratio"]
        sizes = tuple(_parse_int_list(args.sizes, "--sizes"))
        for bad in sizes:
            if not 2 <= bad <= stats.k:
                _fail(f"--sizes entries must lie in [2, {stats.k}], got {bad}")
        for subset in all_subsets(stats.k, sizes):
            joint, indep = set_excess(stats.pattern_counts, t, subset)
            ratio = joint / indep if indep > 0.0 else float("inf")
            rows.append([
                len(subset), "+".join(str(q) for q in subset),
                joint, indep, ratio,
            ])
    _write_csv(args.out, header, rows)
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


def cmd_decay(args, argv) -> int:
    started = _now()
    stats = run_block_campaign(args.p, args.trials, args.seed)
    profile = decay_rates(stats.weight_hist, stats.trials, stats.k)
    rate = fitted_decay_rate(stats.weight_hist, stats.trials, stats.k)
    rows = [
        [i, float(profile[i - 1]), rate**i, rate]
        for i in range(1, stats.k + 1)
    ]
    _write_csv(args.out, ["i", "p_i", "rate_pow_i", "fitted_rate"], rows)
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


def cmd_perqubit(args, argv) -> int:
    started = _now()
    stats = run_block_campaign(args.p, args.trials, args.seed)
    rows = []
    for q in range(stats.k):
        n_q = int(stats.qubit_failures[q])
        lo, hi = wilson_ci(n_q, stats.trials)
        rows.append([q, n_q, stats.trials, n_q / stats.trials, lo, hi])
    _write_csv(
        args.out,
        ["qubit", "failures", "trials", "rate", "ci_low", "ci_high"],
        rows,
    )
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


def cmd_overhead(args, argv) -> int:
    started = _now()
    ds = _parse_int_list(args.d, "--d")
    rows = []
    for d in ds:
        for level in range(0, args.levels + 1):
            exact, rounded = overhead(d, level, allow_even=args.allow_even)
            rows.append([d, level, exact, rounded])
    _write_csv(
        args.out, ["d", "level", "overhead_exact", "overhead_rounded"], rows
    )
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


def cmd_logicals(args, argv) -> int:
    code = build_level_code(args.r - 3)
    lines = [" ".join(str(int(b)) for b in row) for row in code.L]
    text = "\n".join(lines) + "\n"
    if args.out is not None:
        started = _now()
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _write_manifest(args.out, args, argv, started, [args.out])
    else:
        sys.stdout.write(text)
    return 0


def cmd_surface_rate(args, argv) -> int:
    started = _now()
    ds = _parse_int_list(args.d, "--d")
    for d in ds:
        if d % 2 == 0 and not args.allow_even:
            _fail(f"even distance {d} needs --allow-even (--d)")
    grid = _parse_p_grid(args.p, args.points)
    rows = []
    point = 0
    for d in ds:
        for p in grid:
            est = estimate_surface_rate(
                d, p, args.trials, args.seed,
                point=point, allow_even=args.allow_even,
            )
            lo, hi = est.ci()
            rows.append([
                d, float(p), est.trials, est.failures, est.rate, lo, hi,
                args.seed,
            ])
            point += 1
    _write_csv(
        args.out,
        ["d", "p", "trials", "failures", "p_logical", "ci_low", "ci_high", "seed"],
        rows,
    )
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


def cmd_bench(args, argv) -> int:
    started = _now()
    pairings = []
    for tok in args.pairs.split(","):
        level_s, _, d_s = tok.partition(":")
        try:
            pairings.append((int(level_s), int(d_s)))
        except ValueError:
            _fail(f"malformed pairing {tok!r} for --pairs, want level:d")
    records = bench_decoders(
        pairings, args.trials, p=args.p, seed=args.seed,
        workers=_workers(args),
    )
    rows = [
        [r.decoder, r.mode, r.trials, args.p, r.mean_seconds, r.std_seconds,
         r.sampling_seconds, args.seed]
        for r in records
    ]
    _write_csv(
        args.out,
        ["decoder", "mode", "trials", "p", "mean_seconds", "std_seconds",
         "sampling_seconds", "seed"],
        rows,
    )
    _write_manifest(args.out, args, argv, started, [args.out])
    for line in benchmark_report(records):
        print(line)
    return 0


def cmd_plot(args, argv) -> int:
    started = _now()
    header, rows = _read_csv(args.input, "--input")
    for col, flag in ((args.x, "--x"), (args.y, "--y"), (args.group, "--group")):
        if col not in header:
            _fail(f"column {col!r} not in {args.input} ({flag})")
    has_ci = "ci_low" in header and "ci_high" in header
    groups: dict[str, Series] = {}
    for number, row in enumerate(rows, start=2):
        try:
            x = float(row[args.x])
            y = float(row[args.y])
            lo = float(row["ci_low"]) if has_ci else 0.0
            hi = float(row["ci_high"]) if has_ci else 0.0
        except ValueError as exc:
            _fail(f"parse error in {args.input} at row {number}: {exc}")
        key = row[args.group]
        series = groups.setdefault(
            key, Series(f"{args.group}={key}", [], [], [], [])
        )
        series.ps.append(x)
        series.rates.append(y)
        if has_ci:
            series.ci_low.append(lo)
            series.ci_high.append(hi)
    if not groups:
        _fail(f"no data rows in {args.input} (--input)")
    ordered = [groups[k] for k in sorted(groups)]
    try:
        write_plot(
            args.out, ordered,
            title=args.title, xlabel=args.x, ylabel=args.y,
        )
    except ValueError as exc:
        _fail(str(exc))
    _write_manifest(args.out, args, argv, started, [args.out])
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfham",
        description="concatenated Hamming and surface-Hamming memory simulations",
    )
    parser.add_argument(
        "--from-manifest", metavar="PATH",
        help="replay a recorded run; all other arguments are ignored",
    )
    sub = parser.add_subparsers(dest="command")

    def add_common(p, trials_default=100000):
        p.add_argument("--trials", type=int, default=trials_default)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--out", required=True)

    p = sub.add_parser("sweep", help="logical rate curves")
    p.add_argument("--code", choices=["hamming", "surface-hamming"], required=True)
    p.add_argument("--levels", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--points", type=int, default=9)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--allow-even", action="store_true")
    p.add_argument("--psur-table", default=None)
    add_common(p)

    p = sub.add_parser("threshold", help="crossing of two sweep curves")
    p.add_argument("--input", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--code", default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--out", required=True)

    p = sub.add_parser("correlations", help="joint failure structure of one block")
    p.add_argument("--p", type=_probability, default=0.08)
    p.add_argument("--mode", choices=["pairs", "sets"], default="pairs")
    p.add_argument("--sizes", default="2,3,4,5")
    add_common(p, trials_default=20000)

    p = sub.add_parser("decay", help="multi-qubit failure decay profile")
    p.add_argument("--p", type=_probability, default=0.08)
    add_common(p, trials_default=20000)

    p = sub.add_parser("perqubit", help="per-qubit logical failure rates")
    p.add_argument("--p", type=_probability, default=0.08)
    add_common(p, trials_default=20000)

    p = sub.add_parser("overhead", help="physical qubits per logical qubit")
    p.add_argument("--d", required=True)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--allow-even", action="store_true")
    p.add_argument("--out", required=True)

    p = sub.add_parser("logicals", help="logical operator matrix rows")
    p.add_argument("--r", type=int, choices=[3, 4, 5], required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("surface-rate", help="surface patch logical rates")
    p.add_argument("--d", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--points", type=int, default=9)
    p.add_argument("--allow-even", action="store_true")
    add_common(p)

    p = sub.add_parser("bench", help="decode-time comparison")
    p.add_argument("--pairs", default=",".join(f"{l}:{d}" for l, d in PAIRINGS))
    p.add_argument("--p", type=_probability, default=BENCH_P)
    add_common(p)

    p = sub.add_parser("plot", help="SVG chart from a CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--x", default="p")
    p.add_argument("--y", default="p_logical")
    p.add_argument("--group", default="level")
    p.add_argument("--title", default="")
    p.add_argument("--out", required=True)

    return parser


_DISPATCH = {
    "sweep": cmd_sweep,
    "threshold": cmd_threshold,
    "correlations": cmd_correlations,
    "decay": cmd_decay,
    "perqubit": cmd_perqubit,
    "overhead": cmd_overhead,
    "logicals": cmd_logicals,
    "surface-rate": cmd_surface_rate,
    "bench": cmd_bench,
    "plot": cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.from_manifest is not None:
        try:
            with open(args.from_manifest, encoding="utf-8") as fh:
                manifest = json.load(fh)
            replay = list(manifest["argv"])
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            _fail(f"cannot replay --from-manifest {args.from_manifest}: {exc}")
        args = parser.parse_args(replay)
        argv = replay
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return _DISPATCH[args.command](args, argv)
    except ValueError as exc:
        _fail(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
