"""Growth study for the solver's work counters on random words.

Measures how total scan work (links visited across twist and reduce passes)
and the normal-form length respond to doubling the word length at fixed
strand count, and to varying the strand count at fixed length. Prints a
table per experiment plus a log-log fit exponent for the doubling run.

Usage:
    python scripts/doubling_experiment.py [--seed S] [--count K]
"""

from __future__ import annotations

import argparse
import math
import statistics
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from braidnf.bench import bench_rows


def summarize(rows):
    visits = [r.links_visited for r in rows]
    finals = [r.final_list_length for r in rows]
    times = [r.time_ns for r in rows]
    return (
        statistics.mean(visits),
        statistics.median(visits),
        max(visits),
        statistics.mean(finals),
        statistics.mean(times) / 1e6,
    )


def doubling(args) -> None:
    print(f"doubling word length at n={args.strands} ({args.count} words per length)")
    print("length  mean_visits  median_visits   max_visits  mean_final  mean_ms")
    means = []
    for length in args.lengths:
        rows = bench_rows(args.strands, length, args.count, args.seed)
        mean_v, med_v, max_v, mean_f, mean_ms = summarize(rows)
        means.append((length, mean_v))
        print(
            f"{length:6d}  {mean_v:11.0f}  {med_v:13.0f}  {max_v:11d}"
            f"  {mean_f:10.1f}  {mean_ms:7.1f}"
        )
    xs = [math.log(length) for length, _ in means]
    ys = [math.log(v) for _, v in means]
    xbar, ybar = statistics.mean(xs), statistics.mean(ys)
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sum(
        (x - xbar) ** 2 for x in xs
    )
    print(f"log-log fit exponent: {slope:.2f}")


def strand_spread(args) -> None:
    print(f"\nvarying strand count at length {args.length} ({args.count} words per n)")
    print("     n  mean_visits  median_visits   max_visits  mean_final  mean_ms")
    means = {}
    for n in args.strand_counts:
        rows = bench_rows(n, args.length, args.count, args.seed)
        mean_v, med_v, max_v, mean_f, mean_ms = summarize(rows)
        means[n] = mean_v
        print(
            f"{n:6d}  {mean_v:11.0f}  {med_v:13.0f}  {max_v:11d}"
            f"  {mean_f:10.1f}  {mean_ms:7.1f}"
        )
    print(f"spread (max/min of mean visits): {max(means.values()) / min(means.values()):.2f}x")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=20260808)
    parser.add_argument("--count", type=int, default=8, help="words per configuration")
    parser.add_argument("--strands", type=int, default=20, help="n for the doubling run")
    parser.add_argument("--lengths", type=int, nargs="+", default=[16, 32, 64, 128])
    parser.add_argument("--length", type=int, default=32, help="length for the n sweep")
    parser.add_argument("--strand-counts", type=int, nargs="+", default=[5, 20, 80])
    args = parser.parse_args(argv)
    doubling(args)
    strand_spread(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
