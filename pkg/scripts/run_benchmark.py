"""Timing run over generated instance groups.

Usage:
    python scripts/run_benchmark.py                      # default groups
    python scripts/run_benchmark.py 3x10x5 3x10x10      # explicit RxMxN
    python scripts/run_benchmark.py --seeds 5 --detail out.csv 2x5x5
"""
import argparse
import sys

from effset import bench, oracle


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "groups",
        nargs="*",
        default=["3x5x5", "3x10x5", "3x10x10"],
        help="group shapes as RxMxN (criteria x constraints x variables)",
    )
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--base-seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    parser.add_argument("--no-compare", action="store_true")
    parser.add_argument("--detail", help="write per-instance CSV here")
    args = parser.parse_args(argv)

    groups = []
    for token in args.groups:
        r, m, n = (int(p) for p in token.lower().split("x"))
        groups.append((r, m, n))

    records = bench.run_benchmark(
        groups,
        seeds=args.seeds,
        base_seed=args.base_seed,
        oracle_budget=args.budget,
        compare=not args.no_compare,
    )
    bench.write_summary_csv(records, sys.stdout)
    if args.detail:
        with open(args.detail, "w", newline="") as handle:
            bench.write_detail_csv(records, handle)
        print(f"detail rows written to {args.detail}", file=sys.stderr)


if __name__ == "__main__":
    main()
