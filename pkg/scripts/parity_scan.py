#!/usr/bin/env python3
"""Scan the even-value density of any copartition family.

Prints the proportion of even counts among indices 1..n at doubling
checkpoints, e.g.:

  python scripts/parity_scan.py 1 4 5 --top 32000
  python scripts/parity_scan.py 3 1 4 --top 12100 --checkpoints 1210,12100
"""

import argparse
import sys

from copartitions import CpParams, copartition_parity, density_report


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("a", type=int)
    parser.add_argument("b", type=int)
    parser.add_argument("m", type=int)
    parser.add_argument("--top", type=int, default=32000)
    parser.add_argument("--checkpoints", help="comma-separated; default doubles from 1000")
    args = parser.parse_args()

    if args.checkpoints:
        checkpoints = sorted({int(c) for c in args.checkpoints.split(",")})
    else:
        checkpoints = []
        c = 1000
        while c < args.top:
            checkpoints.append(c)
            c *= 2
        checkpoints.append(args.top)
    checkpoints = [c for c in checkpoints if c <= args.top]

    params = CpParams(args.a, args.b, args.m)
    parity = copartition_parity(params, args.top)
    report = density_report(params, checkpoints, parity)
    print(f"family {params.label()}, even-value proportion over 1..n")
    for n, even, shown in zip(report.checkpoints, report.even_counts, report.rounded):
        print(f"  n={n:>7d}  even={even:>7d}  proportion={shown}")
    odd = parity.odd_exponents()
    print(f"odd count up to {args.top}: {len(odd)}; first odd indices: {odd[:8]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
