#!/usr/bin/env python3
"""Print the small-order polynomial tables for partitions and matchings.

Each table lists one polynomial per line in canonical term order, so the
output diffs cleanly between runs.  Useful as a quick eyeball check and
as the data behind the README examples.
"""
from __future__ import annotations

import argparse

from pstat.series import (
    bell_poly_cf,
    matching_alignment_poly,
    matching_poly,
    partition_alignment_poly,
    partition_edge_poly,
)

FAMILIES = {
    "B": ("partition crossing/nesting polynomials", bell_poly_cf),
    "L": ("matching crossing/nesting polynomials", matching_poly),
    "T": ("matching alignment/nesting polynomials", matching_alignment_poly),
    "E": ("partition edge-count polynomials", partition_edge_poly),
    "F": ("partition alignment/edge polynomials", partition_alignment_poly),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5, help="largest order to print")
    ap.add_argument(
        "--family",
        choices=sorted(FAMILIES),
        action="append",
        help="restrict to one family (repeatable; default: all)",
    )
    args = ap.parse_args()
    if args.max_n < 0:
        ap.error("--max-n must be nonnegative")

    chosen = args.family or sorted(FAMILIES)
    for key in chosen:
        title, fn = FAMILIES[key]
        print(f"# {key}: {title}")
        for n in range(args.max_n + 1):
            print(f"{key}_{n} = {fn(n)}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
