#!/usr/bin/env python3
"""Run every exhaustive verification suite and report one line per suite.

Exits nonzero if any suite finds a counterexample.  Sizes default to the
per-suite values in pstat.verify.DEFAULT_N_MAX; pass --n-max to override
all of them at once (enumeration is Bell-number sized, so going much past
the defaults gets slow quickly).
"""
from __future__ import annotations

import argparse
import sys
import time

from pstat.verify import DEFAULT_N_MAX, SUITES


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=None, help="override every suite's size bound")
    ap.add_argument(
        "--suite",
        choices=sorted(SUITES),
        action="append",
        help="run only this suite (repeatable; default: all)",
    )
    args = ap.parse_args()
    if args.n_max is not None and args.n_max < 0:
        ap.error("--n-max must be nonnegative")

    chosen = args.suite or sorted(SUITES)
    failed = False
    for name in chosen:
        n_max = args.n_max if args.n_max is not None else DEFAULT_N_MAX[name]
        start = time.perf_counter()
        result = SUITES[name](n_max)
        elapsed = time.perf_counter() - start
        status = "PASS" if result.passed else "FAIL"
        print(
            f"suite={name} n_max={result.n_max} checked={result.checked} "
            f"{status} ({elapsed:.2f}s)"
        )
        for failure in result.failures:
            print(f"  counterexample: {failure}", file=sys.stderr)
        failed = failed or not result.passed
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
