#!/usr/bin/env python3
"""Run every invariant suite at its default case count and print a summary.

Equivalent to ``linrel check --suite full`` but with per-suite timing.
"""

import argparse
import sys
import time

from linrel.harness import SUITES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cases", type=int, help="override the per-suite default")
    args = parser.parse_args()

    all_ok = True
    grand_start = time.perf_counter()
    for name in SUITES:
        start = time.perf_counter()
        result = run_suite(name, args.cases, args.seed)
        elapsed = time.perf_counter() - start
        status = "ok" if result.ok else "FAILED"
        print(f"{name:28s} cases={result.cases:4d} failed={result.failed:3d} "
              f"{elapsed:6.2f}s  {status}")
        if not result.ok:
            all_ok = False
            print(result.counterexample)
    print(f"total {time.perf_counter() - grand_start:.1f}s")
    return 0 if all_ok else 2


if __name__ == "__main__":
    sys.exit(main())
