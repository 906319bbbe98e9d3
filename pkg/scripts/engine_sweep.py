#!/usr/bin/env python3
"""Cross-check the Jones engines over an exhaustive sweep and report timing.

Example:
    python scripts/engine_sweep.py --max-sum 12
"""

import argparse
import sys
import time

from twobridge.verify import run_verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-sum", type=int, default=10,
                        help="bound on sum(|entries|) for the cf sweeps")
    parser.add_argument("--max-p", type=int, default=80,
                        help="bound on p for the fraction sweeps")
    args = parser.parse_args()

    start = time.perf_counter()
    counts = run_verify(max_sum=args.max_sum, max_p=args.max_p)
    elapsed = time.perf_counter() - start
    for name, count in counts.items():
        print(f"{name:28s} {count:8d} inputs, no mismatch")
    print(f"total {sum(counts.values())} checks in {elapsed:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
