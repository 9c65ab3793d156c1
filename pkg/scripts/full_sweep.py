#!/usr/bin/env python3
"""Run every verification sweep and print one verdict line per sweep.

Exit status 0 when everything holds, 1 otherwise.

    python3 scripts/full_sweep.py --n 4 --random
"""

import argparse
import sys

from matlift.sweeps import SweepConfig, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4,
                    help="size cap; each sweep additionally has its own")
    ap.add_argument("--random", action="store_true",
                    help="include the randomized instance sweep")
    ap.add_argument("--seed", type=int, default=SweepConfig.seed,
                    help="seed for the randomized sweep")
    args = ap.parse_args()
    config = SweepConfig(seed=args.seed) if args.random else None
    outcomes = run_all(args.n, config=config, emit=print)
    return 0 if all(o.ok for o in outcomes) else 1


if __name__ == "__main__":
    sys.exit(main())
