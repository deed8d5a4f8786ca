"""Time the backtracking solver on reduction graphs as the formula grows.

Prints one row per (variables, clauses) cell: instance size, share of
satisfiable formulas, and mean/max solve time. Answers are checked against
brute-force 1-in-3 while the variable count allows it.

Usage: python scripts/reduction_timing.py [--vars 4 6 8 10 12] [--ratios 0.4 0.7 1.0] [--trials 10]
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass

from polaritylab.partition import solve_monopolar
from polaritylab.reduction import brute_force_1in3, build_reduction, random_formula

BRUTE_LIMIT = 16


@dataclass(frozen=True)
class Config:
    vars: tuple[int, ...] = (4, 6, 8, 10, 12)
    ratios: tuple[float, ...] = (0.4, 0.7, 1.0)
    trials: int = 10
    seed: int = 0


def run(config: Config):
    rng = random.Random(config.seed)
    print(f"{'n':>3} {'m':>3} {'vertices':>8} {'sat':>5} {'mean ms':>9} {'max ms':>9}")
    for n in config.vars:
        for ratio in config.ratios:
            m = max(1, round(ratio * n))
            times, sat = [], 0
            for _ in range(config.trials):
                f = random_formula(rng, n, m)
                r = build_reduction(f)
                start = time.perf_counter()
                p = solve_monopolar(r.graph)
                times.append(time.perf_counter() - start)
                sat += p is not None
                if n <= BRUTE_LIMIT and (brute_force_1in3(f) is None) != (p is None):
                    raise SystemExit(f"disagreement on {f}")
            print(f"{n:>3} {m:>3} {r.graph.n:>8} {sat / config.trials:>5.2f} "
                  f"{1e3 * statistics.mean(times):>9.2f} {1e3 * max(times):>9.2f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--vars", type=int, nargs="+", default=list(Config.vars))
    parser.add_argument("--ratios", type=float, nargs="+", default=list(Config.ratios))
    parser.add_argument("--trials", type=int, default=Config.trials)
    parser.add_argument("--seed", type=int, default=Config.seed)
    args = parser.parse_args()
    run(Config(tuple(args.vars), tuple(args.ratios), args.trials, args.seed))


if __name__ == "__main__":
    main()
