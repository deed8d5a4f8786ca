"""Re-run clause-gadget synthesis and report, per connector count, whether the frame admits a gadget.

Usage: python scripts/gadget_minimality.py [--seeds 0 1 2] [--max-n 18]
"""

import argparse
import logging
import time
from dataclasses import dataclass

from polaritylab.selftest import check_gadget_exhaustively
from polaritylab.synthesis import FRAME_SIZE, synthesize_clause_gadget


@dataclass(frozen=True)
class Config:
    seeds: tuple[int, ...] = (0, 1, 2)
    max_n: int = 18


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, nargs="+", default=list(Config.seeds))
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args()
    config = Config(tuple(args.seeds), args.max_n)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    print(f"{'seed':>4} {'connectors':>10} {'vertices':>8} {'rounds':>6}  outcome")
    for seed in config.seeds:
        history = []
        start = time.perf_counter()
        gadget = synthesize_clause_gadget(config.max_n, seed, history=history)
        elapsed = time.perf_counter() - start
        for h in history:
            print(f"{seed:>4} {h.connectors:>10} {FRAME_SIZE + h.connectors:>8} {h.rounds:>6}  {h.outcome}")
        failure = check_gadget_exhaustively(gadget)
        print(f"seed {seed}: {gadget.graph.n} vertices, {gadget.graph.m} edges, "
              f"full scan {'ok' if failure is None else failure}, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
