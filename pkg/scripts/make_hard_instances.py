"""Write random reduction instances with known answers, for testing outside monopolarity solvers.

For each formula the output directory gets NAME.cnf, NAME.dimacs (the
reduction graph, or two copies with --double), NAME.map and a line in
answers.tsv with the brute-force 1-in-3 verdict.

Usage: python scripts/make_hard_instances.py OUT_DIR [--count 20] [--vars 8] [--ratio 1.0] [--seed 0] [--double]
"""

import argparse
import random
from dataclasses import dataclass
from pathlib import Path

from polaritylab.graph import double, write_dimacs_graph
from polaritylab.reduction import brute_force_1in3, build_reduction, random_formula, write_formula, write_mapping


@dataclass(frozen=True)
class Config:
    count: int = 20
    num_vars: int = 8
    # clauses per variable; at 1.0 and 8 variables about half the formulas are satisfiable
    ratio: float = 1.0
    seed: int = 0
    double: bool = False


def generate(out: Path, config: Config) -> list[tuple[str, bool]]:
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(config.seed)
    answers = []
    for i in range(config.count):
        m = max(1, round(config.ratio * config.num_vars))
        f = random_formula(rng, config.num_vars, m)
        r = build_reduction(f)
        g = double(r.graph) if config.double else r.graph
        name = f"inst{i:03d}"
        (out / f"{name}.cnf").write_text(write_formula(f))
        (out / f"{name}.dimacs").write_text(write_dimacs_graph(g, comment=f"{name} from {name}.cnf"))
        (out / f"{name}.map").write_text(write_mapping(r))
        answers.append((name, brute_force_1in3(f) is not None))
    lines = ["name\texpected"] + [f"{name}\t{'yes' if yes else 'no'}" for name, yes in answers]
    (out / "answers.tsv").write_text("\n".join(lines) + "\n")
    return answers


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out", type=Path)
    parser.add_argument("--count", type=int, default=Config.count)
    parser.add_argument("--vars", type=int, default=Config.num_vars)
    parser.add_argument("--ratio", type=float, default=Config.ratio)
    parser.add_argument("--seed", type=int, default=Config.seed)
    parser.add_argument("--double", action="store_true", help="write polarity instances (two disjoint copies)")
    args = parser.parse_args()
    answers = generate(args.out, Config(args.count, args.vars, args.ratio, args.seed, args.double))
    yes = sum(1 for _, a in answers if a)
    print(f"wrote {len(answers)} instances to {args.out}: {yes} yes, {len(answers) - yes} no")


if __name__ == "__main__":
    main()
