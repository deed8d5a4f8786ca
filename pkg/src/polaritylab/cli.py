"""Command-line front end.

Exit status: 0 yes/success, 1 no/violation, 2 usage, parse or capacity error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import comparability as comp
from . import gadget as gl
from . import graph as gc
from . import partition as part
from . import reduction as red
from . import selftest
from .errors import GadgetContractError, GadgetSearchError, PolarityLabError


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    return Path(path).read_text(encoding="ascii")


def _write(path: str, text: str):
    Path(path).write_text(text, encoding="ascii")


def cmd_solve(args) -> int:
    g = gc.read_dimacs_graph(_read(args.input))
    kind = part.PartitionKind(args.problem)
    out = []
    if args.enumerate:
        if kind is not part.PartitionKind.MONOPOLAR:
            raise UsageError("--enumerate is only available for monopolar")
        if args.brute:
            found = list(part.brute_all(g, kind))
        else:
            found = part.enumerate_monopolar(g)
        out.extend(part.format_partition(p) + "\n" for p in found)
        out.append(f"count: {len(found)}\n")
        status = 0 if found else 1
    else:
        solver = part.BRUTE[kind] if args.brute else part.SOLVERS[kind]
        p = solver(g)
        out.append(part.format_partition(p) if p is not None else "NONE\n")
        status = 0 if p is not None else 1
    if not args.quiet:
        sys.stdout.write("".join(out))
    return status


def cmd_recognize(args) -> int:
    g = gc.read_dimacs_graph(_read(args.input))
    orientation = None
    if args.check == "k4free":
        holds = not gc.has_k4(g)
    else:
        orientation = comp.find_transitive_orientation(g)
        holds = orientation is not None
        if args.check == "3cc":
            holds = holds and not gc.has_k4(g)
    sys.stdout.write(f"{args.check}: {'yes' if holds else 'no'}\n")
    if holds and orientation is not None:
        sys.stdout.write(comp.write_orientation(orientation))
    return 0 if holds else 1


def cmd_reduce(args) -> int:
    f = red.parse_formula(_read(args.cnf))
    gadget = gl.read_gadget_bundle(_read(args.gadget)) if args.gadget else None
    r = red.build_reduction(f, gadget)
    g = gc.double(r.graph) if args.double else r.graph
    comment = "polaritylab reduction" + (" (two disjoint copies)" if args.double else "")
    _write(args.out_graph, gc.write_dimacs_graph(g, comment=comment))
    mapping = red.write_mapping(r)
    if args.double:
        mapping = f"c second copy starts at vertex {r.graph.n + 1}\n" + mapping
    _write(args.out_map, mapping)
    sys.stdout.write(f"vertices: {g.n}\nedges: {g.m}\nclauses: {f.num_clauses}\n")
    return 0


def _describe(gadget: gl.ClauseGadget) -> str:
    g = gadget.graph
    lines = [f"vertices: {g.n}", f"edges: {g.m}"]
    lines.extend(f"t {i} {t + 1} {g.label(t)}" for i, t in enumerate(gadget.terminals, start=1))
    lines.append(f"hub {gadget.hub + 1} {g.label(gadget.hub)}")
    return "\n".join(lines) + "\n"


def cmd_gadget(args) -> int:
    if args.action == "synth":
        from .synthesis import synthesize_clause_gadget

        if not args.bundle:
            raise UsageError("gadget synth needs a bundle path to write")
        try:
            gadget = synthesize_clause_gadget(args.max_n, args.seed)
        except GadgetSearchError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _write(args.bundle, gl.write_gadget_bundle(gadget))
        sys.stdout.write(_describe(gadget))
        return 0

    if args.bundle:
        text = _read(args.bundle)
    else:
        text = gl.write_gadget_bundle(gl.default_gadget())
    if args.action == "show":
        gadget = gl.read_gadget_bundle(text, verify=False)
        sys.stdout.write(_describe(gadget) + comp.write_orientation(gadget.orientation))
        return 0
    try:
        gadget = gl.read_gadget_bundle(text, verify=True)
    except GadgetContractError as exc:
        print(f"contract violation {exc}", file=sys.stderr)
        return 1
    out = [_describe(gadget)]
    for p in gadget.certificate.partitions:
        t = gadget.certificate.right_terminal_of[p]
        out.append(f"\nright terminal: t{gadget.terminals.index(t) + 1}\n")
        out.append(part.format_partition(p))
    out.append(f"\ncount: {len(gadget.certificate.partitions)}\n")
    sys.stdout.write("".join(out))
    return 0


def cmd_selftest(args) -> int:
    config = selftest.SelftestConfig(
        max_n=args.max_n,
        comparability_max_n=args.max_n,
        formulas=args.formulas,
        random_graphs=args.random_graphs,
        doubling_random=args.formulas,
        synthesize=not args.no_synth,
        seed=args.seed,
    )
    results = selftest.run_all(config, args.suite)
    sys.stdout.write(selftest.format_table(results))
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"suite {r.name} failed:", file=sys.stderr)
        for msg in r.failures[:10]:
            print(f"  {msg}", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polaritylab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide or enumerate partitions of a DIMACS graph")
    p.add_argument("problem", choices=[k.value for k in part.PartitionKind])
    p.add_argument("input")
    p.add_argument("--brute", action="store_true", help="use the exhaustive 2^n oracle")
    p.add_argument("--enumerate", action="store_true", help="list every monopolar partition")
    p.add_argument("--quiet", action="store_true", help="exit status only")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("recognize", help="test comparability, K4-freeness, or both")
    p.add_argument("check", choices=["comparability", "k4free", "3cc"])
    p.add_argument("input")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("reduce", help="build the monopolarity instance of a positive 3-CNF")
    p.add_argument("cnf")
    p.add_argument("out_graph")
    p.add_argument("out_map")
    p.add_argument("--double", action="store_true", help="write two disjoint copies (polarity instance)")
    p.add_argument("--gadget", help="clause gadget bundle (default: the shipped gadget)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gadget", help="synthesize, verify or show a clause gadget bundle")
    p.add_argument("action", choices=["synth", "verify", "show"])
    p.add_argument("bundle", nargs="?", help="bundle path (verify/show default to the shipped gadget)")
    p.add_argument("--max-n", type=int, default=18)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("selftest", help="run the verification suites")
    p.add_argument("--max-n", type=int, default=6, help="exhaustive graph size")
    p.add_argument("--formulas", type=int, default=200, help="random formulas and random doubling graphs")
    p.add_argument("--random-graphs", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-synth", action="store_true", help="skip re-running gadget synthesis")
    p.add_argument("--suite", action="append", choices=list(selftest.SUITES))
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (PolarityLabError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
