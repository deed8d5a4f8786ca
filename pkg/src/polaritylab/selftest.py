"""Self-verification suites.

Each suite checks one family of properties over a generated corpus and
reports how many cases it checked and which ones failed. Solvers are looked
up through their modules at call time, so a patched solver is what gets
tested.
"""

from __future__ import annotations

import itertools
import random
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from . import comparability as comp
from . import gadget as gl
from . import graph as gc
from . import partition as part
from . import reduction as red
from .graph import Graph


@dataclass(frozen=True)
class SelftestConfig:
    max_n: int = 6
    random_graphs: int = 500
    random_n: tuple[int, int] = (7, 12)
    edge_probs: tuple[float, ...] = (0.2, 0.5, 0.8)
    formulas: int = 200
    formula_vars: tuple[int, int] = (3, 6)
    formula_clauses: tuple[int, int] = (1, 5)
    exhaustive_vars: int = 4
    exhaustive_clauses: int = 3
    doubling_random: int = 200
    doubling_max_n: int = 10
    cluster_max_n: int = 8
    comparability_max_n: int = 6
    synthesize: bool = True
    seed: int = 0


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def fail(self, message: str):
        self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<24} {self.checked:>8} {len(self.failures):>8} {self.seconds:>9.2f}  {status}"


# ---------------------------------------------------------------- corpora

def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))


def all_graphs_upto(max_n: int) -> Iterator[Graph]:
    for n in range(max_n + 1):
        yield from all_graphs(n)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_graphs(config: SelftestConfig) -> Iterator[Graph]:
    rng = random.Random(config.seed)
    lo, hi = config.random_n
    for i in range(config.random_graphs):
        yield random_graph(rng, rng.randint(lo, hi), config.edge_probs[i % len(config.edge_probs)])


def oracle_corpus(config: SelftestConfig) -> Iterator[Graph]:
    yield from all_graphs_upto(config.max_n)
    yield from random_graphs(config)


def formula_corpus(config: SelftestConfig) -> Iterator[red.Formula]:
    for n in range(config.exhaustive_vars + 1):
        yield from red.all_formulas(n, config.exhaustive_clauses)
    rng = random.Random(config.seed)
    for _ in range(config.formulas):
        n = rng.randint(*config.formula_vars)
        yield red.random_formula(rng, n, rng.randint(*config.formula_clauses))


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first, *rest)


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    result = SuiteResult(name)
    start = time.perf_counter()
    body(result)
    result.seconds = time.perf_counter() - start
    return result


# ---------------------------------------------------------------- suites

def suite_q_unique(config: SelftestConfig) -> SuiteResult:
    def body(res: SuiteResult):
        q = gl.build_q()
        res.checked += 1
        if not gl.verify_q(q):
            res.fail("verify_q(build_q()) is false")
        found = [p.a_side for p in part.brute_all(q, part.PartitionKind.MONOPOLAR)]
        res.checked += 1
        if found != [q.vertex_set(["v3", "v4"])]:
            res.fail(f"brute-force partitions of Q: {found}")

    return _timed("q-unique", body)


def suite_clause_gadget(config: SelftestConfig) -> SuiteResult:
    def body(res: SuiteResult):
        gadgets = [("default", gl.default_gadget())]
        if config.synthesize:
            from .synthesis import synthesize_clause_gadget

            synth = synthesize_clause_gadget(18, config.seed)
            gadgets.append(("synthesized", synth))
            if config.seed == 0:
                res.checked += 1
                if synth.graph.edges != gl.default_gadget().graph.edges:
                    res.fail("seed 0 synthesis differs from the shipped gadget")
        for name, gadget in gadgets:
            res.checked += 1
            failure = check_gadget_exhaustively(gadget)
            if failure:
                res.fail(f"{name}: {failure}")

    return _timed("clause-gadget", body)


def check_gadget_exhaustively(gadget: gl.ClauseGadget) -> str | None:
    """Re-derive G1..G5 from a full 2^n scan, independent of the backtracking engine."""
    g = gadget.graph
    parts = list(part.brute_all(g, part.PartitionKind.MONOPOLAR))
    if len(parts) != 3:
        return f"{len(parts)} monopolar partitions"
    rights = []
    for p in parts:
        right = [t for t in gadget.terminals if t in p.b_side]
        if len(right) != 1:
            return f"partition {sorted(p.a_side)} has {len(right)} right terminals"
        rights.append(right[0])
        if gadget.hub not in p.b_side:
            return "hub is left in some partition"
    if sorted(rights) != sorted(gadget.terminals):
        return "right terminals are not distinct"
    if not all(g.has_edge(gadget.hub, t) for t in gadget.terminals):
        return "hub misses a terminal"
    if gc.has_k4(g):
        return "contains K4"
    o = gadget.orientation
    if not comp.is_transitive(o) or not set(gadget.terminals) <= comp.sinks(o):
        return "orientation is not transitive with terminal sinks"
    return None


def suite_oracle_equivalence(config: SelftestConfig) -> SuiteResult:
    kinds = list(part.PartitionKind)

    def body(res: SuiteResult):
        for g in oracle_corpus(config):
            for kind in kinds:
                res.checked += 1
                got = getattr(part, f"solve_{kind.value}")(g)
                want = getattr(part, f"brute_{kind.value}")(g)
                if (got is None) != (want is None):
                    res.fail(f"{kind.value} n={g.n} edges={g.sorted_edges()}: solver {got is not None}, brute {want is not None}")
                elif got is not None and not part.validate(g, got):
                    res.fail(f"{kind.value} n={g.n} edges={g.sorted_edges()}: invalid partition returned")

    return _timed("oracle-equivalence", body)


def suite_reduction_equivalence(config: SelftestConfig) -> SuiteResult:
    def body(res: SuiteResult):
        for f in formula_corpus(config):
            res.checked += 1
            r = red.build_reduction(f)
            truth = red.brute_force_1in3(f)
            p = part.solve_monopolar(r.graph)
            if (truth is None) != (p is None):
                res.fail(f"{f}: 1-in-3 {truth is not None}, monopolar {p is not None}")
                continue
            if p is None:
                continue
            a = red.partition_to_assignment(r, p)
            if not red.check_1in3(f, a):
                res.fail(f"{f}: extracted assignment {a} is not 1-in-3")
            back = red.partition_to_assignment(r, red.assignment_to_partition(r, truth))
            if back != truth:
                res.fail(f"{f}: round trip changed {truth} into {back}")

    return _timed("reduction-equivalence", body)


def suite_reduction_structure(config: SelftestConfig) -> SuiteResult:
    def body(res: SuiteResult):
        for f in formula_corpus(config):
            res.checked += 1
            r = red.build_reduction(f)
            if not comp.is_3col_comparability(r.graph):
                res.fail(f"{f}: not a 3-colourable comparability graph")
            if f.num_clauses:
                colors = comp.chain_coloring(red.reduction_orientation(r))
                if comp.num_colors(colors) != 3 or not comp.is_proper_coloring(r.graph, colors):
                    res.fail(f"{f}: chain colouring uses {comp.num_colors(colors)} colours")

    return _timed("reduction-structure", body)


def suite_doubling(config: SelftestConfig) -> SuiteResult:
    def corpus():
        yield from all_graphs_upto(config.max_n)
        rng = random.Random(config.seed + 1)
        for i in range(config.doubling_random):
            yield random_graph(rng, rng.randint(1, config.doubling_max_n),
                               config.edge_probs[i % len(config.edge_probs)])

    def body(res: SuiteResult):
        for g in corpus():
            res.checked += 1
            d = gc.double(g)
            mono = part.solve_monopolar(g) is not None
            polar2 = part.solve_polar(d) is not None
            mono2 = part.solve_monopolar(d) is not None
            if not polar2 == mono == mono2:
                res.fail(f"n={g.n} edges={g.sorted_edges()}: 2G polar {polar2}, G monopolar {mono}, 2G monopolar {mono2}")

    return _timed("doubling", body)


def suite_co_cluster(config: SelftestConfig) -> SuiteResult:
    def body(res: SuiteResult):
        for n in range(config.cluster_max_n + 1):
            for sizes in integer_partitions(n):
                res.checked += 1
                co = gc.complement(gc.cluster_graph(sizes))
                if not gc.co_cluster_connectivity_check(co):
                    res.fail(f"complement of cluster {sizes} is disconnected with edges")

    return _timed("co-cluster", body)


def suite_complement(config: SelftestConfig) -> SuiteResult:
    def body(res: SuiteResult):
        for g in oracle_corpus(config):
            res.checked += 1
            a = part.solve_polar(g) is not None
            b = part.solve_polar(gc.complement(g)) is not None
            if a != b:
                res.fail(f"n={g.n} edges={g.sorted_edges()}: polar {a}, complement polar {b}")

    return _timed("complement", body)


def suite_comparability(config: SelftestConfig) -> SuiteResult:
    def body(res: SuiteResult):
        for g in all_graphs_upto(config.comparability_max_n):
            res.checked += 1
            got = comp.is_comparability(g)
            if got != comp.brute_is_comparability(g):
                res.fail(f"n={g.n} edges={g.sorted_edges()}: recogniser says {got}")

    return _timed("comparability", body)


SUITES: dict[str, Callable[[SelftestConfig], SuiteResult]] = {
    "q-unique": suite_q_unique,
    "clause-gadget": suite_clause_gadget,
    "oracle-equivalence": suite_oracle_equivalence,
    "reduction-equivalence": suite_reduction_equivalence,
    "reduction-structure": suite_reduction_structure,
    "doubling": suite_doubling,
    "co-cluster": suite_co_cluster,
    "complement": suite_complement,
    "comparability": suite_comparability,
}


def run_all(config: SelftestConfig, names: list[str] | None = None) -> list[SuiteResult]:
    return [SUITES[name](config) for name in (names or SUITES)]


def format_table(results: list[SuiteResult]) -> str:
    header = f"{'suite':<24} {'checked':>8} {'failed':>8} {'seconds':>9}  status"
    return "\n".join([header] + [r.line() for r in results]) + "\n"
