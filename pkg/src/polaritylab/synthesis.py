"""Search for clause gadgets satisfying the G1..G5 contract.

The frame is fixed: two induced copies of Q (the first one's u vertex is
the hub), three terminals joined to the hub, and ``k`` connector vertices.
Every other vertex pair is a free edge. For k = 0, 1, ... the free edges are
chosen by a SAT solver under

* a transitive orientation with every terminal a sink, and no K4;
* for each terminal, some monopolar partition in which it is the only
  right terminal;
* every counterexample seen so far: a monopolar partition of an earlier
  candidate that had the wrong number of right terminals must become
  invalid, and two partitions sharing a right terminal cannot both stay
  valid.

Each candidate is enumerated with the partition engine; the first one with
exactly the three intended partitions is certified and returned. An
unsatisfiable formula for a given ``k`` proves that no gadget with that many
connectors exists inside this frame.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass

from .errors import CapacityError, GadgetContractError, GadgetSearchError
from .gadget import Q_EDGES, ClauseGadget, sink_orientation, verify_clause_gadget
from .graph import Graph, make_graph
from .partition import PartitionKind, iter_partitions, max_brute

log = logging.getLogger(__name__)

HUB = 4
Q2_U = 9
TERMINALS = (10, 11, 12)
FRAME_SIZE = 13
FRAME_LABELS = (
    "v1", "v2", "v3", "v4", "v5",
    "v12", "v13", "v14", "v15", "v10",
    "t1", "t2", "t3",
)
COUNTEREXAMPLES_PER_ROUND = 40


@dataclass(frozen=True)
class SynthesisConfig:
    max_n: int = 18
    seed: int = 0
    max_rounds: int = 10_000


@dataclass
class RoundLog:
    connectors: int
    rounds: int
    outcome: str  # "found" | "infeasible" | "gave up"


def frame_edges() -> set[tuple[int, int]]:
    edges = set(Q_EDGES) | {(u + 5, v + 5) for u, v in Q_EDGES}
    edges |= {(HUB, t) for t in TERMINALS}
    return edges


def frame_labels(n: int) -> tuple[str, ...]:
    return FRAME_LABELS + tuple(f"w{i}" for i in range(1, n - FRAME_SIZE + 1))


class _Encoding:
    """CNF over edge, orientation and intended-partition variables for one ``n``."""

    def __init__(self, n: int, seed: int):
        from pysat.formula import IDPool

        self.n = n
        self.pool = IDPool()
        self.clauses: list[list[int]] = []
        self.rng = random.Random(seed) if seed else None
        fixed = frame_edges()
        copy_of = {v: v // 5 for v in range(10)}
        for u, v in itertools.combinations(range(n), 2):
            if (u, v) in fixed:
                self.clauses.append([self.e(u, v)])
            elif u in copy_of and v in copy_of and copy_of[u] == copy_of[v]:
                self.clauses.append([-self.e(u, v)])
        self._orientation()
        self._no_k4()
        for j in range(3):
            self._intended(j)

    def e(self, u: int, v: int) -> int:
        return self.pool.id(("e", min(u, v), max(u, v)))

    def o(self, u: int, v: int) -> int:
        return self.pool.id(("o", u, v))

    def _orientation(self):
        n, e, o, add = self.n, self.e, self.o, self.clauses.append
        for u, v in itertools.combinations(range(n), 2):
            add([-e(u, v), o(u, v), o(v, u)])
            add([-o(u, v), -o(v, u)])
            add([-o(u, v), e(u, v)])
            add([-o(v, u), e(u, v)])
        for a, b, c in itertools.permutations(range(n), 3):
            add([-o(a, b), -o(b, c), o(a, c)])
        for t in TERMINALS:
            for v in range(n):
                if v != t:
                    add([-o(t, v)])

    def _no_k4(self):
        for quad in itertools.combinations(range(self.n), 4):
            self.clauses.append([-self.e(a, b) for a, b in itertools.combinations(quad, 2)])

    def _intended(self, j: int):
        # r(j, v): v is right in the partition whose right terminal is TERMINALS[j]
        def r(v):
            return self.pool.id(("r", j, v))

        n, e, add = self.n, self.e, self.clauses.append
        for i, t in enumerate(TERMINALS):
            add([r(t)] if i == j else [-r(t)])
        for u, v in itertools.combinations(range(n), 2):
            add([-e(u, v), r(u), r(v)])
        for b in range(n):
            for a, c in itertools.combinations([x for x in range(n) if x != b], 2):
                add([-e(a, b), -e(b, c), e(a, c), -r(a), -r(b), -r(c)])

    def p3(self, b: int, a: int, c: int, sink: list[list[int]]) -> int:
        a, c = min(a, c), max(a, c)
        key = ("p3", b, a, c)
        if key not in self.pool.obj2id:
            x = self.pool.id(key)
            sink.extend([[-x, self.e(a, b)], [-x, self.e(b, c)], [-x, -self.e(a, c)]])
        return self.pool.id(key)

    def invalid(self, a_side: frozenset[int], sink: list[list[int]]) -> list[int]:
        """Literals of which at least one must hold for this A-set to stop being monopolar."""
        left = sorted(a_side)
        right = [v for v in range(self.n) if v not in a_side]
        lits = [self.e(a, b) for a, b in itertools.combinations(left, 2)]
        for b in right:
            for a, c in itertools.combinations([x for x in right if x != b], 2):
                lits.append(self.p3(b, a, c, sink))
        return lits

    def edge_vars(self):
        return [self.e(u, v) for u, v in itertools.combinations(range(self.n), 2)]


def _candidate_graph(enc: _Encoding, model: set[int]) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(enc.n), 2) if enc.e(u, v) in model]
    return make_graph(enc.n, edges, frame_labels(enc.n))


def _search_size(n: int, config: SynthesisConfig) -> tuple[ClauseGadget | None, RoundLog]:
    from pysat.solvers import Cadical153

    enc = _Encoding(n, config.seed)
    clauses = enc.clauses
    if enc.rng is not None:
        clauses = clauses[:]
        enc.rng.shuffle(clauses)
    with Cadical153(bootstrap_with=clauses) as solver:
        if enc.rng is not None:
            solver.set_phases([v if enc.rng.random() < 0.5 else -v for v in enc.edge_vars()])
        for rounds in range(1, config.max_rounds + 1):
            if not solver.solve():
                return None, RoundLog(n - FRAME_SIZE, rounds, "infeasible")
            g = _candidate_graph(enc, {lit for lit in solver.get_model() if lit > 0})
            parts = list(itertools.islice(iter_partitions(g, PartitionKind.MONOPOLAR),
                                          COUNTEREXAMPLES_PER_ROUND))
            new: list[list[int]] = []
            by_terminal: dict[int, list[frozenset[int]]] = {}
            for p in parts:
                right = [t for t in TERMINALS if t in p.b_side]
                if len(right) == 1:
                    by_terminal.setdefault(right[0], []).append(p.a_side)
                else:
                    new.append(enc.invalid(p.a_side, new))
            for group in by_terminal.values():
                for a1, a2 in itertools.combinations(group, 2):
                    new.append(enc.invalid(a1, new) + enc.invalid(a2, new))
            if not new:
                gadget = _certify(g)
                if gadget is not None:
                    return gadget, RoundLog(n - FRAME_SIZE, rounds, "found")
                # certification disagreed with the encoding; exclude this exact graph
                new.append([-lit if lit in solver.get_model() else lit for lit in enc.edge_vars()])
            for clause in new:
                solver.add_clause(clause)
    return None, RoundLog(n - FRAME_SIZE, config.max_rounds, "gave up")


def _certify(g: Graph) -> ClauseGadget | None:
    o = sink_orientation(g, TERMINALS)
    if o is None:
        return None
    candidate = ClauseGadget(g, TERMINALS, HUB, o)
    try:
        return ClauseGadget(g, TERMINALS, HUB, o, verify_clause_gadget(candidate))
    except GadgetContractError as exc:
        log.warning("candidate rejected by verifier: %s", exc)
        return None


def synthesize_clause_gadget(max_n: int = 18, seed: int = 0, *,
                             config: SynthesisConfig | None = None,
                             history: list[RoundLog] | None = None) -> ClauseGadget:
    """Smallest certified gadget in the frame with at most ``max_n`` vertices.

    Connector counts are tried in increasing order. ``history``, when given,
    receives one entry per connector count tried.
    """
    config = config or SynthesisConfig(max_n=max_n, seed=seed)
    if config.max_n > max_brute():
        raise CapacityError(f"max_n {config.max_n} exceeds the enumeration limit {max_brute()}")
    for n in range(FRAME_SIZE, config.max_n + 1):
        gadget, entry = _search_size(n, config)
        log.info("connectors=%d rounds=%d %s", entry.connectors, entry.rounds, entry.outcome)
        if history is not None:
            history.append(entry)
        if gadget is not None:
            return gadget
    raise GadgetSearchError(f"no gadget found within bounds (max_n={config.max_n})")
