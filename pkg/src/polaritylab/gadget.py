"""The forcing graph Q and the clause gadget contract.

A clause gadget is a graph with three terminals and a hub such that

* G1: every monopolar partition puts exactly one terminal in B;
* G2: there are exactly three monopolar partitions, one per right terminal;
* G3: a transitive orientation is supplied in which every terminal is a sink;
* G4: the graph has no K4;
* G5: the hub is adjacent to all terminals and lies in B in every partition.

These are the only properties the reduction relies on, so any graph that is
certified against them can serve as the per-clause building block.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .comparability import (
    Orientation,
    find_transitive_orientation,
    is_comparability,
    is_transitive,
    orient,
    read_orientation,
    sinks,
    write_orientation,
)
from .errors import CapacityError, GadgetContractError, GraphError, ParseError
from .graph import Graph, has_k4, make_graph, read_dimacs_graph, write_dimacs_graph
from .partition import Partition, enumerate_monopolar, max_brute

Q_LABELS = ("v1", "v2", "v3", "v4", "u")
Q_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4))
# (v3, v4 | v1, v2, u)
Q_PARTITION_A = frozenset({2, 3})


def build_q() -> Graph:
    """The 5-vertex graph whose only monopolar partition is ({v3, v4}, {v1, v2, u})."""
    q = make_graph(5, Q_EDGES, Q_LABELS)
    if not verify_q(q):
        raise GraphError("reconstructed Q does not have a unique monopolar partition")
    return q


def q_orientation(q: Graph | None = None) -> Orientation:
    q = q if q is not None else make_graph(5, Q_EDGES, Q_LABELS)
    v1, v2, v3, v4, u = range(5)
    return orient(q, [(v3, v1), (v3, v2), (v4, v1), (v4, v2), (v1, v2), (v3, u), (v4, u)])


def verify_q(g: Graph) -> bool:
    """True iff ``g`` behaves as Q: one monopolar partition, K4-free, comparability.

    Vertices are read positionally as v1, v2, v3, v4, u.
    """
    if g.n != 5:
        raise GraphError(f"Q has 5 vertices, got {g.n}")
    if g.labels is not None and g.labels != Q_LABELS:
        raise GraphError(f"expected labels {Q_LABELS}, got {g.labels}")
    parts = enumerate_monopolar(g)
    if [p.a_side for p in parts] != [Q_PARTITION_A]:
        return False
    return not has_k4(g) and is_comparability(g)


@dataclass(frozen=True)
class GadgetCertificate:
    partitions: tuple[Partition, ...]
    right_terminal_of: dict[Partition, int]
    orientation_check: bool
    k4_check: bool
    hub_check: bool

    def partition_for(self, terminal: int) -> Partition:
        """The partition whose right terminal is ``terminal`` (a vertex)."""
        for p, t in self.right_terminal_of.items():
            if t == terminal:
                return p
        raise KeyError(terminal)


@dataclass(frozen=True)
class ClauseGadget:
    graph: Graph
    terminals: tuple[int, int, int]
    hub: int
    orientation: Orientation
    certificate: GadgetCertificate | None = field(default=None, compare=False)

    def certified(self) -> ClauseGadget:
        """A copy carrying a freshly computed certificate."""
        return ClauseGadget(self.graph, self.terminals, self.hub, self.orientation,
                            verify_clause_gadget(self))


def verify_clause_gadget(candidate: ClauseGadget) -> GadgetCertificate:
    """Check G1..G5 by exhaustive enumeration; raise on the first violation."""
    g = candidate.graph
    if g.n > max_brute():
        raise CapacityError(f"gadget has {g.n} vertices, enumeration limit is {max_brute()}")
    terms = tuple(candidate.terminals)
    if len(terms) != 3 or len(set(terms)) != 3 or not all(0 <= t < g.n for t in terms):
        raise GraphError(f"terminals must be three distinct vertices, got {terms}")
    if not 0 <= candidate.hub < g.n:
        raise GraphError(f"hub {candidate.hub} is not a vertex")
    if candidate.orientation.graph != g:
        raise GadgetContractError("G3", "orientation belongs to a different graph")

    parts = enumerate_monopolar(g)
    right_of = {}
    for p in parts:
        right = [t for t in terms if t in p.b_side]
        if len(right) != 1:
            raise GadgetContractError(
                "G1", f"partition with A={sorted(p.a_side)} has {len(right)} right terminals")
        right_of[p] = right[0]
    if len(parts) != 3 or sorted(right_of.values()) != sorted(terms):
        raise GadgetContractError(
            "G2", f"{len(parts)} monopolar partitions with right terminals {sorted(right_of.values())}")

    o = candidate.orientation
    if not is_transitive(o):
        raise GadgetContractError("G3", "orientation is not transitive")
    not_sinks = sorted(set(terms) - sinks(o))
    if not_sinks:
        raise GadgetContractError("G3", f"terminals {not_sinks} have outgoing arcs")

    if has_k4(g):
        raise GadgetContractError("G4", "graph contains K4")

    hub = candidate.hub
    if hub in terms or not all(g.has_edge(hub, t) for t in terms):
        raise GadgetContractError("G5", "hub is not adjacent to every terminal")
    if not all(hub in p.b_side for p in parts):
        raise GadgetContractError("G5", "hub is left in some partition")

    return GadgetCertificate(tuple(parts), right_of, True, True, True)


def sink_orientation(g: Graph, terminals) -> Orientation | None:
    """A transitive orientation of ``g`` in which every terminal is a sink.

    Adds one apex adjacent to the (pairwise non-adjacent) terminals and
    orients the enlarged graph; the apex arcs all point the same way, and
    reversing if needed makes the terminals sinks.
    """
    terms = list(terminals)
    if any(g.has_edge(a, b) for a in terms for b in terms if a != b):
        return None
    apex = g.n
    big = make_graph(g.n + 1, list(g.edges) + [(apex, t) for t in terms])
    o = find_transitive_orientation(big)
    if o is None:
        return None
    arcs = o.arcs
    if (terms[0], apex) in arcs:
        arcs = frozenset((v, u) for u, v in arcs)
    return orient(g, [(u, v) for u, v in arcs if apex not in (u, v)])


# ---------------------------------------------------------------- the shipped gadget

# First gadget found by synthesize_clause_gadget(18, 0). Layout: v1..v5 is a
# copy of Q with v5 in the u role (the hub); v12..v15, v10 is a second copy
# with v10 in the u role; t1..t3 are the terminals; w1..w5 are connectors.
DEFAULT_LABELS = (
    "v1", "v2", "v3", "v4", "v5",
    "v12", "v13", "v14", "v15", "v10",
    "t1", "t2", "t3",
    "w1", "w2", "w3", "w4", "w5",
)
DEFAULT_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 9), (1, 2), (1, 3),
    (1, 9), (2, 4), (3, 4), (4, 10), (4, 11), (4, 12),
    (5, 6), (5, 7), (5, 8), (5, 13), (5, 14), (6, 7),
    (6, 8), (6, 13), (6, 14), (7, 9), (8, 9), (10, 16),
    (11, 14), (12, 17), (13, 15), (15, 16), (15, 17),
)
DEFAULT_TERMINALS = (10, 11, 12)
DEFAULT_HUB = 4


@functools.lru_cache(maxsize=1)
def default_gadget() -> ClauseGadget:
    g = make_graph(len(DEFAULT_LABELS), DEFAULT_EDGES, DEFAULT_LABELS)
    o = sink_orientation(g, DEFAULT_TERMINALS)
    if o is None:
        raise GadgetContractError("G3", "shipped gadget has no terminal-sink orientation")
    return ClauseGadget(g, DEFAULT_TERMINALS, DEFAULT_HUB, o).certified()


# ---------------------------------------------------------------- bundle files

def write_gadget_bundle(gadget: ClauseGadget) -> str:
    text = write_dimacs_graph(gadget.graph, comment="polaritylab clause gadget")
    text += "".join(f"t {i} {t + 1}\n" for i, t in enumerate(gadget.terminals, start=1))
    text += f"hub {gadget.hub + 1}\n"
    return text + write_orientation(gadget.orientation)


def read_gadget_bundle(text: str, verify: bool = True) -> ClauseGadget:
    """Parse a bundle; with ``verify`` the contract is re-checked and attached."""
    lines = text.splitlines()
    graph_end = next((i for i, raw in enumerate(lines) if raw.split()[:1] in (["t"], ["hub"])), None)
    if graph_end is None:
        raise ParseError("bundle has no terminal lines")
    orient_start = next((i for i in range(graph_end, len(lines))
                         if lines[i].split()[:2] == ["p", "orient"]), None)
    if orient_start is None:
        raise ParseError("bundle has no orientation section")
    g = read_dimacs_graph("\n".join(lines[:graph_end]))
    terminals: dict[int, int] = {}
    hub = None
    for lineno in range(graph_end, orient_start):
        parts = lines[lineno].split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "t" and len(parts) == 3 and parts[1] in ("1", "2", "3"):
                terminals[int(parts[1])] = int(parts[2]) - 1
                continue
            if parts[0] == "hub" and len(parts) == 2:
                hub = int(parts[1]) - 1
                continue
        except ValueError:
            pass
        raise ParseError(f"unrecognised line {lines[lineno].strip()!r}", lineno + 1)
    if sorted(terminals) != [1, 2, 3] or hub is None:
        raise ParseError("bundle needs 't 1', 't 2', 't 3' and 'hub' lines")
    if not all(0 <= v < g.n for v in [*terminals.values(), hub]):
        raise ParseError("terminal or hub outside the vertex range")
    o = read_orientation("\n".join(lines[orient_start:]), g, first_line=orient_start + 1)
    gadget = ClauseGadget(g, (terminals[1], terminals[2], terminals[3]), hub, o)
    return gadget.certified() if verify else gadget

