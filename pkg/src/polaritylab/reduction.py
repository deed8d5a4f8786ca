"""Positive 3-CNF formulas, 1-in-3-SAT, and the monopolarity reduction.

The reduction graph has one vertex x_k per variable followed by one copy of
the clause gadget per clause; the j-th variable of clause i is joined to
terminal j of copy i. Variables are 1-based throughout, matching DIMACS.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import CapacityError, GadgetContractError, ParseError, PartitionError
from .gadget import ClauseGadget, default_gadget
from .graph import Graph, make_graph
from .partition import Partition, PartitionKind, validate

MAX_BRUTE_VARS = 24

Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class Formula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError(f"clause {clause} does not have three variables")
            if len(set(clause)) != 3:
                raise ValueError(f"repeated variable in clause {clause}")
            if not all(1 <= x <= self.num_vars for x in clause):
                raise ValueError(f"clause {clause} uses a variable outside 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def parse_formula(text: str) -> Formula:
    """Read DIMACS CNF restricted to clauses of three distinct positive variables."""
    header = None
    clauses = []
    pending: list[int] = []
    pending_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] in ("c", "%"):
            continue
        if parts[0] == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {raw.strip()!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"non-integer header field in {raw.strip()!r}", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' line", lineno)
        for tok in parts:
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"non-integer literal {tok!r}", lineno) from None
            if pending_line is None:
                pending_line = lineno
            if lit == 0:
                clauses.append(_check_clause(pending, header[0], pending_line))
                pending, pending_line = [], None
            elif lit < 0:
                raise ParseError(f"negated literal not allowed ({lit})", lineno)
            else:
                pending.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf n m' line")
    if pending:
        raise ParseError("last clause is not terminated by 0", pending_line)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return Formula(header[0], tuple(clauses))


def _check_clause(lits: list[int], num_vars: int, lineno: int) -> tuple[int, int, int]:
    if len(lits) != 3:
        raise ParseError(f"clause has {len(lits)} literals, expected 3", lineno)
    if len(set(lits)) != 3:
        raise ParseError(f"repeated variable in clause {lits}", lineno)
    for x in lits:
        if x > num_vars:
            raise ParseError(f"variable {x} exceeds declared count {num_vars}", lineno)
    return tuple(lits)


def write_formula(f: Formula) -> str:
    lines = [f"p cnf {f.num_vars} {f.num_clauses}"]
    lines.extend(f"{a} {b} {c} 0" for a, b, c in f.clauses)
    return "\n".join(lines) + "\n"


def random_formula(rng: random.Random, num_vars: int, num_clauses: int) -> Formula:
    clauses = tuple(tuple(rng.sample(range(1, num_vars + 1), 3)) for _ in range(num_clauses))
    return Formula(num_vars, clauses)


def all_formulas(num_vars: int, max_clauses: int):
    """Every formula over ``num_vars`` variables with up to ``max_clauses`` clauses.

    Clauses are drawn from the sorted variable triples, in every order and
    with repetition.
    """
    triples = list(itertools.combinations(range(1, num_vars + 1), 3))
    for m in range(max_clauses + 1):
        for clauses in itertools.product(triples, repeat=m):
            yield Formula(num_vars, clauses)


# ---------------------------------------------------------------- 1-in-3-SAT

def check_1in3(f: Formula, a: Assignment) -> bool:
    if len(a) != f.num_vars:
        raise ValueError(f"assignment has {len(a)} values for {f.num_vars} variables")
    return all(sum(a[x - 1] for x in clause) == 1 for clause in f.clauses)


def brute_force_1in3(f: Formula) -> Assignment | None:
    """Lexicographically least 1-in-3 assignment (True before False, variable 1 first)."""
    if f.num_vars > MAX_BRUTE_VARS:
        raise CapacityError(f"brute force is limited to {MAX_BRUTE_VARS} variables, got {f.num_vars}")
    for values in itertools.product((True, False), repeat=f.num_vars):
        if check_1in3(f, values):
            return values
    return None


# ---------------------------------------------------------------- the reduction graph

@dataclass(frozen=True)
class LabeledReduction:
    formula: Formula
    graph: Graph
    gadget: ClauseGadget
    x_vertex_of: dict[int, int] = field(compare=False)
    copy_of: dict[int, range] = field(compare=False)
    terminal_of: dict[tuple[int, int], int] = field(compare=False)
    hub_of: dict[int, int] = field(compare=False)

    @property
    def cross_edges(self) -> list[tuple[int, int]]:
        return [(self.x_vertex_of[x], self.terminal_of[i, pos])
                for i, clause in enumerate(self.formula.clauses)
                for pos, x in enumerate(clause, start=1)]


def build_reduction(f: Formula, gadget: ClauseGadget | None = None) -> LabeledReduction:
    """The reduction graph of ``f``; clause indices in the maps are 0-based."""
    gadget = gadget if gadget is not None else default_gadget()
    if gadget.certificate is None:
        raise GadgetContractError("uncertified", "build_reduction needs a certified gadget")
    n, s = f.num_vars, gadget.graph.n
    labels = [f"x{k}" for k in range(1, n + 1)]
    edges = []
    x_vertex_of = {k: k - 1 for k in range(1, n + 1)}
    copy_of, terminal_of, hub_of = {}, {}, {}
    for i, clause in enumerate(f.clauses):
        base = n + i * s
        copy_of[i] = range(base, base + s)
        hub_of[i] = base + gadget.hub
        labels.extend(f"{gadget.graph.label(v)}_{i + 1}" for v in range(s))
        edges.extend((base + u, base + v) for u, v in gadget.graph.edges)
        for pos, x in enumerate(clause, start=1):
            t = base + gadget.terminals[pos - 1]
            terminal_of[i, pos] = t
            edges.append((x_vertex_of[x], t))
    g = make_graph(n + s * f.num_clauses, edges, labels)
    r = LabeledReduction(f, g, gadget, x_vertex_of, copy_of, terminal_of, hub_of)
    _check_structure(r)
    return r


def _check_structure(r: LabeledReduction):
    g = r.graph
    xs = list(r.x_vertex_of.values())
    seen = 0
    for x in xs:
        if g.adj[x] & seen:
            raise AssertionError("variable vertices have overlapping neighbourhoods")
        seen |= g.adj[x]
        if any(g.has_edge(x, y) for y in xs):
            raise AssertionError("variable vertices are not independent")
    cross = {(min(e), max(e)) for e in r.cross_edges}
    x_edges = {e for e in g.edges if e[0] < r.formula.num_vars}
    if cross != x_edges or len(cross) != 3 * r.formula.num_clauses:
        raise AssertionError("cross edges differ from the construction")


def reduction_orientation(r: LabeledReduction):
    """Each gadget copy oriented as the gadget, every cross edge x -> terminal."""
    from .comparability import orient

    arcs = []
    for i in range(r.formula.num_clauses):
        base = r.copy_of[i].start
        arcs.extend((base + u, base + v) for u, v in r.gadget.orientation.arcs)
    arcs.extend(r.cross_edges)
    return orient(r.graph, arcs)


def assignment_to_partition(r: LabeledReduction, a: Assignment) -> Partition:
    """True variables left, false right, each copy in the partition of its true terminal."""
    f = r.formula
    if not check_1in3(f, a):
        raise ValueError("assignment does not make exactly one variable true per clause")
    cert = r.gadget.certificate
    left = {r.x_vertex_of[k] for k in range(1, f.num_vars + 1) if a[k - 1]}
    for i, clause in enumerate(f.clauses):
        pos = next(p for p, x in enumerate(clause, start=1) if a[x - 1])
        local = cert.partition_for(r.gadget.terminals[pos - 1])
        base = r.copy_of[i].start
        left.update(base + v for v in local.a_side)
    p = Partition(PartitionKind.MONOPOLAR, frozenset(left), frozenset(range(r.graph.n)) - frozenset(left))
    if not validate(r.graph, p):
        raise AssertionError("constructed partition is not monopolar")
    return p


def partition_to_assignment(r: LabeledReduction, p: Partition) -> Assignment:
    """Variables whose vertex is left are true."""
    if PartitionKind(p.kind) is not PartitionKind.MONOPOLAR or not validate(r.graph, p):
        raise PartitionError("not a monopolar partition of the reduction graph")
    f = r.formula
    a = tuple(r.x_vertex_of[k] in p.a_side for k in range(1, f.num_vars + 1))
    # the hub is right, so exactly one terminal per copy is right and its variable is left
    for i, clause in enumerate(f.clauses):
        right = [pos for pos in (1, 2, 3) if r.terminal_of[i, pos] in p.b_side]
        if len(right) != 1 or not a[clause[right[0] - 1] - 1] or r.hub_of[i] not in p.b_side:
            raise AssertionError(f"clause {i + 1} is not encoded by exactly one right terminal")
    if not check_1in3(f, a):
        raise AssertionError("extracted assignment is not 1-in-3")
    return a


# ---------------------------------------------------------------- mapping sidecar

def write_mapping(r: LabeledReduction) -> str:
    lines = [f"x {k} {v + 1}" for k, v in sorted(r.x_vertex_of.items())]
    for i in range(r.formula.num_clauses):
        span = r.copy_of[i]
        lines.append(f"copy {i + 1} {span.start + 1} {span.stop}")
        lines.extend(f"t {i + 1} {pos} {r.terminal_of[i, pos] + 1}" for pos in (1, 2, 3))
        lines.append(f"hub {i + 1} {r.hub_of[i] + 1}")
    return "\n".join(lines) + "\n"


@dataclass
class Mapping:
    """Parsed sidecar, 0-based vertices and 0-based clause indices."""

    x_vertex_of: dict[int, int] = field(default_factory=dict)
    copy_of: dict[int, range] = field(default_factory=dict)
    terminal_of: dict[tuple[int, int], int] = field(default_factory=dict)
    hub_of: dict[int, int] = field(default_factory=dict)


def read_mapping(text: str) -> Mapping:
    out = Mapping()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise ParseError(f"non-integer field in {raw.strip()!r}", lineno) from None
        if parts[0] == "x" and len(nums) == 2:
            out.x_vertex_of[nums[0]] = nums[1] - 1
        elif parts[0] == "copy" and len(nums) == 3:
            out.copy_of[nums[0] - 1] = range(nums[1] - 1, nums[2])
        elif parts[0] == "t" and len(nums) == 3:
            out.terminal_of[nums[0] - 1, nums[1]] = nums[2] - 1
        elif parts[0] == "hub" and len(nums) == 2:
            out.hub_of[nums[0] - 1] = nums[1] - 1
        else:
            raise ParseError(f"unrecognised line {raw.strip()!r}", lineno)
    return out
