"""Transitive orientations, comparability recognition and chain colouring."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import CapacityError, OrientationError, ParseError
from .graph import Graph, has_k4, iter_bits, make_graph

MAX_ORACLE_EDGES = 18


@dataclass(frozen=True, eq=False)
class Orientation:
    """A direction for every edge of ``graph``; arc ``(u, v)`` means u -> v."""

    graph: Graph
    arcs: frozenset[tuple[int, int]]
    out: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        undirected = set()
        out = [0] * self.graph.n
        for u, v in self.arcs:
            if not self.graph.has_edge(u, v):
                raise OrientationError(f"arc {u}->{v} is not an edge")
            key = (min(u, v), max(u, v))
            if key in undirected:
                raise OrientationError(f"edge {key} oriented twice")
            undirected.add(key)
            out[u] |= 1 << v
        if len(undirected) != self.graph.m:
            raise OrientationError(f"{self.graph.m - len(undirected)} edges left unoriented")
        object.__setattr__(self, "out", tuple(out))

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.graph, self.arcs))

    def reversed(self) -> Orientation:
        return Orientation(self.graph, frozenset((v, u) for u, v in self.arcs))


def orient(g: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
    return Orientation(g, frozenset(arcs))


def total_order(g: Graph) -> Orientation:
    """Every edge from its lower to its higher endpoint."""
    return Orientation(g, g.edges)


def _transitive_out(out) -> bool:
    return all(out[b] & ~out[a] == 0 for a in range(len(out)) for b in iter_bits(out[a]))


def is_transitive(o: Orientation) -> bool:
    return _transitive_out(o.out)


def sinks(o: Orientation) -> frozenset[int]:
    return frozenset(v for v in range(o.graph.n) if not o.out[v])


def find_transitive_orientation(g: Graph) -> Orientation | None:
    """Transitive orientation by G-decomposition, or None.

    Repeatedly take the lowest remaining arc, close it under the forcing
    relation of the *remaining* edge set (a->b forces a->c when c is not
    adjacent to b, and c->b when c is not adjacent to a), reject if the
    closure contains an arc and its reverse, and delete the class. The
    union of the classes is checked for transitivity before returning.
    """
    n = g.n
    remaining = list(g.adj)
    arcs: list[tuple[int, int]] = []
    left = g.m
    while left:
        a0 = next(v for v in range(n) if remaining[v])
        b0 = (remaining[a0] & -remaining[a0]).bit_length() - 1
        cls_out = [0] * n
        cls_out[a0] = 1 << b0
        stack = [(a0, b0)]
        while stack:
            a, b = stack.pop()
            # same tail a: a->c for every c adjacent to a but not to b
            for c in iter_bits(remaining[a] & ~remaining[b] & ~(1 << b) & ~cls_out[a]):
                cls_out[a] |= 1 << c
                stack.append((a, c))
            # same head b: c->b for every c adjacent to b but not to a
            for c in iter_bits(remaining[b] & ~remaining[a] & ~(1 << a)):
                if not cls_out[c] >> b & 1:
                    cls_out[c] |= 1 << b
                    stack.append((c, b))
        for a in range(n):
            for b in iter_bits(cls_out[a]):
                if cls_out[b] >> a & 1:
                    return None
        for a in range(n):
            for b in iter_bits(cls_out[a]):
                arcs.append((a, b))
                remaining[a] &= ~(1 << b)
                remaining[b] &= ~(1 << a)
                left -= 1
    o = Orientation(g, frozenset(arcs))
    if not is_transitive(o):
        # unreachable if the decomposition is right; kept as the final guard
        return None
    return o


def is_comparability(g: Graph) -> bool:
    return find_transitive_orientation(g) is not None


def is_3col_comparability(g: Graph) -> bool:
    return not has_k4(g) and is_comparability(g)


def brute_is_comparability(g: Graph, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """Exhaustive search over edge orientations (test oracle).

    Edges are oriented one at a time in sorted order; a partial orientation
    is abandoned as soon as two placed arcs a->b, b->c meet an a, c pair
    that is a non-edge or already oriented c->a.
    """
    if g.m > max_edges:
        raise CapacityError(f"orientation oracle is limited to {max_edges} edges, got {g.m}")
    edges = g.sorted_edges()
    n = g.n
    out = [0] * n
    inn = [0] * n

    def consistent(a: int, b: int) -> bool:
        # new arc a->b against every placed x->a and b->y
        for x in iter_bits(inn[a]):
            if not g.has_edge(x, b) or out[b] >> x & 1:
                return False
        for y in iter_bits(out[b]):
            if not g.has_edge(a, y) or out[y] >> a & 1:
                return False
        return True

    def place(i: int) -> bool:
        if i == len(edges):
            return _transitive_out(out)
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if consistent(a, b):
                out[a] |= 1 << b
                inn[b] |= 1 << a
                if place(i + 1):
                    return True
                out[a] &= ~(1 << b)
                inn[b] &= ~(1 << a)
        return False

    return place(0)


def chain_coloring(o: Orientation) -> list[int]:
    """Colour each vertex by the number of vertices before it on a longest chain.

    For a transitive orientation, vertices of equal colour are pairwise
    non-adjacent and the colour count equals the clique number.
    """
    if not is_transitive(o):
        raise OrientationError("chain colouring needs a transitive orientation")
    n = o.graph.n
    into = [0] * n
    for u, v in o.arcs:
        into[v] |= 1 << u
    color = [-1] * n

    def depth(v: int) -> int:
        if color[v] < 0:
            color[v] = 1 + max((depth(u) for u in iter_bits(into[v])), default=-1)
        return color[v]

    for v in range(n):
        depth(v)
    return color


def num_colors(colors: list[int]) -> int:
    return len(set(colors))


def is_proper_coloring(g: Graph, colors: list[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges)


# ---------------------------------------------------------------- text format

def write_orientation(o: Orientation) -> str:
    lines = [f"p orient {o.graph.n} {len(o.arcs)}"]
    lines.extend(f"a {u + 1} {v + 1}" for u, v in sorted(o.arcs))
    return "\n".join(lines) + "\n"


def read_orientation(text: str, g: Graph | None = None, first_line: int = 1) -> Orientation:
    """Parse ``p orient n m`` plus ``a u v`` lines.

    Without ``g`` the underlying graph is the set of arcs read.
    """
    n = m = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=first_line):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] != "orient":
                raise ParseError(f"malformed header {raw.strip()!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
        elif parts[0] == "a" and n is not None and len(parts) == 3:
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"non-integer arc endpoint in {raw.strip()!r}", lineno) from None
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ParseError(f"bad arc {raw.strip()!r}", lineno)
            arcs.append((u, v))
        else:
            raise ParseError(f"unrecognised line {raw.strip()!r}", lineno)
    if n is None:
        raise ParseError("missing 'p orient n m' line")
    if len(arcs) != m:
        raise ParseError(f"header declares {m} arcs, found {len(arcs)}")
    if g is None:
        g = make_graph(n, arcs)
    elif g.n != n:
        raise ParseError(f"orientation is for {n} vertices, graph has {g.n}")
    try:
        return Orientation(g, frozenset(arcs))
    except OrientationError as exc:
        raise ParseError(str(exc)) from None
