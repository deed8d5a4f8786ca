"""Immutable simple graphs, structural predicates and DIMACS edge I/O.

Vertices are ``0..n-1``. Adjacency is stored as one integer bitmask per
vertex, which keeps the exhaustive searches elsewhere in the package cheap.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import GraphError, ParseError

VertexSet = frozenset  # frozenset[int]; members index vertices of one graph


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph. Equality ignores labels."""

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None
    adj: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, label: str) -> int:
        """Vertex carrying ``label``."""
        if self.labels is None or label not in self.labels:
            raise KeyError(label)
        return self.labels.index(label)

    def vertex_set(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(name) for name in labels)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def make_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    normalized = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        normalized.add((u, v) if u < v else (v, u))
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")
    return Graph(n, frozenset(normalized), labels)


def from_adjacency(adj: Sequence[int], labels: Sequence[str] | None = None) -> Graph:
    n = len(adj)
    edges = [(u, v) for u in range(n) for v in iter_bits(adj[u] >> (u + 1) << (u + 1))]
    return make_graph(n, edges, labels)


def _check_set(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    return mask


# ---------------------------------------------------------------- constructions

def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if not g.has_edge(u, v)]
    return Graph(g.n, frozenset(edges), g.labels)


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``s`` plus the map from new indices to old ones."""
    mask = _check_set(g, s)
    order = tuple(iter_bits(mask))
    new = {old: i for i, old in enumerate(order)}
    edges = [(new[u], new[v]) for u, v in g.edges if u in new and v in new]
    labels = tuple(g.labels[v] for v in order) if g.labels is not None else None
    return Graph(len(order), frozenset(edges), labels), order


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = set(g.edges) | {(u + shift, v + shift) for u, v in h.edges}
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(h.label(v) for v in range(h.n))
    return Graph(g.n + h.n, frozenset(edges), labels)


def double(g: Graph) -> Graph:
    """Two disjoint copies of ``g`` with no edges between them."""
    return disjoint_union(g, g)


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(*sizes: int) -> Graph:
    part = [i for i, size in enumerate(sizes) for _ in range(size)]
    n = len(part)
    return make_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]])


def cluster_graph(sizes: Sequence[int]) -> Graph:
    """Disjoint union of cliques of the given sizes."""
    edges = []
    start = 0
    for size in sizes:
        edges.extend(itertools.combinations(range(start, start + size), 2))
        start += size
    return make_graph(start, edges)


# ---------------------------------------------------------------- predicates

def components_of_mask(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    remaining = mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in components_of_mask(g.adj, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return len(components_of_mask(g.adj, g.full_mask)) <= 1


def mask_is_clique(adj: Sequence[int], mask: int) -> bool:
    return all((adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))


def mask_is_independent(adj: Sequence[int], mask: int) -> bool:
    return all(not adj[v] & mask for v in iter_bits(mask))


def mask_is_cluster(adj: Sequence[int], mask: int) -> bool:
    """True iff ``G[mask]`` is a union of disjoint cliques.

    Every vertex of a clique component has the same closed neighbourhood
    inside ``mask``; that is checked one component at a time.
    """
    remaining = mask
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        block = (adj[v] & mask) | low
        for u in iter_bits(block ^ low):
            if (adj[u] & mask) | (1 << u) != block:
                return False
        remaining &= ~block
    return True


def mask_is_co_cluster(adj: Sequence[int], mask: int) -> bool:
    co = [(~a) & mask & ~(1 << v) if mask >> v & 1 else 0 for v, a in enumerate(adj)]
    return mask_is_cluster(co, mask)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    return mask_is_clique(g.adj, _check_set(g, s))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    return mask_is_independent(g.adj, _check_set(g, s))


def is_cluster(g: Graph) -> bool:
    return all(mask_is_clique(g.adj, c) for c in components_of_mask(g.adj, g.full_mask))


def has_induced_p3(g: Graph) -> bool:
    # middle vertex b with two non-adjacent neighbours
    for b in range(g.n):
        nbrs = g.neighbors(b)
        for a, c in itertools.combinations(nbrs, 2):
            if not g.has_edge(a, c):
                return True
    return False


def is_co_cluster(g: Graph) -> bool:
    return is_cluster(complement(g))


def co_cluster_connectivity_check(g: Graph) -> bool:
    """A co-cluster is connected or has no edges; returns whether that holds."""
    if not is_co_cluster(g):
        raise GraphError("graph is not the complement of a cluster graph")
    return g.m == 0 or is_connected(g)


def has_k4(g: Graph) -> bool:
    adj = g.adj
    for a, b in g.edges:
        common = adj[a] & adj[b]
        for c in iter_bits(common):
            if adj[c] & common:
                return True
    return False


def clique_number(g: Graph) -> int:
    """Size of a largest clique, by branch and bound. Intended for small graphs."""
    best = 0

    def grow(size: int, candidates: int):
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + candidates.bit_count() <= best:
            return
        for v in iter_bits(candidates):
            grow(size + 1, candidates & g.adj[v])
            candidates &= ~(1 << v)
            if size + candidates.bit_count() <= best:
                return

    grow(0, g.full_mask)
    return best


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism by explicit search over bijections, pruned by degree."""
    if g.n != h.n or g.m != h.m:
        return False
    if g.n > 10:
        raise GraphError("isomorphism search is limited to 10 vertices")
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    image = [-1] * g.n
    used = [False] * h.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for w in range(h.n):
            if used[w] or g.degree(v) != h.degree(w):
                continue
            if all(g.has_edge(u, v) == h.has_edge(image[u], w) for u in range(v)):
                image[v], used[w] = w, True
                if extend(v + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------- DIMACS edge format

def write_dimacs_graph(g: Graph, comment: str = "polaritylab graph") -> str:
    lines = [f"c {comment}"]
    if g.labels is not None:
        lines.extend(f"c label {v + 1} {name}" for v, name in enumerate(g.labels))
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_dimacs_graph(text: str) -> Graph:
    """Parse DIMACS edge format (1-based endpoints).

    ``c label <i> <name>`` comment lines, as emitted by the writer, restore
    vertex labels; other comments are ignored.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            if len(parts) == 4 and parts[1] == "label" and parts[2].isdigit():
                labels[int(parts[2]) - 1] = parts[3]
            continue
        if tag == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"malformed header {raw.strip()!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer header field in {raw.strip()!r}", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative count in header", lineno)
            continue
        if tag == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {raw.strip()!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {raw.strip()!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n} in {raw.strip()!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop {u}", lineno)
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(f"unrecognised line {raw.strip()!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    label_list = None
    if labels:
        if set(labels) != set(range(n)):
            raise ParseError("label comments do not cover every vertex")
        label_list = [labels[v] for v in range(n)]
    return make_graph(n, edges, label_list)
