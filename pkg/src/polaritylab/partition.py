"""Monopolar, polar and unipolar partitions: exact solvers and brute-force oracles.

A partition is a pair (A, B). In every kind, ``G[B]`` must be a union of
disjoint cliques; the kinds differ in what ``A`` must be:

* monopolar: an independent set,
* polar: a co-union of disjoint cliques,
* unipolar: a clique.

The solvers share one backtracking engine. Vertices are decided in index
order, ``A`` first. After every decision each undecided vertex is tested
against both sides, and a vertex that fits only one side is placed there.
Both side constraints are hereditary, so a side that is valid after every
single placement is valid at the end.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import CapacityError, ParseError, PartitionError
from .graph import (
    Graph,
    iter_bits,
    mask_is_clique,
    mask_is_cluster,
    mask_is_co_cluster,
    mask_is_independent,
    to_mask,
)

DEFAULT_MAX_BRUTE = 22
DEFAULT_UNIPOLAR_BOUND = 20


def max_brute() -> int:
    """Vertex cap for exhaustive 2^n scans; ``POLARITYLAB_MAX_BRUTE`` overrides it."""
    value = os.environ.get("POLARITYLAB_MAX_BRUTE")
    return int(value) if value else DEFAULT_MAX_BRUTE


class PartitionKind(str, enum.Enum):
    MONOPOLAR = "monopolar"
    POLAR = "polar"
    UNIPOLAR = "unipolar"


@dataclass(frozen=True)
class Partition:
    kind: PartitionKind
    a_side: frozenset[int]
    b_side: frozenset[int]

    @classmethod
    def from_mask(cls, kind: PartitionKind, n: int, a_mask: int) -> Partition:
        a = frozenset(iter_bits(a_mask))
        return cls(PartitionKind(kind), a, frozenset(range(n)) - a)

    @property
    def a_mask(self) -> int:
        return to_mask(self.a_side)

    def side_of(self, v: int) -> str:
        """``"left"`` for A, ``"right"`` for B."""
        return "left" if v in self.a_side else "right"


def lex_key(a_side, n: int) -> tuple[int, ...]:
    """Sort key: vertex 0 first, left before right (the solver's branching order)."""
    return tuple(int(v not in a_side) for v in range(n))


# ---------------------------------------------------------------- validation

def _check_blocks(g: Graph, p: Partition):
    if p.a_side & p.b_side:
        raise PartitionError(f"blocks overlap on {sorted(p.a_side & p.b_side)}")
    members = p.a_side | p.b_side
    if members != frozenset(range(g.n)):
        missing = sorted(set(range(g.n)) - members)
        extra = sorted(members - set(range(g.n)))
        raise PartitionError(f"blocks do not cover the vertex set (missing {missing}, foreign {extra})")


def _valid_masks(kind: PartitionKind, adj, a_mask: int, b_mask: int) -> bool:
    if not mask_is_cluster(adj, b_mask):
        return False
    if kind is PartitionKind.MONOPOLAR:
        return mask_is_independent(adj, a_mask)
    if kind is PartitionKind.UNIPOLAR:
        return mask_is_clique(adj, a_mask)
    return mask_is_co_cluster(adj, a_mask)


def validate(g: Graph, p: Partition) -> bool:
    _check_blocks(g, p)
    a = p.a_mask
    return _valid_masks(PartitionKind(p.kind), g.adj, a, g.full_mask & ~a)


# ---------------------------------------------------------------- backtracking engine

def _fits_cluster(adj, members: int, v: int) -> bool:
    # members induce a cluster; v may join iff its neighbours there form exactly one whole block
    nbrs = adj[v] & members
    if not nbrs:
        return True
    u = (nbrs & -nbrs).bit_length() - 1
    return (adj[u] & members) | (1 << u) == nbrs


class _Engine:
    def __init__(self, g: Graph, kind: PartitionKind):
        self.n = g.n
        self.adj = g.adj
        self.kind = kind
        full = g.full_mask
        # complement adjacency, for the co-cluster side of polar partitions
        self.cadj = tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj))

    def fits_a(self, a_mask: int, v: int) -> bool:
        if self.kind is PartitionKind.MONOPOLAR:
            return not self.adj[v] & a_mask
        if self.kind is PartitionKind.UNIPOLAR:
            return a_mask & ~self.adj[v] == 0
        return _fits_cluster(self.cadj, a_mask, v)

    def fits_b(self, b_mask: int, v: int) -> bool:
        return _fits_cluster(self.adj, b_mask, v)

    def propagate(self, a_mask: int, b_mask: int):
        """Force vertices that fit only one side; None on a dead end."""
        full = (1 << self.n) - 1
        changed = True
        while changed:
            changed = False
            for v in iter_bits(full & ~(a_mask | b_mask)):
                fa = self.fits_a(a_mask, v)
                fb = self.fits_b(b_mask, v)
                if fa and fb:
                    continue
                if not (fa or fb):
                    return None
                if fa:
                    a_mask |= 1 << v
                else:
                    b_mask |= 1 << v
                changed = True
        return a_mask, b_mask

    def search(self) -> Iterator[int]:
        """Yield the A-mask of every valid partition, depth first."""
        full = (1 << self.n) - 1
        start = self.propagate(0, 0)
        if start is None:
            return
        stack = [start]
        while stack:
            a_mask, b_mask = stack.pop()
            undecided = full & ~(a_mask | b_mask)
            if not undecided:
                yield a_mask
                continue
            bit = undecided & -undecided
            v = bit.bit_length() - 1
            branches = []
            if self.fits_a(a_mask, v):
                branches.append(self.propagate(a_mask | bit, b_mask))
            if self.fits_b(b_mask, v):
                branches.append(self.propagate(a_mask, b_mask | bit))
            # push B first so the A branch is explored first
            for state in reversed(branches):
                if state is not None:
                    stack.append(state)


def iter_partitions(g: Graph, kind: PartitionKind | str) -> Iterator[Partition]:
    kind = PartitionKind(kind)
    for a_mask in _Engine(g, kind).search():
        yield Partition.from_mask(kind, g.n, a_mask)


def _solve(g: Graph, kind: PartitionKind) -> Partition | None:
    return next(iter_partitions(g, kind), None)


def solve_monopolar(g: Graph) -> Partition | None:
    return _solve(g, PartitionKind.MONOPOLAR)


def solve_polar(g: Graph) -> Partition | None:
    return _solve(g, PartitionKind.POLAR)


def solve_unipolar(g: Graph, bound: int = DEFAULT_UNIPOLAR_BOUND) -> Partition | None:
    if g.n > bound:
        raise CapacityError(f"unipolar search is limited to {bound} vertices, got {g.n}")
    return _solve(g, PartitionKind.UNIPOLAR)


def solve(g: Graph, kind: PartitionKind | str) -> Partition | None:
    kind = PartitionKind(kind)
    if kind is PartitionKind.UNIPOLAR:
        return solve_unipolar(g)
    return _solve(g, kind)


def enumerate_monopolar(g: Graph) -> list[Partition]:
    """All monopolar partitions, in the order of ``lex_key``."""
    _check_capacity(g)
    found = list(iter_partitions(g, PartitionKind.MONOPOLAR))
    return sorted(found, key=lambda p: lex_key(p.a_side, g.n))


# ---------------------------------------------------------------- brute-force oracles

def _check_capacity(g: Graph):
    cap = max_brute()
    if g.n > cap:
        raise CapacityError(f"exhaustive scan is limited to {cap} vertices, got {g.n}")


def _lex_masks(n: int) -> Iterator[int]:
    # count with vertex 0 as the most significant digit; a 0 digit means left
    full = (1 << n) - 1
    for k in range(1 << n):
        yield full ^ int(format(k, f"0{n}b")[::-1], 2) if n else 0


def brute_all(g: Graph, kind: PartitionKind | str) -> Iterator[Partition]:
    """Every valid partition of ``kind``, by scanning all 2^n A-sets in lex order."""
    kind = PartitionKind(kind)
    _check_capacity(g)
    full = g.full_mask
    for a_mask in _lex_masks(g.n):
        if _valid_masks(kind, g.adj, a_mask, full & ~a_mask):
            yield Partition.from_mask(kind, g.n, a_mask)


def brute_monopolar(g: Graph) -> Partition | None:
    return next(brute_all(g, PartitionKind.MONOPOLAR), None)


def brute_polar(g: Graph) -> Partition | None:
    return next(brute_all(g, PartitionKind.POLAR), None)


def brute_unipolar(g: Graph) -> Partition | None:
    return next(brute_all(g, PartitionKind.UNIPOLAR), None)


BRUTE = {
    PartitionKind.MONOPOLAR: brute_monopolar,
    PartitionKind.POLAR: brute_polar,
    PartitionKind.UNIPOLAR: brute_unipolar,
}
SOLVERS = {
    PartitionKind.MONOPOLAR: solve_monopolar,
    PartitionKind.POLAR: solve_polar,
    PartitionKind.UNIPOLAR: solve_unipolar,
}


# ---------------------------------------------------------------- text format

def format_partition(p: Partition) -> str:
    a = " ".join(str(v + 1) for v in sorted(p.a_side))
    b = " ".join(str(v + 1) for v in sorted(p.b_side))
    return f"kind: {PartitionKind(p.kind).value}\nA: {a}".rstrip() + f"\nB: {b}".rstrip() + "\n"


def parse_partition(text: str) -> Partition:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        key, sep, rest = raw.partition(":")
        key = key.strip()
        if not sep or key not in ("kind", "A", "B") or key in fields:
            raise ParseError(f"unexpected line {raw.strip()!r}", lineno)
        fields[key] = (rest.strip(), lineno)
    if set(fields) != {"kind", "A", "B"}:
        raise ParseError("partition needs 'kind:', 'A:' and 'B:' lines")
    try:
        kind = PartitionKind(fields["kind"][0])
    except ValueError:
        raise ParseError(f"unknown kind {fields['kind'][0]!r}", fields["kind"][1]) from None
    sides = []
    for key in ("A", "B"):
        rest, lineno = fields[key]
        try:
            members = [int(tok) - 1 for tok in rest.split()]
        except ValueError:
            raise ParseError(f"non-integer vertex in {key} line", lineno) from None
        if any(v < 0 for v in members):
            raise ParseError(f"vertices are 1-based in {key} line", lineno)
        sides.append(frozenset(members))
    return Partition(kind, sides[0], sides[1])
