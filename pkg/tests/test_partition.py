import itertools

import pytest
from hypothesis import given, settings

from polaritylab import partition as part
from polaritylab.errors import CapacityError, ParseError, PartitionError
from polaritylab.graph import (
    cluster_graph,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    double,
    empty_graph,
    is_clique,
    is_cluster,
    is_co_cluster,
    is_independent,
    induced,
    make_graph,
    path_graph,
)
from polaritylab.partition import Partition, PartitionKind

from .conftest import graphs

MONO, POLAR, UNI = PartitionKind.MONOPOLAR, PartitionKind.POLAR, PartitionKind.UNIPOLAR


def mk(kind, n, a):
    return Partition(kind, frozenset(a), frozenset(range(n)) - frozenset(a))


def definitional(g, p):
    """Validity straight from the definitions, using only graph-level predicates."""
    a = induced(g, p.a_side)[0]
    b = induced(g, p.b_side)[0]
    if not is_cluster(b):
        return False
    if p.kind is MONO:
        return is_independent(g, p.a_side)
    if p.kind is POLAR:
        return is_co_cluster(a)
    return is_clique(g, p.a_side)


class TestValidate:
    def test_examples(self, q):
        assert part.validate(complete_graph(3), mk(MONO, 3, []))
        assert part.validate(path_graph(3), mk(MONO, 3, [1]))
        assert part.validate(q, mk(MONO, 5, q.vertex_set(["v3", "v4"])))
        assert not part.validate(path_graph(3), mk(MONO, 3, []))

    def test_overlap_is_an_error(self):
        with pytest.raises(PartitionError):
            part.validate(path_graph(3), Partition(MONO, frozenset({0, 1}), frozenset({1, 2})))

    def test_incomplete_is_an_error(self):
        with pytest.raises(PartitionError):
            part.validate(path_graph(3), Partition(MONO, frozenset({0}), frozenset({1})))

    @pytest.mark.parametrize("kind", list(PartitionKind))
    @pytest.mark.parametrize("n", range(5))
    def test_matches_definitions_exhaustively(self, kind, n):
        for g in __import__("polaritylab.selftest", fromlist=["all_graphs"]).all_graphs(n):
            for mask in range(1 << n):
                p = Partition.from_mask(kind, n, mask)
                assert part.validate(g, p) == definitional(g, p)


class TestSolvers:
    def test_bipartite_is_monopolar(self):
        for g in [complete_multipartite(3, 4), cycle_graph(6), path_graph(7)]:
            assert part.validate(g, part.solve_monopolar(g))

    def test_q_unique_partition(self, q):
        p = part.solve_monopolar(q)
        assert p.a_side == q.vertex_set(["v3", "v4"])
        assert p.b_side == q.vertex_set(["v1", "v2", "u"])

    def test_c5(self):
        c5 = cycle_graph(5)
        assert part.validate(c5, mk(MONO, 5, {0, 2}))
        assert part.validate(c5, part.solve_monopolar(c5))
        assert part.solve_unipolar(c5) is None
        assert part.brute_unipolar(c5) is None

    def test_k4_is_polar_with_everything_left(self):
        p = part.solve_polar(complete_graph(4))
        assert part.validate(complete_graph(4), p)
        assert part.validate(complete_graph(4), mk(POLAR, 4, range(4)))

    def test_cluster_graphs_are_unipolar_with_empty_a(self):
        g = cluster_graph((3, 2, 1))
        assert part.validate(g, mk(UNI, 6, []))
        assert part.solve_unipolar(g) is not None

    def test_k4_plus_pendant(self):
        g = make_graph(5, list(itertools.combinations(range(4), 2)) + [(3, 4)])
        assert part.brute_unipolar(g) is not None
        assert part.validate(g, part.solve_unipolar(g))

    def test_empty_graph(self):
        for kind in PartitionKind:
            p = part.BRUTE[kind](empty_graph(0))
            assert p.a_side == frozenset() and p.b_side == frozenset()
            assert part.solve(empty_graph(0), kind) is not None

    def test_unipolar_bound(self):
        with pytest.raises(CapacityError):
            part.solve_unipolar(empty_graph(21))
        assert part.solve_unipolar(empty_graph(21), bound=21) is not None

    def test_solve_accepts_strings(self, q):
        assert part.solve(q, "monopolar") == part.solve_monopolar(q)

    def test_returns_lexicographically_least(self):
        # the engine explores left first from vertex 0, so it must agree with the lex-least brute answer
        for g in [cycle_graph(5), path_graph(4), complete_graph(3), complete_multipartite(2, 3)]:
            for kind in PartitionKind:
                assert part.solve(g, kind) == part.BRUTE[kind](g)


class TestEnumerate:
    def test_k2(self):
        found = part.enumerate_monopolar(complete_graph(2))
        assert {(p.a_side, p.b_side) for p in found} == {
            (frozenset(), frozenset({0, 1})),
            (frozenset({0}), frozenset({1})),
            (frozenset({1}), frozenset({0})),
        }

    def test_q_exactly_one(self, q):
        assert [p.a_side for p in part.enumerate_monopolar(q)] == [q.vertex_set(["v3", "v4"])]
        assert [p.a_side for p in part.brute_all(q, MONO)] == [q.vertex_set(["v3", "v4"])]

    def test_capacity(self):
        with pytest.raises(CapacityError):
            part.enumerate_monopolar(empty_graph(23))
        with pytest.raises(CapacityError):
            part.brute_monopolar(empty_graph(23))

    def test_capacity_env_override(self, monkeypatch):
        monkeypatch.setenv("POLARITYLAB_MAX_BRUTE", "4")
        with pytest.raises(CapacityError):
            part.brute_polar(empty_graph(5))
        assert part.brute_polar(empty_graph(4)) is not None

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=8))
    def test_matches_brute_force(self, g):
        assert part.enumerate_monopolar(g) == list(part.brute_all(g, MONO))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_solvers_sound_and_complete(g):
    for kind in PartitionKind:
        got = part.solve(g, kind)
        want = part.BRUTE[kind](g)
        assert (got is None) == (want is None)
        if got is not None:
            assert got.kind is kind and part.validate(g, got)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_polar_complement_invariance(g):
    assert (part.solve_polar(g) is None) == (part.solve_polar(complement(g)) is None)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_doubling_equivalence(g):
    d = double(g)
    mono = part.solve_monopolar(g) is not None
    assert (part.solve_polar(d) is not None) == mono == (part.solve_monopolar(d) is not None)


def test_polar_of_double_q(q):
    assert part.validate(double(q), part.solve_polar(double(q)))


class TestFormat:
    def test_layout(self, q):
        text = part.format_partition(part.solve_monopolar(q))
        assert text == "kind: monopolar\nA: 3 4\nB: 1 2 5\n"

    def test_empty_sides(self):
        text = part.format_partition(mk(POLAR, 2, []))
        assert part.parse_partition(text) == mk(POLAR, 2, [])

    @pytest.mark.parametrize("text", [
        "A: 1\nB: 2\n",
        "kind: bipolar\nA: 1\nB: 2\n",
        "kind: polar\nA: x\nB: 2\n",
        "kind: polar\nA: 0\nB: 1\n",
    ])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            part.parse_partition(text)

    @given(graphs(max_n=8))
    def test_round_trip(self, g):
        for kind in PartitionKind:
            p = part.solve(g, kind)
            if p is not None:
                assert part.parse_partition(part.format_partition(p)) == p
