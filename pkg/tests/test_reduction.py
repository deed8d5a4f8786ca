import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polaritylab import comparability as comp
from polaritylab import partition as part
from polaritylab import reduction as red
from polaritylab.errors import CapacityError, GadgetContractError, ParseError, PartitionError
from polaritylab.gadget import ClauseGadget
from polaritylab.graph import connected_components, double, has_k4, is_independent
from polaritylab.reduction import Formula

T, F = True, False
UNSAT4 = Formula(4, ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)))


@st.composite
def formulas(draw, max_vars=6, max_clauses=5):
    n = draw(st.integers(3, max_vars))
    triple = st.lists(st.integers(1, n), min_size=3, max_size=3, unique=True).map(tuple)
    return Formula(n, tuple(draw(st.lists(triple, max_size=max_clauses))))


def least_1in3(f):
    """Independent ground truth: enumerate bit patterns, True ordered first."""
    for k in range(1 << f.num_vars):
        a = tuple(not (k >> (f.num_vars - 1 - i)) & 1 for i in range(f.num_vars))
        if all(sum(a[x - 1] for x in c) == 1 for c in f.clauses):
            return a
    return None


class TestParse:
    def test_single_clause(self):
        assert red.parse_formula("p cnf 3 1\n1 2 3 0\n") == Formula(3, ((1, 2, 3),))

    def test_unsat_family(self):
        f = red.parse_formula("p cnf 4 4\n1 2 3 0\n1 2 4 0\n1 3 4 0\n2 3 4 0\n")
        assert f == UNSAT4

    def test_clause_across_lines_and_comments(self):
        f = red.parse_formula("c hello\np cnf 4 2\n1 2\n3 0 2 3 4 0\n")
        assert f.clauses == ((1, 2, 3), (2, 3, 4))

    def test_empty_formula(self):
        assert red.parse_formula("p cnf 2 0\n") == Formula(2, ())

    @pytest.mark.parametrize("text, message, line", [
        ("p cnf 3 1\n1 -2 3 0\n", "negated literal not allowed", 2),
        ("p cnf 3 1\n1 2 0\n", "expected 3", 2),
        ("p cnf 4 1\n1 2 3 4 0\n", "expected 3", 2),
        ("p cnf 3 1\n1 1 2 0\n", "repeated variable in clause", 2),
        ("p cnf 3 1\n1 2 4 0\n", "exceeds", 2),
        ("p cnf 3 2\n1 2 3 0\n", "declares 2", None),
        ("1 2 3 0\n", "before", 1),
        ("p cnf x 1\n", "non-integer", 1),
        ("p cnf 3 1\n1 2 3\n", "not terminated", 2),
    ])
    def test_errors(self, text, message, line):
        with pytest.raises(ParseError, match=message) as info:
            red.parse_formula(text)
        assert info.value.line == line

    @given(formulas())
    def test_round_trip(self, f):
        assert red.parse_formula(red.write_formula(f)) == f

    def test_formula_validates(self):
        with pytest.raises(ValueError):
            Formula(3, ((1, 2, 2),))
        with pytest.raises(ValueError):
            Formula(3, ((1, 2, 4),))


class TestOneInThree:
    def test_check(self):
        f = Formula(3, ((1, 2, 3),))
        assert red.check_1in3(f, (T, F, F))
        assert not red.check_1in3(f, (T, T, F))
        assert not red.check_1in3(f, (F, F, F))
        with pytest.raises(ValueError):
            red.check_1in3(f, (T, F))

    def test_brute_examples(self):
        assert red.brute_force_1in3(Formula(3, ((1, 2, 3),))) == (T, F, F)
        assert red.brute_force_1in3(UNSAT4) is None
        assert red.brute_force_1in3(Formula(4, ((1, 2, 3), (1, 2, 4)))) == (T, F, F, F)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            red.brute_force_1in3(Formula(25, ()))

    @given(formulas())
    def test_brute_matches_independent_enumeration(self, f):
        assert red.brute_force_1in3(f) == least_1in3(f)

    def test_all_formulas_counts(self):
        # C(4,3) = 4 triples: 1 + 4 + 16 formulas with up to 2 clauses
        assert len(list(red.all_formulas(4, 2))) == 21
        assert len(list(red.all_formulas(2, 3))) == 1


class TestBuild:
    def test_single_clause_sizes(self, gadget):
        r = red.build_reduction(Formula(3, ((1, 2, 3),)))
        assert r.graph.n == 3 + gadget.graph.n == 21
        assert r.graph.m == gadget.graph.m + 3 == 32
        assert r.graph.labels[:4] == ("x1", "x2", "x3", "v1_1")

    def test_empty_formula(self):
        r = red.build_reduction(Formula(2, ()))
        assert (r.graph.n, r.graph.m) == (2, 0)
        assert part.solve_monopolar(r.graph) is not None

    def test_uncertified_gadget(self, gadget):
        bare = ClauseGadget(gadget.graph, gadget.terminals, gadget.hub, gadget.orientation)
        with pytest.raises(GadgetContractError):
            red.build_reduction(Formula(3, ((1, 2, 3),)), bare)

    def test_cross_edges(self):
        f = Formula(4, ((1, 2, 3), (4, 3, 1)))
        r = red.build_reduction(f)
        assert len(r.cross_edges) == 6
        assert (r.x_vertex_of[4], r.terminal_of[1, 1]) in r.cross_edges
        for (i, pos), t in r.terminal_of.items():
            assert t in r.copy_of[i]
            assert r.graph.has_edge(r.x_vertex_of[f.clauses[i][pos - 1]], t)
            assert r.graph.has_edge(r.hub_of[i], t)

    @settings(max_examples=60, deadline=None)
    @given(formulas())
    def test_structure(self, f):
        r = red.build_reduction(f)
        xs = list(r.x_vertex_of.values())
        assert is_independent(r.graph, xs)
        for a, b in itertools.combinations(xs, 2):
            assert not set(r.graph.neighbors(a)) & set(r.graph.neighbors(b))
        assert sum(1 for u, v in r.graph.edges if u in xs or v in xs) == 3 * f.num_clauses
        assert not has_k4(r.graph)
        o = red.reduction_orientation(r)
        assert comp.is_transitive(o)
        assert comp.is_3col_comparability(r.graph)
        if f.num_clauses:
            assert comp.num_colors(comp.chain_coloring(o)) == 3


class TestTranslations:
    def test_assignment_to_partition(self):
        f = Formula(3, ((1, 2, 3),))
        r = red.build_reduction(f)
        p = red.assignment_to_partition(r, (T, F, F))
        assert part.validate(r.graph, p)
        assert r.x_vertex_of[1] in p.a_side
        assert r.terminal_of[0, 1] in p.b_side
        assert r.terminal_of[0, 2] in p.a_side and r.terminal_of[0, 3] in p.a_side

    def test_shared_variable_uses_matching_terminal(self):
        f = Formula(4, ((1, 2, 3), (4, 1, 2)))
        r = red.build_reduction(f)
        p = red.assignment_to_partition(r, (T, F, F, F))
        assert part.validate(r.graph, p)
        assert r.terminal_of[0, 1] in p.b_side and r.terminal_of[1, 2] in p.b_side

    def test_rejects_bad_assignment(self):
        r = red.build_reduction(Formula(3, ((1, 2, 3),)))
        with pytest.raises(ValueError):
            red.assignment_to_partition(r, (T, T, F))

    def test_rejects_invalid_partition(self):
        r = red.build_reduction(Formula(3, ((1, 2, 3),)))
        bad = part.Partition(part.PartitionKind.MONOPOLAR, frozenset(range(r.graph.n)), frozenset())
        with pytest.raises(PartitionError):
            red.partition_to_assignment(r, bad)

    @settings(max_examples=80, deadline=None)
    @given(formulas())
    def test_equivalence_and_round_trip(self, f):
        r = red.build_reduction(f)
        truth = red.brute_force_1in3(f)
        p = part.solve_monopolar(r.graph)
        assert (truth is None) == (p is None)
        if p is not None:
            assert red.check_1in3(f, red.partition_to_assignment(r, p))
            assert red.partition_to_assignment(r, red.assignment_to_partition(r, truth)) == truth

    def test_unsat_family_is_not_monopolar(self):
        assert part.solve_monopolar(red.build_reduction(UNSAT4).graph) is None

    def test_polarity_lift(self):
        rng = random.Random(7)
        cases = [UNSAT4, Formula(4, ((1, 2, 3), (1, 2, 4)))]
        cases += [red.random_formula(rng, rng.randint(3, 5), rng.randint(1, 4)) for _ in range(20)]
        for f in cases:
            g = red.build_reduction(f).graph
            assert (part.solve_polar(double(g)) is not None) == (part.solve_monopolar(g) is not None)


class TestMapping:
    def test_round_trip(self):
        f = Formula(4, ((1, 2, 3), (2, 3, 4)))
        r = red.build_reduction(f)
        m = red.read_mapping(red.write_mapping(r))
        assert m.x_vertex_of == r.x_vertex_of
        assert m.copy_of == r.copy_of
        assert m.terminal_of == r.terminal_of
        assert m.hub_of == r.hub_of

    def test_layout(self):
        text = red.write_mapping(red.build_reduction(Formula(3, ((1, 2, 3),))))
        assert text.splitlines() == [
            "x 1 1", "x 2 2", "x 3 3", "copy 1 4 21", "t 1 1 14", "t 1 2 15", "t 1 3 16", "hub 1 8",
        ]

    def test_rejects(self):
        with pytest.raises(ParseError):
            red.read_mapping("x 1\n")

    def test_copies_are_components_after_removing_x(self):
        f = Formula(3, ((1, 2, 3), (1, 2, 3)))
        r = red.build_reduction(f)
        comps = connected_components(r.graph)
        assert len(comps) == 1
        assert r.copy_of[0].stop == r.copy_of[1].start
