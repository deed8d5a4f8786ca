import pytest

from polaritylab import gadget as gl
from polaritylab.errors import CapacityError, GadgetSearchError
from polaritylab.graph import induced
from polaritylab.selftest import check_gadget_exhaustively
from polaritylab.synthesis import FRAME_SIZE, SynthesisConfig, synthesize_clause_gadget


@pytest.fixture(scope="module")
def seed0():
    history = []
    return synthesize_clause_gadget(18, 0, history=history), history


def test_reproduces_the_shipped_gadget(seed0, gadget):
    found, _ = seed0
    assert found.graph.edges == gadget.graph.edges
    assert found.terminals == gadget.terminals and found.hub == gadget.hub


def test_deterministic(seed0):
    again = synthesize_clause_gadget(18, 0)
    assert again.graph.edges == seed0[0].graph.edges
    assert again.orientation == seed0[0].orientation


def test_result_passes_full_scan(seed0):
    assert check_gadget_exhaustively(seed0[0]) is None


def test_fewer_connectors_are_infeasible(seed0):
    _, history = seed0
    assert [h.connectors for h in history] == [0, 1, 2, 3, 4, 5]
    assert [h.outcome for h in history] == ["infeasible"] * 5 + ["found"]


def test_frame_is_kept(seed0, q):
    g = seed0[0].graph
    assert induced(g, range(5))[0] == q
    assert induced(g, range(5, 10))[0] == q
    assert g.n - FRAME_SIZE == 5


@pytest.mark.parametrize("seed", [1, 2])
def test_other_seeds_are_certified(seed):
    found = synthesize_clause_gadget(18, seed)
    assert found.certificate is not None
    assert check_gadget_exhaustively(found) is None
    assert synthesize_clause_gadget(18, seed).graph.edges == found.graph.edges


def test_bounds_too_tight():
    with pytest.raises(GadgetSearchError, match="no gadget found within bounds"):
        synthesize_clause_gadget(17)


def test_capacity():
    with pytest.raises(CapacityError):
        synthesize_clause_gadget(23)


def test_round_limit():
    with pytest.raises(GadgetSearchError):
        synthesize_clause_gadget(config=SynthesisConfig(max_n=18, max_rounds=1))


def test_bundle_of_synthesized(seed0):
    text = gl.write_gadget_bundle(seed0[0])
    assert gl.read_gadget_bundle(text) == seed0[0]
