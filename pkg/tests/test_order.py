import pytest

from ptnfa.exceptions import AutomatonInputError, ResourceExceededError
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton, complete
from ptnfa.services.families import gen_ai, gen_cycle_nfa, gen_fig1
from ptnfa.services.order import (
    depth,
    is_partially_ordered,
    reachable_states,
    state_graph,
    sub_automaton,
    trim,
)


def test_state_graph_keeps_self_loops():
    a = gen_fig1()
    graph = state_graph(a)
    assert graph.has_edge(0, 0)
    assert graph.has_edge(1, 2)
    assert not graph.has_edge(2, 1)
    only_b = state_graph(a, ["b"])
    assert not only_b.has_edge(0, 1)
    with pytest.raises(AutomatonInputError):
        state_graph(a, ["z"])


def test_partial_order():
    assert is_partially_ordered(gen_fig1())
    verdict = is_partially_ordered(gen_cycle_nfa(2))
    assert not verdict
    assert verdict.witness.kind == WitnessKind.STATE_SET
    assert verdict.witness.value == {"0", "1", "2", "1'", "2'"}


@pytest.mark.parametrize("i", [1, 2, 3])
def test_depth_of_completed_ai(i):
    assert depth(complete(gen_ai(i))) == i + 1


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_depth_of_cycle_nfa(i):
    assert depth(gen_cycle_nfa(i)) == i


def test_depth_of_fig1():
    assert depth(gen_fig1()) == 2


def test_depth_budget_on_cyclic_automata():
    with pytest.raises(ResourceExceededError) as info:
        depth(gen_cycle_nfa(4), budget=3)
    assert info.value.observed == 9


def test_depth_ignores_unreachable_states():
    a = Automaton(
        states=["0", "1", "2", "3"],
        alphabet=["a"],
        initial=["0"],
        accepting=[],
        transitions=[("0", "a", "1"), ("2", "a", "3"), ("3", "a", "2")],
    )
    assert depth(a) == 1


def test_reachability_and_trim():
    a = Automaton(
        states=["0", "1", "2"],
        alphabet=["a"],
        initial=["0"],
        accepting=["1", "2"],
        transitions=[("0", "a", "1"), ("2", "a", "0")],
    )
    assert reachable_states(a) == {"0", "1"}
    assert reachable_states(a, ["2"]) == {"0", "1", "2"}
    trimmed = trim(a)
    assert set(trimmed.states) == {"0", "1"}
    assert trimmed.accepting == {"1"}
    assert trim(trimmed) is trimmed


def test_sub_automaton():
    s = sub_automaton(gen_fig1(), "1")
    assert set(s.states) == {"1", "2"}
    assert s.initial == {"1"}
    assert s.accepting == {"1"}
    with pytest.raises(AutomatonInputError):
        sub_automaton(gen_fig1(), "7")
