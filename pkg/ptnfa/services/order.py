"""
Order-theoretic structure of automata.

Responsible for:
- The state graph (networkx) restricted to a set of letters
- Reachability, trimming and sub-automata
- Partial order detection and depth (longest simple path)
"""
from typing import Iterable, List, Optional, Set

import networkx as nx

from ptnfa import config
from ptnfa.exceptions import ResourceExceededError
from ptnfa.models.results import Verdict, Witness
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton
from ptnfa.utils.logging import get_logger
from ptnfa.utils.words import sorted_states

logger = get_logger(__name__)


def state_graph(a: Automaton, letters: Optional[Iterable[str]] = None) -> nx.DiGraph:
    """
    Directed graph over state indices with an edge p -> q iff q in p.x for
    some letter x of `letters` (all letters if None). Self-loops are kept.

    Raises:
        AutomatonInputError: On an unknown letter.
    """
    if letters is None:
        letter_ids = range(len(a.alphabet))
    else:
        letter_ids = [a.letter_id(x) for x in letters]

    graph = nx.DiGraph()
    graph.add_nodes_from(range(a.num_states))
    for p in range(a.num_states):
        for x in letter_ids:
            for q in a.delta[p][x]:
                graph.add_edge(p, q)
    return graph


def reachable_ids(a: Automaton, sources: Optional[Iterable[int]] = None) -> Set[int]:
    """State indices reachable from `sources` (initial states if None)."""
    sources = set(a.initial_ids if sources is None else sources)
    graph = state_graph(a)
    seen = set(sources)
    for source in sources:
        seen |= nx.descendants(graph, source)
    return seen


def reachable_states(a: Automaton, sources: Optional[Iterable[str]] = None) -> frozenset:
    """
    Names of the states reachable from `sources` (initial states if None).

    Raises:
        AutomatonInputError: On an unknown state.
    """
    ids = None if sources is None else [a.state_id(q) for q in sources]
    return a.names(reachable_ids(a, ids))


def _restrict(a: Automaton, keep: Iterable[int], initial: Iterable[int]) -> Automaton:
    keep = sorted(keep)
    position = {q: i for i, q in enumerate(keep)}
    delta = [
        [[position[q] for q in a.delta[p][x] if q in position] for x in range(len(a.alphabet))]
        for p in keep
    ]
    return Automaton.from_indexed(
        [a.states[q] for q in keep],
        a.alphabet,
        [position[q] for q in initial],
        [position[q] for q in keep if q in a.accepting_ids],
        delta,
    )


def trim(a: Automaton) -> Automaton:
    """Restrict an automaton to its accessible states."""
    keep = reachable_ids(a)
    if len(keep) == a.num_states:
        return a
    return _restrict(a, keep, a.initial_ids)


def sub_automaton(a: Automaton, p: str) -> Automaton:
    """
    Sub-automaton induced by state p.

    Args:
        a: Automaton.
        p: State name.

    Returns:
        Automaton over reach(p) with the single initial state p and accepting
        states F restricted to reach(p).

    Raises:
        AutomatonInputError: If p is not a state of a.
    """
    start = a.state_id(p)
    return _restrict(a, reachable_ids(a, [start]), [start])


def is_partially_ordered(a: Automaton) -> Verdict:
    """
    Decide whether the reachability relation is a partial order.

    Returns:
        Verdict; when false, the witness is the state set of the nontrivial
        strongly connected component with the least member.
    """
    components = [
        c for c in nx.strongly_connected_components(state_graph(a)) if len(c) > 1
    ]
    if not components:
        return Verdict(True)
    cycle = min(components, key=min)
    return Verdict(False, Witness(WitnessKind.STATE_SET, a.names(cycle)))


def _longest_simple_path(graph: nx.DiGraph, sources: List[int]) -> int:
    best = 0
    for source in sources:
        on_path = {source}
        stack = [(source, iter(sorted(graph.successors(source))))]
        while stack:
            best = max(best, len(stack) - 1)
            node, successors = stack[-1]
            for succ in successors:
                if succ not in on_path:
                    on_path.add(succ)
                    stack.append((succ, iter(sorted(graph.successors(succ)))))
                    break
            else:
                stack.pop()
                on_path.discard(node)
    return best


def depth(a: Automaton, budget: Optional[int] = None) -> int:
    """
    Number of transitions on the longest simple path from an initial state.

    Partially ordered automata are handled by one pass over the self-loop
    free reachable graph. Cyclic automata fall back to exhaustive simple path
    search.

    Args:
        a: Automaton.
        budget: Largest cyclic automaton searched exhaustively
            (config.DEPTH_STATE_BUDGET if None).

    Returns:
        The depth.

    Raises:
        ResourceExceededError: For a cyclic automaton above the budget.
    """
    budget = config.DEPTH_STATE_BUDGET if budget is None else budget

    graph = state_graph(a).subgraph(reachable_ids(a)).copy()
    graph.remove_edges_from(list(nx.selfloop_edges(graph)))

    if nx.is_directed_acyclic_graph(graph):
        # every reachable node extends back to an initial state
        return nx.dag_longest_path_length(graph)

    if graph.number_of_nodes() > budget:
        raise ResourceExceededError(
            "longest simple path search on a cyclic automaton", budget, graph.number_of_nodes()
        )
    logger.debug(f"Exhaustive depth search on {graph.number_of_nodes()} states")
    return _longest_simple_path(graph, sorted(a.initial_ids))


def describe_states(a: Automaton, ids: Iterable[int]) -> List[str]:
    """Sorted names of a set of state indices."""
    return sorted_states(a.names(ids))
