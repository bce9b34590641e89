"""
Structural characterizations of piecewise testability.

Responsible for:
- Self-loop alphabets and the letter-restricted state graphs
- The unique maximal state (UMS) property and DFA confluence
- ptNFA recognition and the piecewise testability deciders
- The 1-PT and 2-PT checks on DFAs and their sufficient NFA counterparts
"""
from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Set

import networkx as nx

from ptnfa import config
from ptnfa.exceptions import (
    InvariantViolationError,
    NotPiecewiseTestableError,
    PreconditionError,
)
from ptnfa.models.results import PtReport, UmsViolation, Verdict, Witness
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton, Dfa, as_dfa, is_complete
from ptnfa.services.operations import minimal_dfa, minimize
from ptnfa.services.order import depth, is_partially_ordered, reachable_ids, state_graph
from ptnfa.utils.logging import get_logger

logger = get_logger(__name__)


# -------------------- GRAPHS --------------------

def self_loop_alphabet(a: Automaton, p: str) -> FrozenSet[str]:
    """
    Letters with a self-loop at p.

    Raises:
        AutomatonInputError: If p is not a state.
    """
    q = a.state_id(p)
    return frozenset(a.alphabet[x] for x, targets in enumerate(a.delta[q]) if q in targets)


def letter_graph(a: Automaton, gamma: Iterable[str]) -> nx.DiGraph:
    """
    Graph G(A, gamma) over state names: p -> q iff q in p.x for some x in gamma.

    Raises:
        AutomatonInputError: On a letter outside the alphabet.
    """
    graph = state_graph(a, gamma)
    return nx.relabel_nodes(graph, dict(enumerate(a.states)))


# -------------------- UMS --------------------

def _ums_at(a: Automaton, p: int) -> Optional[UmsViolation]:
    sigma_p = [a.alphabet[x] for x, targets in enumerate(a.delta[p]) if p in targets]
    graph = state_graph(a, sigma_p)
    component = nx.node_connected_component(graph.to_undirected(as_view=True), p)
    reaching_p = nx.ancestors(graph, p) | {p}
    holds = component <= reaching_p

    maximal = None
    if not holds or len(component) <= config.UMS_CROSS_CHECK_LIMIT:
        maximal = {q for q in component if set(graph.successors(q)) <= {q}}
        if len(component) <= config.UMS_CROSS_CHECK_LIMIT and holds != (maximal == {p}):
            raise InvariantViolationError(
                f"UMS formulations disagree at state {a.states[p]!r}"
            )

    if holds:
        return None
    return UmsViolation(
        state=a.states[p],
        component=a.names(component),
        maximal_states=a.names(maximal),
    )


def has_ums_property(a: Automaton, reachable_only: bool = False) -> Verdict:
    """
    Check the unique maximal state property.

    For every state p, the weakly connected component C of p in
    G(A, sigma(p)) must have p as its unique maximal state, i.e. every member
    of C reaches p inside that graph.

    Args:
        a: Partially ordered automaton.
        reachable_only: Only check states reachable from an initial state.

    Returns:
        Verdict; when false, the witness lists every UmsViolation.

    Raises:
        PreconditionError: If a is not partially ordered.
    """
    if not is_partially_ordered(a):
        raise PreconditionError("the UMS property is defined for partially ordered automata")

    candidates = sorted(reachable_ids(a)) if reachable_only else range(a.num_states)
    violations = [v for v in (_ums_at(a, p) for p in candidates) if v is not None]

    if violations:
        logger.info(f"UMS fails at {len(violations)} state(s), first {violations[0].state!r}")
        return Verdict(False, Witness(WitnessKind.UMS_VIOLATIONS, violations))
    return Verdict(True)


# -------------------- CONFLUENCE --------------------

def _require_total_dfa(d: Automaton) -> Dfa:
    dfa = as_dfa(d)
    if dfa is None:
        raise PreconditionError("operation requires a total deterministic automaton")
    return dfa


def _letter_check(d: Automaton, state: int, *letters: int) -> Witness:
    return Witness(
        WitnessKind.LETTER_CHECK,
        {"state": d.states[state], "letters": [d.alphabet[x] for x in letters]},
    )


def _pair_meets(table, start, letters) -> bool:
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if p == q:
            return True
        for x in letters:
            nxt = (table[p][x], table[q][x])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def is_confluent_dfa(d: Automaton) -> Verdict:
    """
    Decide confluence: for all q and letters a, b there is w in {a,b}* with
    (q.a).w = (q.b).w.

    Returns:
        Verdict; when false, the witness is the failing (state, [a, b]).

    Raises:
        PreconditionError: If d is not a total DFA.
    """
    d = _require_total_dfa(d)
    table = d.table()
    for q in range(d.num_states):
        for x, y in combinations(range(len(d.alphabet)), 2):
            if not _pair_meets(table, (table[q][x], table[q][y]), (x, y)):
                return Verdict(False, _letter_check(d, q, x, y))
    return Verdict(True)


# -------------------- ptNFA --------------------

def is_ptnfa(a: Automaton) -> PtReport:
    """
    Check the three ptNFA conditions: partially ordered, complete, UMS.

    The UMS check only runs on partially ordered automata.
    """
    order = is_partially_ordered(a)
    report = PtReport(
        partially_ordered=order.answer,
        complete=is_complete(a),
        ums=None,
    )
    if not order:
        report.violations.append(order.witness)
        return report

    ums = has_ums_property(a)
    report.ums = ums.answer
    if not ums:
        report.violations.append(ums.witness)
    return report


def fact_two_report(d: Automaton) -> Dict[str, Optional[bool]]:
    """
    Both piecewise testability routes on the minimal DFA of d.

    Returns:
        Dict with "partially_ordered", "confluent" and "ums" (None when the
        minimal DFA is not partially ordered).
    """
    m = minimize(d)
    order = is_partially_ordered(m)
    return {
        "partially_ordered": order.answer,
        "confluent": is_confluent_dfa(m).answer,
        "ums": has_ums_property(m).answer if order else None,
    }


def is_piecewise_testable_dfa(d: Automaton) -> Verdict:
    """
    Decide piecewise testability of the language of a total DFA.

    The DFA is re-minimized, then both characterizations are evaluated:
    partially ordered and confluent, and partially ordered with UMS.

    Returns:
        Verdict; when false, the witness is a nontrivial cycle (STATE_SET) or
        a confluence failure (LETTER_CHECK) in the minimal DFA.

    Raises:
        PreconditionError: If d is not a total DFA.
        InvariantViolationError: If the two characterizations disagree.
    """
    m = minimize(d)
    order = is_partially_ordered(m)
    if not order:
        return Verdict(False, order.witness, detail="minimal DFA is not partially ordered")

    confluent = is_confluent_dfa(m)
    ums = has_ums_property(m)
    if confluent.answer != ums.answer:
        raise InvariantViolationError(
            f"confluence ({confluent.answer}) and UMS ({ums.answer}) disagree on a minimal DFA"
        )
    if not confluent:
        return Verdict(False, confluent.witness, detail="minimal DFA is not confluent")
    return Verdict(True, detail="minimal DFA is partially ordered and confluent")


def is_piecewise_testable_nfa(a: Automaton, budget: Optional[int] = None) -> Verdict:
    """
    Decide piecewise testability of L(a).

    A ptNFA is accepted immediately; otherwise the minimal DFA decides.

    Args:
        a: Automaton.
        budget: Subset construction budget.
    """
    if is_ptnfa(a):
        return Verdict(True, detail="automaton is a ptNFA")
    return is_piecewise_testable_dfa(minimal_dfa(a, budget))


def ptnfa_witness(a: Automaton, budget: Optional[int] = None) -> Dfa:
    """
    A ptNFA recognizing L(a): its minimal total DFA.

    Raises:
        NotPiecewiseTestableError: If L(a) is not piecewise testable; carries
            the negative verdict.
    """
    m = minimal_dfa(a, budget)
    verdict = is_piecewise_testable_dfa(m)
    if not verdict:
        raise NotPiecewiseTestableError(
            f"language is not piecewise testable: {verdict.detail}", verdict=verdict
        )
    return m


# -------------------- 1-PT / 2-PT --------------------

def is_one_pt_dfa(d: Automaton) -> Verdict:
    """
    Decide 1-piecewise testability on a total DFA: p.aa = p.a and p.ab = p.ba
    for every state p and letters a, b of the minimal DFA.
    """
    m = minimize(d)
    t = m.table()
    letters = range(len(m.alphabet))
    for p in range(m.num_states):
        for x in letters:
            if t[t[p][x]][x] != t[p][x]:
                return Verdict(False, _letter_check(m, p, x))
        for x, y in combinations(letters, 2):
            if t[t[p][x]][y] != t[t[p][y]][x]:
                return Verdict(False, _letter_check(m, p, x, y))
    return Verdict(True)


def one_pt_sufficient_nfa(a: Automaton) -> Verdict:
    """
    Sufficient condition for 1-piecewise testability on complete automata:
    p.aa = p.a and p.ab = p.ba as state sets.

    A negative answer is inconclusive.

    Raises:
        PreconditionError: If a is not complete.
    """
    if not is_complete(a):
        raise PreconditionError("the 1-PT condition is stated for complete automata")

    def run(p: int, *letters: int) -> FrozenSet[int]:
        current = frozenset({p})
        for x in letters:
            current = a.post(current, x)
        return current

    letters = range(len(a.alphabet))
    for p in range(a.num_states):
        for x in letters:
            if run(p, x, x) != run(p, x):
                return Verdict(False, _letter_check(a, p, x), conclusive=False)
        for x, y in combinations(letters, 2):
            if run(p, x, y) != run(p, y, x):
                return Verdict(False, _letter_check(a, p, x, y), conclusive=False)
    return Verdict(True)


def _after_letter(a: Automaton, x: int) -> Set[int]:
    """States at the end of some initial path that crosses an x-edge."""
    crossed = set()
    for q in reachable_ids(a):
        crossed |= a.delta[q][x]
    return reachable_ids(a, crossed)


def _two_pt_condition(a: Automaton, conclusive_negative: bool) -> Verdict:
    letters = range(len(a.alphabet))
    for x in letters:
        for s in sorted(_after_letter(a, x)):
            start = frozenset({s})
            # b = epsilon
            if a.post(a.post(start, x), x) != a.post(start, x):
                return Verdict(False, _letter_check(a, s, x), conclusive=conclusive_negative)
            for y in letters:
                ba = a.post(a.post(start, y), x)
                aba = a.post(a.post(a.post(start, x), y), x)
                if ba != aba:
                    return Verdict(
                        False, _letter_check(a, s, x, y), conclusive=conclusive_negative
                    )
    return Verdict(True)


def is_two_pt_dfa(d: Automaton) -> Verdict:
    """
    Decide 2-piecewise testability of a piecewise testable language.

    On the minimal DFA, for every letter a, every state s reached by a path
    using an a-transition and every b in sigma + {epsilon}: s.ba = s.aba.

    Raises:
        PreconditionError: If d is not a total DFA or its language is not
            piecewise testable.
    """
    m = minimize(d)
    if not is_piecewise_testable_dfa(m):
        raise PreconditionError("the 2-PT check requires a piecewise testable language")
    return _two_pt_condition(m, conclusive_negative=True)


def two_pt_sufficient_nfa(a: Automaton) -> Verdict:
    """
    The 2-PT condition evaluated on state sets of a ptNFA.

    A true answer guarantees 2-piecewise testability; a false answer is
    inconclusive.

    Raises:
        PreconditionError: If a is not a ptNFA.
    """
    if not is_ptnfa(a):
        raise PreconditionError("the 2-PT sufficient condition is stated for ptNFAs")
    return _two_pt_condition(a, conclusive_negative=False)


def depth_upper_bound_k(a: Automaton) -> Optional[int]:
    """
    Sound upper bound on the least k with L(a) k-piecewise testable.

    Returns:
        depth(a) when a is a ptNFA or a partially ordered confluent total DFA;
        None otherwise.
    """
    if is_ptnfa(a):
        return depth(a)
    d = as_dfa(a)
    if d is not None and is_partially_ordered(d) and is_confluent_dfa(d):
        return depth(d)
    return None
