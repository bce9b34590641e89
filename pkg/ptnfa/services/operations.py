"""
Automaton constructions for ptnfa.

Responsible for:
- Reversal, concatenation, union, intersection
- Inverse projection and parallel composition
- Subset construction and minimization (canonical breadth-first naming)
- Equivalence, emptiness and universality with witness words
"""
from collections import deque
from functools import reduce
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ptnfa import config
from ptnfa.exceptions import AutomatonInputError, PreconditionError, ResourceExceededError
from ptnfa.models.results import Verdict, Witness
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton, Dfa, StateIds, as_dfa, with_alphabet
from ptnfa.utils.logging import get_logger, log_progress
from ptnfa.utils.words import Word

logger = get_logger(__name__)


# -------------------- RATIONAL OPERATIONS --------------------

def reverse(a: Automaton) -> Automaton:
    """
    Reverse an automaton: flip transitions, swap initial and accepting sets.

    An automaton without accepting states reverses to an automaton with the
    same states, initial state the first declared state and no accepting
    states, so the language stays empty.
    """
    delta = [[set() for _ in a.alphabet] for _ in a.states]
    for p, row in enumerate(a.delta):
        for x, targets in enumerate(row):
            for q in targets:
                delta[q][x].add(p)

    if a.accepting_ids:
        initial, accepting = a.accepting_ids, a.initial_ids
    else:
        initial, accepting = frozenset({0}), frozenset()

    return Automaton.from_indexed(a.states, a.alphabet, initial, accepting, delta)


def _disjoint_triples(a: Automaton, prefix: str) -> List[Tuple[str, str, str]]:
    return [(f"{prefix}{p}", x, f"{prefix}{q}") for p, x, q in a.transitions()]


def accepts_empty_word(a: Automaton) -> bool:
    return bool(a.initial_ids & a.accepting_ids)


def concat_automata(a: Automaton, b: Automaton) -> Automaton:
    """
    Epsilon-free concatenation L(a) L(b).

    States of both operands are prefixed with "1." and "2.". Accepting states
    of `a` carry copies of the transitions leaving the initial states of `b`.

    Args:
        a: Left operand.
        b: Right operand; alphabets may differ, the result uses their union.

    Returns:
        Automaton for the concatenation.
    """
    left, right = "1.", "2."
    triples = _disjoint_triples(a, left) + _disjoint_triples(b, right)

    b_initial = sorted(b.initial)
    for f in a.accepting:
        for i in b_initial:
            for x in b.alphabet:
                for q in b.successors(i, x):
                    triples.append((f"{left}{f}", x, f"{right}{q}"))

    initial = [f"{left}{q}" for q in a.initial]
    if accepts_empty_word(a):
        initial += [f"{right}{q}" for q in b.initial]

    accepting = [f"{right}{q}" for q in b.accepting]
    if accepts_empty_word(b):
        accepting += [f"{left}{q}" for q in a.accepting]

    return Automaton(
        states=[f"{left}{q}" for q in a.states] + [f"{right}{q}" for q in b.states],
        alphabet=set(a.alphabet) | set(b.alphabet),
        initial=initial,
        accepting=accepting,
        transitions=triples,
    )


def union_automata(a: Automaton, b: Automaton) -> Automaton:
    """Disjoint union with merged initial sets; language L(a) + L(b)."""
    left, right = "1.", "2."
    return Automaton(
        states=[f"{left}{q}" for q in a.states] + [f"{right}{q}" for q in b.states],
        alphabet=set(a.alphabet) | set(b.alphabet),
        initial=[f"{left}{q}" for q in a.initial] + [f"{right}{q}" for q in b.initial],
        accepting=[f"{left}{q}" for q in a.accepting] + [f"{right}{q}" for q in b.accepting],
        transitions=_disjoint_triples(a, left) + _disjoint_triples(b, right),
    )


def intersect_automata(a: Automaton, b: Automaton) -> Automaton:
    """
    Accessible product automaton; language L(a) intersected with L(b).

    The alphabet is the union of both alphabets. A letter missing from one
    operand has no transitions there, so words using it are rejected.
    Product states are named "(p,q)".
    """
    a = with_alphabet(a, b.alphabet)
    b = with_alphabet(b, a.alphabet)

    index: Dict[Tuple[int, int], int] = {}
    order: List[Tuple[int, int]] = []
    queue = deque()
    for p in sorted(a.initial_ids):
        for q in sorted(b.initial_ids):
            index[(p, q)] = len(order)
            order.append((p, q))
            queue.append((p, q))

    delta: List[List[set]] = []
    while queue:
        p, q = queue.popleft()
        row = []
        for x in range(len(a.alphabet)):
            targets = set()
            for p2 in sorted(a.delta[p][x]):
                for q2 in sorted(b.delta[q][x]):
                    pair = (p2, q2)
                    if pair not in index:
                        index[pair] = len(order)
                        order.append(pair)
                        queue.append(pair)
                    targets.add(index[pair])
            row.append(targets)
        delta.append(row)

    names = [f"({a.states[p]},{b.states[q]})" for p, q in order]
    initial = [index[(p, q)] for p in a.initial_ids for q in b.initial_ids]
    accepting = [
        i for i, (p, q) in enumerate(order)
        if p in a.accepting_ids and q in b.accepting_ids
    ]
    return Automaton.from_indexed(names, a.alphabet, initial, accepting, delta)


def inverse_projection(a: Automaton, bigger: Iterable[str]) -> Automaton:
    """
    Inverse image of L(a) under the projection from `bigger` onto a's alphabet.

    Every state gets self-loops on the letters of `bigger` outside a.alphabet.

    Raises:
        AutomatonInputError: If `bigger` does not contain a.alphabet.
    """
    bigger = set(bigger)
    missing = set(a.alphabet) - bigger
    if missing:
        raise AutomatonInputError(
            f"alphabet {sorted(bigger)} does not contain letters {sorted(missing)}"
        )
    extra = bigger - set(a.alphabet)
    if not extra:
        return a

    extended = with_alphabet(a, extra)
    delta = [list(row) for row in extended.delta]
    for symbol in extra:
        x = extended.letter_id(symbol)
        for p in range(extended.num_states):
            delta[p][x] = frozenset({p})
    return Automaton.from_indexed(
        extended.states, extended.alphabet, extended.initial_ids, extended.accepting_ids, delta
    )


def parallel_compose(automata: Sequence[Automaton]) -> Automaton:
    """
    Parallel composition: intersection of the inverse projections onto the
    union alphabet.

    Raises:
        AutomatonInputError: On an empty list.
    """
    if not automata:
        raise AutomatonInputError("parallel composition needs at least one automaton")
    union_alphabet = set()
    for a in automata:
        union_alphabet |= set(a.alphabet)
    projected = [inverse_projection(a, union_alphabet) for a in automata]
    if len(projected) == 1:
        return projected[0]
    return reduce(intersect_automata, projected)


# -------------------- DETERMINIZATION --------------------

def subset_construction(
    a: Automaton,
    budget: Optional[int] = None
) -> Tuple[Dfa, List[StateIds]]:
    """
    Accessible subset construction.

    Subsets are discovered breadth-first with letters in sorted order and
    named "0", "1", ... in discovery order. The empty subset is kept as a sink
    when reachable, so the result is total.

    Args:
        a: Automaton.
        budget: Maximal number of subsets (config.SUBSET_STATE_BUDGET if None).

    Returns:
        Tuple of (dfa, subsets) where subsets[i] is the state set of a named "i".

    Raises:
        ResourceExceededError: When more subsets than the budget are reached.
    """
    budget = config.SUBSET_STATE_BUDGET if budget is None else budget

    start = a.initial_ids
    index: Dict[StateIds, int] = {start: 0}
    subsets: List[StateIds] = [start]
    table: List[List[int]] = []

    position = 0
    while position < len(subsets):
        current = subsets[position]
        row = []
        for x in range(len(a.alphabet)):
            target = a.post(current, x)
            if target not in index:
                if len(subsets) >= budget:
                    raise ResourceExceededError(
                        "subset construction exceeded its budget", budget, len(subsets) + 1
                    )
                index[target] = len(subsets)
                subsets.append(target)
            row.append(index[target])
        table.append(row)
        position += 1
        log_progress(logger, position, prefix="Subset construction")

    accepting = [i for i, s in enumerate(subsets) if s & a.accepting_ids]
    dfa = Dfa.from_indexed(
        [str(i) for i in range(len(subsets))],
        a.alphabet,
        [0],
        accepting,
        [[(t,) for t in row] for row in table],
    )
    logger.debug(f"Subset construction: {a.num_states} states -> {len(subsets)} subsets")
    return dfa, subsets


def determinize(a: Automaton, budget: Optional[int] = None) -> Dfa:
    """
    Determinize an automaton by the accessible subset construction.

    Raises:
        ResourceExceededError: When the subset budget is exceeded.
    """
    dfa, _ = subset_construction(a, budget)
    return dfa


def _require_dfa(d: Automaton) -> Dfa:
    dfa = as_dfa(d)
    if dfa is None:
        raise PreconditionError("operation requires a total deterministic automaton")
    return dfa


def minimize(d: Automaton) -> Dfa:
    """
    Minimize a total DFA by partition refinement.

    Unreachable states are dropped first; the dead state, if any, is kept so
    the result stays total. States of the result are named "0", "1", ... in
    breadth-first discovery order from the initial state over sorted letters.

    Args:
        d: Total deterministic automaton.

    Returns:
        The minimal total DFA.

    Raises:
        PreconditionError: If d is not deterministic and total.
    """
    d = _require_dfa(d)
    table = d.table()
    letters = range(len(d.alphabet))

    reachable = [d.initial_id]
    seen = {d.initial_id}
    for q in reachable:
        for x in letters:
            r = table[q][x]
            if r not in seen:
                seen.add(r)
                reachable.append(r)

    block = {q: int(q in d.accepting_ids) for q in reachable}
    num_blocks = len(set(block.values()))
    while True:
        signatures: Dict[Tuple, int] = {}
        refined = {}
        for q in reachable:
            signature = (block[q],) + tuple(block[table[q][x]] for x in letters)
            refined[q] = signatures.setdefault(signature, len(signatures))
        block = refined
        if len(signatures) == num_blocks:
            break
        num_blocks = len(signatures)

    # Canonical renaming by breadth-first discovery of blocks
    representative = {}
    for q in reachable:
        representative.setdefault(block[q], q)
    names = {block[d.initial_id]: 0}
    queue = deque([block[d.initial_id]])
    rows: Dict[int, List[int]] = {}
    while queue:
        b = queue.popleft()
        q = representative[b]
        row = []
        for x in letters:
            target = block[table[q][x]]
            if target not in names:
                names[target] = len(names)
                queue.append(target)
            row.append(names[target])
        rows[names[b]] = row

    accepting = [names[block[q]] for q in reachable if q in d.accepting_ids]
    logger.debug(f"Minimization: {d.num_states} states -> {len(names)} states")
    return Dfa.from_indexed(
        [str(i) for i in range(len(names))],
        d.alphabet,
        [0],
        set(accepting),
        [[(t,) for t in rows[i]] for i in range(len(names))],
    )


def minimal_dfa(a: Automaton, budget: Optional[int] = None) -> Dfa:
    """minimize(determinize(a))."""
    return minimize(determinize(a, budget))


def complement_dfa(d: Automaton) -> Dfa:
    """
    Complement a total DFA by swapping accepting and non-accepting states.

    Raises:
        PreconditionError: If d is not deterministic and total.
    """
    d = _require_dfa(d)
    accepting = set(range(d.num_states)) - d.accepting_ids
    return Dfa.from_indexed(d.states, d.alphabet, d.initial_ids, accepting, d.delta)


# -------------------- WORD SEARCHES --------------------

def _rebuild(parents: Dict, key, alphabet: Sequence[str]) -> Word:
    letters = []
    while parents[key] is not None:
        key, x = parents[key]
        letters.append(alphabet[x])
    return tuple(reversed(letters))


def shortest_distinguishing_suffix(d: Dfa, p: int, q: int) -> Optional[Word]:
    """
    Shortest word x, least in letter order at equal length, with exactly one
    of p.x and q.x accepting.

    Args:
        d: Total DFA.
        p: State index.
        q: State index.

    Returns:
        The suffix, or None when p and q are equivalent.
    """
    table = d.table()
    start = (p, q)
    parents = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        if (pair[0] in d.accepting_ids) != (pair[1] in d.accepting_ids):
            return _rebuild(parents, pair, d.alphabet)
        for x in range(len(d.alphabet)):
            nxt = (table[pair[0]][x], table[pair[1]][x])
            if nxt not in parents:
                parents[nxt] = (pair, x)
                queue.append(nxt)
    return None


def equivalent(a: Automaton, b: Automaton) -> Verdict:
    """
    Decide L(a) = L(b).

    Both automata are determinized over the union alphabet and the product is
    searched breadth-first.

    Returns:
        Verdict; when false, the witness is the shortest distinguishing word.
    """
    da = determinize(with_alphabet(a, b.alphabet))
    db = determinize(with_alphabet(b, a.alphabet))

    start = (da.initial_id, db.initial_id)
    parents = {start: None}
    queue = deque([start])
    table_a, table_b = da.table(), db.table()
    while queue:
        pair = queue.popleft()
        if (pair[0] in da.accepting_ids) != (pair[1] in db.accepting_ids):
            word = _rebuild(parents, pair, da.alphabet)
            return Verdict(False, Witness(WitnessKind.WORD, word))
        for x in range(len(da.alphabet)):
            nxt = (table_a[pair[0]][x], table_b[pair[1]][x])
            if nxt not in parents:
                parents[nxt] = (pair, x)
                queue.append(nxt)
    return Verdict(True)


def is_empty_language(a: Automaton) -> Verdict:
    """
    Decide L(a) = {}.

    Returns:
        Verdict; when false, the witness is a shortest accepted word.
    """
    parents: Dict[int, Optional[Tuple[int, int]]] = {}
    queue = deque()
    for q in sorted(a.initial_ids):
        parents[q] = None
        queue.append(q)
    while queue:
        p = queue.popleft()
        if p in a.accepting_ids:
            return Verdict(False, Witness(WitnessKind.WORD, _rebuild(parents, p, a.alphabet)))
        for x in range(len(a.alphabet)):
            for q in sorted(a.delta[p][x]):
                if q not in parents:
                    parents[q] = (p, x)
                    queue.append(q)
    return Verdict(True)


def is_universal(a: Automaton, budget: Optional[int] = None) -> Verdict:
    """
    Decide L(a) = sigma*, exploring subsets lazily.

    Returns:
        Verdict; when false, the witness is a shortest rejected word.

    Raises:
        ResourceExceededError: When the subset budget is exceeded.
    """
    budget = config.SUBSET_STATE_BUDGET if budget is None else budget
    start: FrozenSet[int] = a.initial_ids
    parents = {start: None}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if not current & a.accepting_ids:
            word = _rebuild(parents, current, a.alphabet)
            return Verdict(False, Witness(WitnessKind.WORD, word))
        for x in range(len(a.alphabet)):
            target = a.post(current, x)
            if target not in parents:
                if len(parents) >= budget:
                    raise ResourceExceededError(
                        "universality check exceeded the subset budget", budget, len(parents) + 1
                    )
                parents[target] = (current, x)
                queue.append(target)
    return Verdict(True)
