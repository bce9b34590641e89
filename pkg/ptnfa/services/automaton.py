"""
Automaton core for ptnfa.

Responsible for:
- The immutable epsilon-free NFA type and its DFA refinement
- Membership (step / accepts)
- Completion with a sink state

State names and letters are text at the interface; internally states are
dense integer indices and the transition relation is a table
delta[state][letter] -> frozenset of state indices.
"""
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ptnfa import config
from ptnfa.exceptions import AutomatonInputError
from ptnfa.utils.logging import get_logger
from ptnfa.utils.words import Word, sorted_states, state_sort_key

logger = get_logger(__name__)

StateIds = FrozenSet[int]
Delta = Tuple[Tuple[StateIds, ...], ...]
Triple = Tuple[str, str, str]


def _check_letter(symbol: str) -> None:
    if not isinstance(symbol, str) or not symbol:
        raise AutomatonInputError(f"letter {symbol!r} must be nonempty text")
    if any(ch.isspace() for ch in symbol) or "," in symbol:
        raise AutomatonInputError(f"letter {symbol!r} contains whitespace or a comma")


class Automaton:
    """
    Epsilon-free NFA A = (Q, sigma, delta, I, F).

    Immutable after construction. The alphabet is kept sorted, states keep
    their declaration order.
    """

    __slots__ = (
        "_states", "_alphabet", "_state_index", "_letter_index",
        "_initial", "_accepting", "_delta",
    )

    def __init__(
        self,
        states: Iterable[str],
        alphabet: Iterable[str],
        initial: Iterable[str],
        accepting: Iterable[str],
        transitions: Iterable[Triple] = ()
    ):
        """
        Build and validate an automaton.

        Args:
            states: Unique state names.
            alphabet: Letter symbols.
            initial: Nonempty subset of states.
            accepting: Subset of states.
            transitions: (source, letter, target) triples.

        Raises:
            AutomatonInputError: On duplicate or unknown names, an empty
                state set, alphabet or initial set.
        """
        states = tuple(states)
        if not states:
            raise AutomatonInputError("automaton needs at least one state")
        for name in states:
            if not isinstance(name, str) or not name:
                raise AutomatonInputError(f"state name {name!r} must be nonempty text")
        if len(set(states)) != len(states):
            duplicates = sorted_states({s for s in states if states.count(s) > 1})
            raise AutomatonInputError(f"duplicate state names: {duplicates}")

        letters = set(alphabet)
        if not letters:
            raise AutomatonInputError("alphabet must be nonempty")
        for symbol in letters:
            _check_letter(symbol)

        state_index = {name: i for i, name in enumerate(states)}
        alphabet_tuple = tuple(sorted(letters))
        letter_index = {symbol: x for x, symbol in enumerate(alphabet_tuple)}

        def lookup(name: str, role: str) -> int:
            try:
                return state_index[name]
            except (KeyError, TypeError):
                raise AutomatonInputError(f"{role} {name!r} is not a declared state") from None

        initial_ids = frozenset(lookup(q, "initial state") for q in initial)
        if not initial_ids:
            raise AutomatonInputError("automaton needs at least one initial state")
        accepting_ids = frozenset(lookup(q, "accepting state") for q in accepting)

        rows: List[List[set]] = [[set() for _ in alphabet_tuple] for _ in states]
        for triple in transitions:
            try:
                source, letter, target = triple
            except (TypeError, ValueError):
                raise AutomatonInputError(f"transition {triple!r} is not a triple") from None
            if letter not in letter_index:
                raise AutomatonInputError(
                    f"transition {list(triple)} uses letter {letter!r} outside the alphabet"
                )
            p = lookup(source, f"transition {list(triple)} source")
            q = lookup(target, f"transition {list(triple)} target")
            rows[p][letter_index[letter]].add(q)

        self._states = states
        self._alphabet = alphabet_tuple
        self._state_index = state_index
        self._letter_index = letter_index
        self._initial = initial_ids
        self._accepting = accepting_ids
        self._delta = tuple(tuple(frozenset(cell) for cell in row) for row in rows)
        self._validate()

    @classmethod
    def from_indexed(
        cls,
        states: Sequence[str],
        alphabet: Sequence[str],
        initial_ids: Iterable[int],
        accepting_ids: Iterable[int],
        delta: Sequence[Sequence[Iterable[int]]]
    ) -> "Automaton":
        """
        Build an automaton directly from the index representation.

        Used by constructions that already work on indices. `alphabet` must
        be sorted and `delta[q][x]` refers to the x-th letter of it.
        """
        obj = cls.__new__(cls)
        obj._states = tuple(states)
        obj._alphabet = tuple(alphabet)
        obj._state_index = {name: i for i, name in enumerate(obj._states)}
        obj._letter_index = {symbol: x for x, symbol in enumerate(obj._alphabet)}
        obj._initial = frozenset(initial_ids)
        obj._accepting = frozenset(accepting_ids)
        obj._delta = tuple(tuple(frozenset(cell) for cell in row) for row in delta)
        if not obj._initial:
            raise AutomatonInputError("automaton needs at least one initial state")
        obj._validate()
        return obj

    def _validate(self) -> None:
        """Hook for refinements; the plain NFA has nothing further to check."""

    # -------------------- NAME LEVEL --------------------

    @property
    def states(self) -> Tuple[str, ...]:
        return self._states

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self._alphabet

    @property
    def initial(self) -> FrozenSet[str]:
        return self.names(self._initial)

    @property
    def accepting(self) -> FrozenSet[str]:
        return self.names(self._accepting)

    def transitions(self) -> List[Triple]:
        """All transitions as (source, letter, target), canonically sorted."""
        triples = [
            (self._states[p], self._alphabet[x], self._states[q])
            for p, row in enumerate(self._delta)
            for x, targets in enumerate(row)
            for q in targets
        ]
        return sorted(
            triples,
            key=lambda t: (state_sort_key(t[0]), t[1], state_sort_key(t[2]))
        )

    def successors(self, state: str, letter: str) -> FrozenSet[str]:
        """Return state . letter."""
        return self.names(self._delta[self.state_id(state)][self.letter_id(letter)])

    # -------------------- INDEX LEVEL --------------------

    @property
    def num_states(self) -> int:
        return len(self._states)

    @property
    def delta(self) -> Delta:
        return self._delta

    @property
    def initial_ids(self) -> StateIds:
        return self._initial

    @property
    def accepting_ids(self) -> StateIds:
        return self._accepting

    def state_id(self, name: str) -> int:
        """Index of a state name; AutomatonInputError if unknown."""
        try:
            return self._state_index[name]
        except (KeyError, TypeError):
            raise AutomatonInputError(f"unknown state {name!r}") from None

    def letter_id(self, letter: str) -> int:
        """Index of a letter; AutomatonInputError if unknown."""
        try:
            return self._letter_index[letter]
        except (KeyError, TypeError):
            raise AutomatonInputError(f"unknown letter {letter!r}") from None

    def has_letter(self, letter: str) -> bool:
        return letter in self._letter_index

    def word_ids(self, word: Iterable[str]) -> Tuple[int, ...]:
        """Translate a word into letter indices."""
        return tuple(self.letter_id(letter) for letter in word)

    def names(self, ids: Iterable[int]) -> FrozenSet[str]:
        return frozenset(self._states[i] for i in ids)

    def post(self, ids: Iterable[int], x: int) -> StateIds:
        """Image of a set of state indices under letter index x."""
        result = set()
        for q in ids:
            result |= self._delta[q][x]
        return frozenset(result)

    # -------------------- PROTOCOL --------------------

    def _key(self):
        return (
            frozenset(self._states),
            self._alphabet,
            self.initial,
            self.accepting,
            frozenset(self.transitions()),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automaton):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(states={len(self._states)}, "
            f"alphabet={list(self._alphabet)}, initial={sorted_states(self.initial)}, "
            f"accepting={sorted_states(self.accepting)})"
        )


class Dfa(Automaton):
    """Automaton with one initial state and exactly one successor per (state, letter)."""

    __slots__ = ()

    def _validate(self) -> None:
        if len(self._initial) != 1:
            raise AutomatonInputError(
                f"a DFA has exactly one initial state, got {len(self._initial)}"
            )
        for p, row in enumerate(self._delta):
            for x, targets in enumerate(row):
                if len(targets) != 1:
                    raise AutomatonInputError(
                        f"a DFA needs exactly one successor of state "
                        f"{self._states[p]!r} under {self._alphabet[x]!r}, "
                        f"got {len(targets)}"
                    )

    @property
    def initial_id(self) -> int:
        return next(iter(self._initial))

    def next_id(self, q: int, x: int) -> int:
        """The unique successor index of q under letter index x."""
        return next(iter(self._delta[q][x]))

    def table(self) -> Tuple[Tuple[int, ...], ...]:
        """Successor table: table()[q][x] is the successor index."""
        return tuple(tuple(next(iter(cell)) for cell in row) for row in self._delta)

    def run(self, q: int, word_ids: Iterable[int]) -> int:
        """State index reached from q by a word given as letter indices."""
        for x in word_ids:
            q = self.next_id(q, x)
        return q


# -------------------- OPERATIONS --------------------

def step(a: Automaton, states: Iterable[str], word: Iterable[str]) -> FrozenSet[str]:
    """
    Compute S . w.

    Args:
        a: Automaton.
        states: Set S of state names.
        word: Word w over the alphabet of a.

    Returns:
        The set of states reachable from S by w; possibly empty.

    Raises:
        AutomatonInputError: On an unknown state or letter.
    """
    current = frozenset(a.state_id(q) for q in states)
    for x in a.word_ids(word):
        current = a.post(current, x)
    return a.names(current)


def run_ids(a: Automaton, ids: Iterable[int], word_ids: Iterable[int]) -> StateIds:
    """Index-level counterpart of step."""
    current = frozenset(ids)
    for x in word_ids:
        current = a.post(current, x)
    return current


def accepts(a: Automaton, word: Iterable[str]) -> bool:
    """
    Decide membership: I . w intersects F.

    Raises:
        AutomatonInputError: On a letter outside the alphabet.
    """
    return bool(run_ids(a, a.initial_ids, a.word_ids(word)) & a.accepting_ids)


def is_complete(a: Automaton) -> bool:
    """True iff every (state, letter) pair has at least one successor."""
    return all(targets for row in a.delta for targets in row)


def missing_transitions(a: Automaton) -> List[Tuple[str, str]]:
    """(state, letter) pairs without a successor."""
    return [
        (a.states[p], a.alphabet[x])
        for p, row in enumerate(a.delta)
        for x, targets in enumerate(row)
        if not targets
    ]


def complete(a: Automaton, sink_name: Optional[str] = None) -> Automaton:
    """
    Complete an automaton with a non-accepting sink.

    Args:
        a: Automaton.
        sink_name: Name of the sink (config.DEFAULT_SINK_NAME if None).

    Returns:
        `a` itself when already complete; otherwise a copy with one sink that
        loops on every letter and receives every missing (state, letter).

    Raises:
        AutomatonInputError: If the sink name clashes with an existing state.
    """
    if is_complete(a):
        return a

    sink_name = sink_name or config.DEFAULT_SINK_NAME
    if sink_name in a.states:
        raise AutomatonInputError(f"sink name {sink_name!r} clashes with an existing state")

    sink = a.num_states
    delta = [
        [targets if targets else frozenset({sink}) for targets in row]
        for row in a.delta
    ]
    delta.append([frozenset({sink}) for _ in a.alphabet])

    logger.debug(f"Completed automaton with sink {sink_name!r}")
    return Automaton.from_indexed(
        a.states + (sink_name,), a.alphabet, a.initial_ids, a.accepting_ids, delta
    )


def as_dfa(a: Automaton) -> Optional[Dfa]:
    """
    View an automaton as a Dfa when it already is deterministic and total.

    Returns:
        The Dfa, or None when a has several initial states or some
        (state, letter) without exactly one successor.
    """
    if isinstance(a, Dfa):
        return a
    if len(a.initial_ids) != 1:
        return None
    if any(len(targets) != 1 for row in a.delta for targets in row):
        return None
    return Dfa.from_indexed(a.states, a.alphabet, a.initial_ids, a.accepting_ids, a.delta)


def with_alphabet(a: Automaton, letters: Iterable[str]) -> Automaton:
    """
    Extend the alphabet without adding transitions.

    The language is unchanged: words using a new letter are rejected.
    """
    merged = tuple(sorted(set(a.alphabet) | set(letters)))
    if merged == a.alphabet:
        return a
    for symbol in merged:
        _check_letter(symbol)
    position = {symbol: x for x, symbol in enumerate(merged)}
    delta = [[frozenset() for _ in merged] for _ in a.states]
    for p, row in enumerate(a.delta):
        for x, targets in enumerate(row):
            delta[p][position[a.alphabet[x]]] = targets
    return Automaton.from_indexed(a.states, merged, a.initial_ids, a.accepting_ids, delta)


def rename_states(a: Automaton, mapping: Dict[str, str]) -> Automaton:
    """
    Rename states; names missing from `mapping` are kept.

    Raises:
        AutomatonInputError: If the renaming merges two states.
    """
    renamed = tuple(mapping.get(name, name) for name in a.states)
    if len(set(renamed)) != len(renamed):
        raise AutomatonInputError("renaming must keep state names unique")
    cls = Dfa if isinstance(a, Dfa) else Automaton
    return cls.from_indexed(renamed, a.alphabet, a.initial_ids, a.accepting_ids, a.delta)


def word_to_text(word: Word) -> str:
    """Short helper for log messages."""
    return " ".join(word) if word else "ε"
