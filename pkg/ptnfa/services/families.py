"""
Automaton and word families.

Responsible for:
- The A_i / B_i automata and the words w_i
- The two-cycle unary NFA and its minimal DFA chain
- The small pinned examples (the confluent non-PT automaton, ab* + c(a+b)*)
- The all-letters language
"""
from itertools import combinations
from typing import Iterable, List, Tuple

from ptnfa import config
from ptnfa.exceptions import AutomatonInputError, ResourceExceededError
from ptnfa.services.automaton import Automaton, Dfa
from ptnfa.services.operations import concat_automata, reverse
from ptnfa.utils.logging import get_logger
from ptnfa.utils.words import Word

logger = get_logger(__name__)


def _letter(j: int) -> str:
    return f"a{j}"


def _check_index(i: int, least: int) -> None:
    if i < least:
        raise AutomatonInputError(f"family index must be at least {least}, got {i}")


def gen_ai(i: int) -> Automaton:
    """
    Automaton A_i over a0..ai with states 0..i, all initial, 0 accepting.

    l.aj = l for l > j, and l.al = {0, ..., l-1}. The automaton is not
    complete; complete() adds the sink.
    """
    _check_index(i, 0)
    transitions = []
    for state in range(i + 1):
        for j in range(state):
            transitions.append((str(state), _letter(j), str(state)))
        for target in range(state):
            transitions.append((str(state), _letter(state), str(target)))
    return Automaton(
        states=[str(q) for q in range(i + 1)],
        alphabet=[_letter(j) for j in range(i + 1)],
        initial=[str(q) for q in range(i + 1)],
        accepting=["0"],
        transitions=transitions,
    )


def gen_bi(i: int) -> Automaton:
    """
    Automaton B_i over a0..ai with states -i..i, initial 0..i, accepting
    0, -1, ..., -i.

    j.al = j if |j| > l; l.al = {0, ..., l-1} for l >= 1;
    (-j).al = -l if 0 <= j < l.
    """
    _check_index(i, 0)
    transitions = []
    for j in range(-i, i + 1):
        for letter in range(abs(j)):
            transitions.append((str(j), _letter(letter), str(j)))
    for state in range(1, i + 1):
        for target in range(state):
            transitions.append((str(state), _letter(state), str(target)))
    for j in range(i + 1):
        for letter in range(j + 1, i + 1):
            transitions.append((str(-j), _letter(letter), str(-letter)))
    return Automaton(
        states=[str(q) for q in range(-i, i + 1)],
        alphabet=[_letter(j) for j in range(i + 1)],
        initial=[str(q) for q in range(i + 1)],
        accepting=[str(-q) for q in range(i + 1)],
        transitions=transitions,
    )


def gen_wi(i: int) -> Word:
    """w_0 = a0 and w_l = w_(l-1) a_l w_(l-1); |w_i| = 2^(i+1) - 1."""
    _check_index(i, 0)
    word: Word = (_letter(0),)
    for level in range(1, i + 1):
        word = word + (_letter(level),) + word
    return word


def lemma_pair(i: int) -> Tuple[Word, Word]:
    """
    With w_i = w' a0: the pair (w' a0 w'^R, w' w'^R).

    The two words are ~2i-equivalent and B_i accepts exactly one of them.
    """
    _check_index(i, 1)
    prefix = gen_wi(i)[:-1]
    mirrored = tuple(reversed(prefix))
    return prefix + (_letter(0),) + mirrored, prefix + mirrored


def gen_cycle_nfa(i: int) -> Automaton:
    """
    Unary NFA with two cycles of length i + 1 through state 0.

    0 -a-> 1 -> ... -> i -> 0 and 0 -a-> 1' -> ... -> i' -> 0 with a
    self-loop at i'; 0 initial, i accepting. L = a^i + a^(2i+1) a*.
    """
    _check_index(i, 1)
    a = config.UNARY_LETTER
    plain = [str(q) for q in range(1, i + 1)]
    primed = [f"{q}'" for q in range(1, i + 1)]
    transitions = [("0", a, plain[0]), ("0", a, primed[0]), (plain[-1], a, "0"),
                   (primed[-1], a, "0"), (primed[-1], a, primed[-1])]
    for chain in (plain, primed):
        transitions += [(p, a, q) for p, q in zip(chain, chain[1:])]
    return Automaton(
        states=["0"] + plain + primed,
        alphabet=[a],
        initial=["0"],
        accepting=[str(i)],
        transitions=transitions,
    )


def gen_cycle_min_dfa(i: int) -> Dfa:
    """
    Chain DFA 0 -> 1 -> ... -> 2i+1 with a self-loop at 2i+1; accepting
    {i, 2i+1}.
    """
    _check_index(i, 1)
    a = config.UNARY_LETTER
    last = 2 * i + 1
    transitions = [(str(p), a, str(min(p + 1, last))) for p in range(last + 1)]
    return Dfa(
        states=[str(p) for p in range(last + 1)],
        alphabet=[a],
        initial=["0"],
        accepting=[str(i), str(last)],
        transitions=transitions,
    )


def gen_fig1() -> Automaton:
    """
    Partially ordered complete NFA over {a, b} whose language is not
    piecewise testable; membership alternates on a, ab, aba, abab.
    """
    return Automaton(
        states=["0", "1", "2"],
        alphabet=["a", "b"],
        initial=["0"],
        accepting=["1"],
        transitions=[
            ("0", "a", "0"), ("0", "a", "1"), ("0", "b", "0"),
            ("1", "a", "1"), ("1", "b", "2"),
            ("2", "a", "2"), ("2", "b", "2"),
        ],
    )


def gen_example_l() -> Automaton:
    """NFA for ab* + c(a+b)* over {a, b, c}."""
    return Automaton(
        states=["0", "1", "2"],
        alphabet=["a", "b", "c"],
        initial=["0"],
        accepting=["1", "2"],
        transitions=[
            ("0", "a", "1"), ("1", "b", "1"),
            ("0", "c", "2"), ("2", "a", "2"), ("2", "b", "2"),
        ],
    )


def gen_example_llr() -> Automaton:
    """L L^R for L = ab* + c(a+b)*; piecewise testable L, non-PT product."""
    example = gen_example_l()
    return concat_automata(example, reverse(example))


def _subset_name(letters: Iterable[str]) -> str:
    return "{" + ",".join(sorted(letters)) + "}"


def all_letters_language_nfa(sigma: Iterable[str]) -> Dfa:
    """
    DFA of the words containing every letter of sigma.

    States are the subsets of letters seen so far (2^|sigma| states).

    Raises:
        AutomatonInputError: On an empty alphabet.
        ResourceExceededError: Above config.ALL_LETTERS_MAX_ALPHABET letters.
    """
    letters = sorted(set(sigma))
    if not letters:
        raise AutomatonInputError("alphabet must be nonempty")
    if len(letters) > config.ALL_LETTERS_MAX_ALPHABET:
        raise ResourceExceededError(
            "all-letters automaton alphabet", config.ALL_LETTERS_MAX_ALPHABET, len(letters)
        )

    subsets: List[frozenset] = [
        frozenset(c) for n in range(len(letters) + 1) for c in combinations(letters, n)
    ]
    transitions = [
        (_subset_name(s), x, _subset_name(s | {x})) for s in subsets for x in letters
    ]
    return Dfa(
        states=[_subset_name(s) for s in subsets],
        alphabet=letters,
        initial=[_subset_name(())],
        accepting=[_subset_name(letters)],
        transitions=transitions,
    )
