"""
Simon congruence and k-piecewise testability.

Responsible for:
- Subsequence embedding, sub_k sets and the ~k congruence
- The canonical ~k automaton (built lazily)
- Deciding k-piecewise testability with re-checkable counterexamples
- The least k search and the closed-form bounds
"""
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ptnfa import config
from ptnfa.exceptions import AutomatonInputError, ResourceExceededError
from ptnfa.models.results import KptCounterexample, Verdict, Witness
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton, Dfa, accepts, complete
from ptnfa.services.operations import minimal_dfa, shortest_distinguishing_suffix
from ptnfa.services.order import depth
from ptnfa.services.structure import is_piecewise_testable_dfa, is_ptnfa
from ptnfa.utils.logging import get_logger, log_progress
from ptnfa.utils.words import Word

logger = get_logger(__name__)

WordSet = FrozenSet[Word]


def shortlex_key(word: Word) -> Tuple[int, Word]:
    return (len(word), word)


@dataclass(frozen=True)
class SubkSet:
    """
    The set sub_k(w) of subsequences of length at most k.

    Also the state of the canonical ~k automaton.
    """
    k: int
    words: WordSet

    def shortlex(self) -> List[Word]:
        """Members in shortlex order."""
        return sorted(self.words, key=shortlex_key)

    def __contains__(self, word: Sequence[str]) -> bool:
        return tuple(word) in self.words

    def __len__(self) -> int:
        return len(self.words)


def _check_k(k: int) -> None:
    if k < 0:
        raise AutomatonInputError(f"k must be nonnegative, got {k}")


def _extend(words: WordSet, letter: str, k: int) -> WordSet:
    """sub_k(w a) computed from sub_k(w)."""
    added = {u + (letter,) for u in words if len(u) < k}
    if added <= words:
        return words
    return words | added


class SubkCodec:
    """
    Bitset encoding of sub_k sets over a fixed alphabet.

    Words of length l occupy a block of n^l bits; the word c_1..c_l has
    position sum(c_j * n^(j-1)) inside its block, so appending letter x to
    every word of block l is a single shift by x * n^l into block l + 1.
    """

    def __init__(self, alphabet: Iterable[str], k: int):
        _check_k(k)
        self.letters = tuple(sorted(set(alphabet)))
        self.k = k
        n = len(self.letters)
        self.sizes = [n ** length for length in range(k + 1)]
        self.offsets = [0]
        for size in self.sizes[:-1]:
            self.offsets.append(self.offsets[-1] + size)
        self.masks = [(1 << size) - 1 for size in self.sizes]
        self.empty_word = 1

    def step(self, code: int, x: int) -> int:
        """Code of sub_k(w a_x) from the code of sub_k(w)."""
        result = code
        for length in range(self.k):
            block = (code >> self.offsets[length]) & self.masks[length]
            if block:
                result |= block << (self.offsets[length + 1] + x * self.sizes[length])
        return result

    def decode(self, code: int) -> SubkSet:
        words = set()
        for length in range(self.k + 1):
            block = (code >> self.offsets[length]) & self.masks[length]
            position = 0
            while block:
                if block & 1:
                    digits, rest = [], position
                    for _ in range(length):
                        rest, digit = divmod(rest, len(self.letters))
                        digits.append(self.letters[digit])
                    words.add(tuple(digits))
                block >>= 1
                position += 1
        return SubkSet(self.k, frozenset(words))


# -------------------- EMBEDDING --------------------

def is_subsequence(u: Sequence[str], w: Sequence[str]) -> bool:
    """True iff u embeds into w (greedy left-to-right)."""
    remaining = iter(w)
    return all(letter in remaining for letter in u)


def sub_k(w: Iterable[str], k: int) -> SubkSet:
    """
    Compute sub_k(w).

    Raises:
        AutomatonInputError: If k is negative.
    """
    _check_k(k)
    words: WordSet = frozenset({()})
    for letter in w:
        words = _extend(words, letter, k)
    return SubkSet(k, words)


def sim_k_equivalent(u: Sequence[str], v: Sequence[str], k: int) -> bool:
    """u ~k v, i.e. sub_k(u) = sub_k(v)."""
    return sub_k(u, k).words == sub_k(v, k).words


def canonical_step(state: SubkSet, letter: str) -> SubkSet:
    """Transition of the canonical ~k automaton: sub_k(w) -> sub_k(w a)."""
    return SubkSet(state.k, _extend(state.words, letter, state.k))


def full_sub_k(alphabet: Iterable[str], k: int) -> SubkSet:
    """The set of all words of length at most k over the alphabet."""
    _check_k(k)
    letters = sorted(set(alphabet))
    words = {word for n in range(k + 1) for word in product(letters, repeat=n)}
    return SubkSet(k, frozenset(words))


def saturating_word(alphabet: Iterable[str], k: int) -> Word:
    """
    A word containing every word of length at most k as a subsequence:
    the sorted alphabet repeated k times.
    """
    _check_k(k)
    return tuple(sorted(set(alphabet))) * k


def canonical_k_automaton(
    alphabet: Iterable[str],
    k: int,
    budget: Optional[int] = None
) -> Tuple[Dfa, List[SubkSet]]:
    """
    Materialize the reachable canonical ~k automaton.

    States are named "0", "1", ... in breadth-first order over sorted
    letters; no state is accepting.

    Returns:
        Tuple of (dfa, classes) where classes[i] is the sub_k set of state "i".

    Raises:
        ResourceExceededError: When more states than the budget are reached.
    """
    _check_k(k)
    budget = config.PRODUCT_STATE_BUDGET if budget is None else budget
    codec = SubkCodec(alphabet, k)
    if not codec.letters:
        raise AutomatonInputError("alphabet must be nonempty")

    start = codec.empty_word
    index = {start: 0}
    order = [start]
    table = []
    position = 0
    while position < len(order):
        current = order[position]
        row = []
        for x in range(len(codec.letters)):
            target = codec.step(current, x)
            if target not in index:
                if len(order) >= budget:
                    raise ResourceExceededError(
                        "canonical ~k automaton exceeded its budget", budget, len(order) + 1
                    )
                index[target] = len(order)
                order.append(target)
            row.append((index[target],))
        table.append(row)
        position += 1

    dfa = Dfa.from_indexed([str(i) for i in range(len(order))], codec.letters, [0], [], table)
    return dfa, [codec.decode(code) for code in order]


# -------------------- ORACLES --------------------

def iter_words(alphabet: Iterable[str], max_length: int) -> Iterator[Word]:
    """All words up to max_length in shortlex order."""
    letters = sorted(set(alphabet))
    for n in range(max_length + 1):
        yield from product(letters, repeat=n)


def sim_k_classes(alphabet: Iterable[str], k: int, max_length: int) -> Dict[SubkSet, Word]:
    """
    ~k classes met by words up to max_length, each with its shortlex-least
    representative.
    """
    classes: Dict[SubkSet, Word] = {}
    for word in iter_words(alphabet, max_length):
        classes.setdefault(sub_k(word, k), word)
    return classes


def exhaustive_k_pt_oracle(a: Automaton, k: int, max_length: int) -> Verdict:
    """
    Check ~k-saturation of L(a) directly on all words up to max_length.

    Returns:
        Verdict; false with a KptCounterexample when two ~k-equivalent words
        up to max_length disagree on membership.
    """
    representative: Dict[WordSet, Tuple[Word, bool]] = {}
    for word in iter_words(a.alphabet, max_length):
        key = sub_k(word, k).words
        accepted = accepts(a, word)
        if key not in representative:
            representative[key] = (word, accepted)
        elif representative[key][1] != accepted:
            cx = KptCounterexample(representative[key][0], word, k)
            return Verdict(False, Witness(WitnessKind.KPT_COUNTEREXAMPLE, cx))
    return Verdict(True)


def is_valid_counterexample(a: Automaton, cx: KptCounterexample) -> bool:
    """True iff u ~k v and exactly one of them is accepted."""
    return sim_k_equivalent(cx.u, cx.v, cx.k) and accepts(a, cx.u) != accepts(a, cx.v)


# -------------------- DECIDERS --------------------

def _path(parents: Dict, key, alphabet: Sequence[str]) -> Word:
    letters = []
    while parents[key] is not None:
        key, x = parents[key]
        letters.append(alphabet[x])
    return tuple(reversed(letters))


def decide_on_minimal(d: Dfa, k: int, budget: Optional[int] = None) -> Verdict:
    """
    Decide k-piecewise testability of the language of a minimal total DFA.

    Explores the product of the canonical ~k automaton with d breadth-first,
    letters in sorted order. The language is k-PT iff no canonical state
    meets two distinct DFA states.

    Raises:
        ResourceExceededError: When the product exceeds the budget.
    """
    _check_k(k)
    budget = config.PRODUCT_STATE_BUDGET if budget is None else budget
    table = d.table()
    letters = range(len(d.alphabet))
    codec = SubkCodec(d.alphabet, k)

    start = (codec.empty_word, d.initial_id)
    parents = {start: None}
    paired_with: Dict[int, int] = {start[0]: start[1]}
    queue = deque([start])
    while queue:
        code, q = queue.popleft()
        for x in letters:
            nxt = (codec.step(code, x), table[q][x])
            if nxt in parents:
                continue
            parents[nxt] = ((code, q), x)
            first = paired_with.setdefault(nxt[0], nxt[1])
            if first != nxt[1]:
                return _clash(d, k, parents, (nxt[0], first), nxt)
            if len(parents) > budget:
                raise ResourceExceededError(
                    "k-PT product exploration exceeded its budget", budget, len(parents)
                )
            log_progress(logger, len(parents), prefix=f"{k}-PT product")
            queue.append(nxt)

    logger.debug(f"Language is {k}-PT ({len(parents)} product states)")
    return Verdict(True)


def _clash(d: Dfa, k: int, parents: Dict, earlier, later) -> Verdict:
    u = _path(parents, earlier, d.alphabet)
    v = _path(parents, later, d.alphabet)
    suffix = shortest_distinguishing_suffix(d, earlier[1], later[1])
    cx = KptCounterexample(u + suffix, v + suffix, k)
    logger.debug(f"Not {k}-PT: {cx}")
    return Verdict(False, Witness(WitnessKind.KPT_COUNTEREXAMPLE, cx))


def decide_k_pt(a: Automaton, k: int, budget: Optional[int] = None) -> Verdict:
    """
    Decide whether L(a) is k-piecewise testable.

    Args:
        a: Automaton.
        k: Nonnegative integer.
        budget: Product state budget (config.PRODUCT_STATE_BUDGET if None).

    Returns:
        Verdict; when false, the witness is a KptCounterexample (u, v, k)
        with u ~k v and exactly one of them in L(a).

    Raises:
        ResourceExceededError: When the product exceeds the budget.
    """
    return decide_on_minimal(minimal_dfa(a), k, budget)


def counterexample_pair(
    a: Automaton,
    k: int,
    budget: Optional[int] = None
) -> Optional[KptCounterexample]:
    """The counterexample of decide_k_pt, or None when L(a) is k-PT."""
    verdict = decide_k_pt(a, k, budget)
    return None if verdict else verdict.witness.value


def _completed(a: Automaton) -> Automaton:
    """Completion of a with a sink name not already taken."""
    sink = config.DEFAULT_SINK_NAME
    while sink in a.states:
        sink += "'"
    return complete(a, sink)


def min_k(
    a: Automaton,
    max_k: Optional[int] = None,
    budget: Optional[int] = None
) -> Optional[int]:
    """
    Least k such that L(a) is k-piecewise testable.

    Probes k = 0, 1, ... below the cap min(depth of the minimal DFA,
    depth of the completion of a when that completion is a ptNFA); the cap
    itself is always a valid k.

    Args:
        a: Automaton.
        max_k: Give up above this k.
        budget: Product state budget per decision.

    Returns:
        The least k, or None if L(a) is not piecewise testable.

    Raises:
        ResourceExceededError: When the answer exceeds max_k or a single decision
            exceeds the budget.
    """
    d = minimal_dfa(a)
    if not is_piecewise_testable_dfa(d):
        return None

    cap = depth(d)
    c = _completed(a)
    if is_ptnfa(c):
        cap = min(cap, depth(c))
    logger.debug(f"min_k: searching below cap {cap}")

    for k in range(cap):
        if max_k is not None and k > max_k:
            break
        if decide_on_minimal(d, k, budget):
            return k

    if max_k is not None and cap > max_k:
        raise ResourceExceededError("least k exceeds the requested maximum", max_k, cap)
    return cap


# -------------------- BOUNDS --------------------

def binomial_depth_bound(k: int, n: int) -> int:
    """
    C(k + n, k) - 1: maximal depth of the minimal DFA of a k-PT language over
    n letters.

    Raises:
        AutomatonInputError: On a negative argument.
    """
    if k < 0 or n < 0:
        raise AutomatonInputError(f"k and n must be nonnegative, got k={k}, n={n}")
    return math.comb(k + n, k) - 1


def fixed_alphabet_rep_bound(k: int, c: int) -> int:
    """
    Ceiling of ((k + 2c - 1) / c)^c, a length bound for shortest ~k class
    representatives over c letters.

    Raises:
        AutomatonInputError: If c < 1 or k < 0.
    """
    _check_k(k)
    if c < 1:
        raise AutomatonInputError(f"alphabet size must be positive, got {c}")
    return math.ceil(Fraction(k + 2 * c - 1, c) ** c)
