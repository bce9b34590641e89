import pytest
from hypothesis import given, settings

from ptnfa.exceptions import AutomatonInputError, PreconditionError, ResourceExceededError
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton, Dfa, accepts
from ptnfa.services.families import (
    all_letters_language_nfa,
    gen_cycle_min_dfa,
    gen_cycle_nfa,
    gen_example_l,
    gen_fig1,
)
from ptnfa.services.operations import (
    complement_dfa,
    concat_automata,
    determinize,
    equivalent,
    intersect_automata,
    inverse_projection,
    is_empty_language,
    is_universal,
    minimal_dfa,
    minimize,
    parallel_compose,
    reverse,
    shortest_distinguishing_suffix,
    subset_construction,
    union_automata,
)
from ptnfa.services.order import depth
from ptnfa.services.simon import iter_words
from tests.strategies import nfas, words


def contains(letter: str, alphabet) -> Automaton:
    """Words over `alphabet` containing `letter`."""
    return Automaton(
        states=["0", "1"],
        alphabet=alphabet,
        initial=["0"],
        accepting=["1"],
        transitions=[("0", x, "1" if x == letter else "0") for x in alphabet]
        + [("1", x, "1") for x in alphabet],
    )


def universal(alphabet) -> Automaton:
    return Automaton(states=["0"], alphabet=alphabet, initial=["0"], accepting=["0"],
                     transitions=[("0", x, "0") for x in alphabet])


def member(a: Automaton, word) -> bool:
    """Membership that rejects letters outside the alphabet."""
    return set(word) <= set(a.alphabet) and accepts(a, word)


# -------------------- RATIONAL OPERATIONS --------------------

def test_reverse_example_l():
    r = reverse(gen_example_l())
    assert accepts(r, "bba")
    assert accepts(r, "abac")
    assert not accepts(r, "abb")


def test_reverse_of_empty_language_stays_empty():
    a = Automaton(states=["0", "1"], alphabet=["a"], initial=["0"], accepting=[],
                  transitions=[("0", "a", "1")])
    assert is_empty_language(reverse(a))


@settings(max_examples=50, deadline=None)
@given(nfas(max_states=4, max_letters=2))
def test_double_reverse_keeps_language(a):
    assert equivalent(reverse(reverse(a)), a)


@settings(max_examples=100, deadline=None)
@given(nfas(max_states=4, max_letters=2), words("ab", 6))
def test_reverse_reads_words_backwards(a, w):
    assert member(reverse(a), w[::-1]) == member(a, w)


def test_concat_example_l_with_its_reverse():
    example = gen_example_l()
    llr = concat_automata(example, reverse(example))
    assert accepts(llr, "abba")
    assert accepts(llr, "aa")
    assert accepts(llr, "cc")
    assert not accepts(llr, "a")
    assert not accepts(llr, "")


def test_concat_with_empty_word_operands():
    eps = Automaton(states=["0"], alphabet=["a"], initial=["0"], accepting=["0"])
    a = contains("a", ["a"])
    assert equivalent(concat_automata(eps, a), a)
    assert equivalent(concat_automata(a, eps), a)


def test_union_merges_alphabets():
    u = union_automata(gen_fig1(), gen_example_l())
    assert u.alphabet == ("a", "b", "c")
    assert accepts(u, "c")
    assert accepts(u, "aba")
    assert not accepts(u, "b")


@settings(max_examples=30, deadline=None)
@given(nfas(max_states=3, max_letters=3), nfas(max_states=3, max_letters=3))
def test_concat_and_union_match_enumeration(a, b):
    cat = concat_automata(a, b)
    both = union_automata(a, b)
    for w in iter_words(set(a.alphabet) | set(b.alphabet), 6):
        split = any(member(a, w[:i]) and member(b, w[i:]) for i in range(len(w) + 1))
        assert member(cat, w) == split
        assert member(both, w) == (member(a, w) or member(b, w))


def test_intersection():
    both = intersect_automata(gen_fig1(), all_letters_language_nfa(["a", "b"]))
    assert accepts(both, "aba")
    assert not accepts(both, "a")
    assert not accepts(both, "ab")


@settings(max_examples=50, deadline=None)
@given(nfas(max_states=3, max_letters=2), nfas(max_states=3, max_letters=2))
def test_intersection_is_conjunction(a, b):
    product = intersect_automata(a, b)
    for w in iter_words(product.alphabet, 4):
        assert accepts(product, w) == (member(a, w) and member(b, w))


def test_inverse_projection():
    p = inverse_projection(gen_example_l(), ["a", "b", "c", "d"])
    assert accepts(p, "adb")
    assert accepts(p, "dcd")
    assert not accepts(p, "d")
    with pytest.raises(AutomatonInputError):
        inverse_projection(gen_example_l(), ["a", "b"])


def test_parallel_compose():
    p = parallel_compose([contains("a", ["a"]), contains("b", ["b"])])
    assert p.alphabet == ("a", "b")
    assert accepts(p, "ab")
    assert accepts(p, "ba")
    assert not accepts(p, "aa")
    with pytest.raises(AutomatonInputError):
        parallel_compose([])


# -------------------- DETERMINIZATION --------------------

def test_determinize_fig1():
    d = determinize(gen_fig1())
    assert isinstance(d, Dfa)
    assert d.initial == {"0"}
    assert d.states == tuple(str(i) for i in range(d.num_states))
    assert equivalent(d, gen_fig1())


def test_subset_construction_reports_subsets():
    d, subsets = subset_construction(gen_fig1())
    assert subsets[0] == frozenset({0})
    assert len(subsets) == d.num_states


def test_subset_budget():
    with pytest.raises(ResourceExceededError) as info:
        subset_construction(gen_fig1(), budget=1)
    assert info.value.budget == 1


def test_minimize_all_letters():
    m = minimal_dfa(all_letters_language_nfa(["a", "b"]))
    assert m.num_states == 4
    assert minimize(m) == m


def test_minimal_dfa_of_cycle_nfa_is_a_chain():
    m = minimal_dfa(gen_cycle_nfa(2))
    assert m.num_states == 6
    assert equivalent(m, gen_cycle_min_dfa(2))


def test_minimize_requires_total_dfa():
    with pytest.raises(PreconditionError):
        minimize(gen_fig1())


@settings(max_examples=50, deadline=None)
@given(nfas(max_states=4, max_letters=2))
def test_minimal_dfa_is_canonical(a):
    m = minimal_dfa(a)
    assert equivalent(m, a)
    assert minimal_dfa(reverse(reverse(a))) == m
    assert m.num_states <= determinize(a).num_states


@settings(max_examples=50, deadline=None)
@given(nfas(max_states=4, max_letters=2))
def test_minimized_states_are_pairwise_distinguishable(a):
    d = determinize(a)
    m = minimize(d)
    for p in range(m.num_states):
        for q in range(p + 1, m.num_states):
            assert shortest_distinguishing_suffix(m, p, q) is not None
    assert depth(m) <= depth(d)


def test_complement():
    d = gen_cycle_min_dfa(1)
    c = complement_dfa(d)
    for w in iter_words(["a"], 6):
        assert accepts(c, w) != accepts(d, w)


# -------------------- WORD SEARCHES --------------------

def test_equivalent_cycle_families():
    for i in range(1, 5):
        assert equivalent(gen_cycle_nfa(i), gen_cycle_min_dfa(i))


def test_equivalence_witness_is_shortest():
    verdict = equivalent(gen_cycle_min_dfa(1), gen_cycle_min_dfa(2))
    assert not verdict
    assert verdict.witness.kind == WitnessKind.WORD
    assert verdict.witness.value == ("a",)


@settings(max_examples=50, deadline=None)
@given(nfas(max_states=3, max_letters=2), nfas(max_states=3, max_letters=2))
def test_equivalence_matches_short_words(a, b):
    verdict = equivalent(a, b)
    letters = set(a.alphabet) | set(b.alphabet)
    if verdict:
        assert all(member(a, w) == member(b, w) for w in iter_words(letters, 4))
    else:
        w = verdict.witness.value
        assert member(a, w) != member(b, w)


def test_shortest_distinguishing_suffix():
    d = gen_cycle_min_dfa(1)
    assert shortest_distinguishing_suffix(d, 0, 2) == ("a", "a")
    assert shortest_distinguishing_suffix(d, 3, 3) is None


def test_emptiness():
    verdict = is_empty_language(gen_fig1())
    assert not verdict
    assert verdict.witness.value == ("a",)
    empty = Automaton(states=["0"], alphabet=["a"], initial=["0"], accepting=[],
                      transitions=[("0", "a", "0")])
    assert is_empty_language(empty)


def test_universality():
    verdict = is_universal(gen_fig1())
    assert not verdict
    assert verdict.witness.value == ()
    assert not accepts(gen_fig1(), "ab")
    assert is_universal(universal(["a", "b"]))
    assert is_universal(contains("a", ["a", "b"])).witness.value == ()
