import pytest
from hypothesis import assume, given, settings

from ptnfa.exceptions import NotPiecewiseTestableError, PreconditionError
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton, Dfa, complete
from ptnfa.services.families import (
    all_letters_language_nfa,
    gen_ai,
    gen_cycle_min_dfa,
    gen_cycle_nfa,
    gen_fig1,
)
from ptnfa.services.operations import equivalent, minimal_dfa, union_automata
from ptnfa.services.order import depth, is_partially_ordered, sub_automaton
from ptnfa.services.simon import decide_k_pt, min_k
from ptnfa.services.structure import (
    depth_upper_bound_k,
    fact_two_report,
    has_ums_property,
    is_confluent_dfa,
    is_one_pt_dfa,
    is_piecewise_testable_dfa,
    is_piecewise_testable_nfa,
    is_ptnfa,
    is_two_pt_dfa,
    letter_graph,
    one_pt_sufficient_nfa,
    ptnfa_witness,
    self_loop_alphabet,
    two_pt_sufficient_nfa,
)
from tests.strategies import ptnfas


def starts_with_a() -> Dfa:
    return Dfa(
        states=["0", "1", "2"],
        alphabet=["a", "b"],
        initial=["0"],
        accepting=["1"],
        transitions=[("0", "a", "1"), ("0", "b", "2"), ("1", "a", "1"), ("1", "b", "1"),
                     ("2", "a", "2"), ("2", "b", "2")],
    )


def even_length() -> Dfa:
    return Dfa(states=["0", "1"], alphabet=["a"], initial=["0"], accepting=["0"],
               transitions=[("0", "a", "1"), ("1", "a", "0")])


def test_self_loop_alphabet_and_letter_graph():
    a = gen_fig1()
    assert self_loop_alphabet(a, "0") == {"a", "b"}
    assert self_loop_alphabet(a, "1") == {"a"}
    graph = letter_graph(a, ["a"])
    assert graph.has_edge("0", "1")
    assert not graph.has_edge("1", "2")


# -------------------- UMS VIOLATIONS --------------------

def test_fig1_is_partially_ordered_without_ums():
    a = gen_fig1()
    assert is_partially_ordered(a)
    verdict = has_ums_property(a)
    assert not verdict
    assert verdict.witness.kind == WitnessKind.UMS_VIOLATIONS
    violations = verdict.witness.value
    assert [v.state for v in violations] == ["0"]
    assert violations[0].component == {"0", "1", "2"}
    assert violations[0].maximal_states == {"2"}


def test_fig1_is_not_a_ptnfa():
    report = is_ptnfa(gen_fig1())
    assert report.partially_ordered
    assert report.complete
    assert report.ums is False
    assert not report
    assert len(report.violations) == 1


def test_fig1_is_not_piecewise_testable():
    assert not is_piecewise_testable_nfa(gen_fig1())
    with pytest.raises(NotPiecewiseTestableError) as info:
        ptnfa_witness(gen_fig1())
    assert not info.value.verdict


def test_ums_requires_partial_order():
    with pytest.raises(PreconditionError):
        has_ums_property(gen_cycle_nfa(1))


def test_ums_reachable_only():
    a = Automaton(
        states=["x", "y", "z"],
        alphabet=["a"],
        initial=["x"],
        accepting=["x"],
        transitions=[("x", "a", "x"), ("y", "a", "y"), ("y", "a", "z"), ("z", "a", "z")],
    )
    assert not has_ums_property(a)
    assert has_ums_property(a, reachable_only=True)


def test_cyclic_automaton_report():
    report = is_ptnfa(gen_cycle_nfa(1))
    assert not report.partially_ordered
    assert report.ums is None
    assert report.violations[0].kind == WitnessKind.STATE_SET


# -------------------- FAMILIES --------------------

@pytest.mark.parametrize("i", [1, 2, 3])
def test_completed_ai_is_a_ptnfa(i):
    assert is_ptnfa(complete(gen_ai(i)))
    assert depth_upper_bound_k(complete(gen_ai(i))) == i + 1


def test_cycle_nfa_language_is_piecewise_testable():
    assert is_piecewise_testable_nfa(gen_cycle_nfa(2))
    m = ptnfa_witness(gen_cycle_nfa(1))
    assert is_ptnfa(m)
    assert equivalent(m, gen_cycle_min_dfa(1))
    assert fact_two_report(gen_cycle_min_dfa(2)) == {
        "partially_ordered": True, "confluent": True, "ums": True,
    }


def test_depth_upper_bound_needs_structure():
    assert depth_upper_bound_k(gen_fig1()) is None
    assert depth_upper_bound_k(all_letters_language_nfa(["a", "b"])) == 2


# -------------------- CONFLUENCE --------------------

def test_confluence():
    assert is_confluent_dfa(all_letters_language_nfa(["a", "b"]))
    verdict = is_confluent_dfa(starts_with_a())
    assert not verdict
    assert verdict.witness.kind == WitnessKind.LETTER_CHECK
    assert verdict.witness.value == {"state": "0", "letters": ["a", "b"]}
    with pytest.raises(PreconditionError):
        is_confluent_dfa(gen_fig1())


def test_piecewise_testability_of_dfas():
    verdict = is_piecewise_testable_dfa(starts_with_a())
    assert not verdict
    assert verdict.witness.value == {"state": "0", "letters": ["a", "b"]}

    verdict = is_piecewise_testable_dfa(even_length())
    assert not verdict
    assert verdict.witness.kind == WitnessKind.STATE_SET
    assert verdict.witness.value == {"0", "1"}
    assert fact_two_report(even_length())["ums"] is None


# -------------------- 1-PT / 2-PT --------------------

def test_one_pt_dfa():
    assert is_one_pt_dfa(all_letters_language_nfa(["a", "b", "c"]))
    verdict = is_one_pt_dfa(gen_cycle_min_dfa(1))
    assert not verdict
    assert verdict.witness.value == {"state": "0", "letters": ["a"]}


def test_one_pt_sufficient_nfa():
    assert one_pt_sufficient_nfa(complete(gen_ai(0)))
    verdict = one_pt_sufficient_nfa(gen_fig1())
    assert not verdict
    assert not verdict.conclusive
    with pytest.raises(PreconditionError):
        one_pt_sufficient_nfa(gen_ai(1))


def test_two_pt_dfa():
    assert is_two_pt_dfa(all_letters_language_nfa(["a", "b"]))
    assert is_two_pt_dfa(minimal_dfa(complete(gen_ai(1))))
    assert not is_two_pt_dfa(minimal_dfa(complete(gen_ai(2))))
    with pytest.raises(PreconditionError):
        is_two_pt_dfa(even_length())


def test_two_pt_sufficient_nfa():
    assert two_pt_sufficient_nfa(complete(gen_ai(1)))
    verdict = two_pt_sufficient_nfa(complete(gen_ai(2)))
    assert not verdict
    assert not verdict.conclusive
    with pytest.raises(PreconditionError):
        two_pt_sufficient_nfa(gen_fig1())


# -------------------- RANDOM ptNFAs --------------------

@settings(max_examples=200, deadline=None)
@given(ptnfas(max_states=7, max_letters=3))
def test_random_ptnfas_are_piecewise_testable(a):
    assert is_ptnfa(a)
    m = minimal_dfa(a)
    # raises when confluence and UMS disagree
    assert is_piecewise_testable_dfa(m)
    assert fact_two_report(m) == {"partially_ordered": True, "confluent": True, "ums": True}
    assert depth_upper_bound_k(a) == depth(a)


@settings(max_examples=200, deadline=None)
@given(ptnfas(max_states=7, max_letters=3))
def test_ptnfa_is_union_of_its_initial_sub_automata(a):
    parts = [sub_automaton(a, i) for i in sorted(a.initial)]
    for part in parts:
        assert is_ptnfa(part)
    union = parts[0]
    for part in parts[1:]:
        union = union_automata(union, part)
    assert equivalent(union, a)


@settings(max_examples=200, deadline=None)
@given(ptnfas(max_states=7, max_letters=3))
def test_sufficient_conditions_are_sound(a):
    if one_pt_sufficient_nfa(a):
        assert decide_k_pt(a, 1)
    if two_pt_sufficient_nfa(a):
        assert decide_k_pt(a, 2)


@settings(max_examples=200, deadline=None)
@given(ptnfas(max_states=7, max_letters=3))
def test_one_and_two_pt_dfa_checks_match_the_decider(a):
    m = minimal_dfa(a)
    assert bool(is_one_pt_dfa(m)) == bool(decide_k_pt(a, 1))
    assert bool(is_two_pt_dfa(m)) == bool(decide_k_pt(a, 2))


@settings(max_examples=200, deadline=None)
@given(ptnfas(max_states=7, max_letters=3))
def test_least_k_is_bounded_by_the_depth_and_exact(a):
    d = depth(a)
    # ~k classes over three letters explode beyond k = 3
    assume(len(a.alphabet) < 3 or d <= 3)
    k = min_k(a)
    assert k <= d
    assert decide_k_pt(a, d)
    assert decide_k_pt(a, k)
    if k > 0:
        assert not decide_k_pt(a, k - 1)
