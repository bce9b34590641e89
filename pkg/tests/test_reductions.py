from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptnfa.exceptions import AutomatonInputError, PreconditionError, ResourceExceededError
from ptnfa.models.schemas import CnfFormula, ThreeCnfFormula
from ptnfa.services.automaton import Automaton, accepts, complete
from ptnfa.services.families import all_letters_language_nfa, gen_ai, gen_example_l, gen_fig1
from ptnfa.services.operations import is_universal, minimal_dfa
from ptnfa.services.order import depth
from ptnfa.services.reductions import (
    brute_force_sat,
    cnf3_to_unary_nfa,
    cnf_to_ptnfa,
    crt_offset,
    lift_counterexample,
    lift_counterexample_fixed,
    lift_k,
    lift_k_fixed,
)
from ptnfa.services.simon import decide_k_pt, is_valid_counterexample, min_k
from ptnfa.services.structure import is_ptnfa
from ptnfa.services.unary import unary_is_pt
from tests.strategies import cnf_formulas


def universal(alphabet) -> Automaton:
    return Automaton(states=["0"], alphabet=alphabet, initial=["0"], accepting=["0"],
                     transitions=[("0", x, "0") for x in alphabet])


def contains(letter: str, alphabet) -> Automaton:
    return Automaton(
        states=["0", "1"],
        alphabet=alphabet,
        initial=["0"],
        accepting=["1"],
        transitions=[("0", x, "1" if x == letter else "0") for x in alphabet]
        + [("1", x, "1") for x in alphabet],
    )


# -------------------- SAT --------------------

def test_brute_force_sat():
    phi = CnfFormula(num_vars=2, clauses=[{1}, {-1, 2}])
    assert brute_force_sat(phi) == {1: True, 2: True}
    assert brute_force_sat(CnfFormula(num_vars=2, clauses=[{1}, {-1, 2}, {-2}])) is None
    assert brute_force_sat(CnfFormula(num_vars=1)) == {1: False}


# -------------------- CNF -> ptNFA --------------------

@settings(max_examples=100, deadline=None)
@given(cnf_formulas(max_vars=4, max_clauses=4))
def test_cnf_to_ptnfa_is_universal_iff_unsatisfiable(phi):
    a = cnf_to_ptnfa(phi)
    assert is_ptnfa(a)
    verdict = is_universal(a)
    assert bool(verdict) == (brute_force_sat(phi) is None)
    if not verdict:
        w = verdict.witness.value
        assert len(w) == phi.num_vars
        assert phi.evaluate({j + 1: letter == "1" for j, letter in enumerate(w)})


@settings(max_examples=100, deadline=None)
@given(cnf_formulas(max_vars=4, max_clauses=4))
def test_cnf_to_ptnfa_rejects_exactly_the_satisfying_words(phi):
    a = cnf_to_ptnfa(phi)
    for w in product("01", repeat=phi.num_vars):
        assignment = {j + 1: letter == "1" for j, letter in enumerate(w)}
        assert accepts(a, w) != phi.evaluate(assignment)
    if brute_force_sat(phi) is None:
        assert min_k(a) == 0
    else:
        assert not decide_k_pt(a, 0)


def test_cnf_to_ptnfa_shape():
    phi = CnfFormula(num_vars=2, clauses=[{1, -2}])
    a = cnf_to_ptnfa(phi)
    assert a.alphabet == ("0", "1")
    assert a.initial == {"0"}
    assert "alpha2" not in a.accepting
    assert "q1.2" in a.accepting
    assert a.successors("0", "0") == {"q1.1", "alpha1"}
    assert a.successors("q1.1", "0") == {"r1"}


# -------------------- LIFTS --------------------

@pytest.mark.parametrize("seed, expected", [
    (universal(["a"]), 0),
    (contains("a", ["a", "b"]), 1),
    (all_letters_language_nfa(["a", "b"]), 1),
    (minimal_dfa(gen_example_l()), 2),
    (complete(gen_ai(1)), 2),
])
def test_lift_k_raises_the_least_k_by_one(seed, expected):
    assert min_k(seed) == expected
    lifted = lift_k(seed)
    assert is_ptnfa(lifted)
    assert "z" in lifted.alphabet
    assert depth(lifted) == depth(seed) + 1
    assert min_k(lifted) == expected + 1


@pytest.mark.parametrize("seed", [
    contains("a", ["a", "b"]),
    minimal_dfa(gen_example_l()),
    complete(gen_ai(1)),
])
def test_lift_counterexample(seed):
    k = min_k(seed) - 1
    cx = decide_k_pt(seed, k).witness.value
    lifted = lift_counterexample(seed, cx)
    assert lifted.k == k + 1
    assert is_valid_counterexample(lift_k(seed), lifted)


def test_lift_k_names():
    lifted = lift_k(universal(["a"]))
    assert lifted.initial == {"0'"}
    assert lifted.successors("0'", "z") == {"0"}
    assert lifted.successors("0'", "a") == {"0'"}
    assert lifted.successors("0", "z") == {"0"}


def test_lift_k_errors():
    with pytest.raises(PreconditionError):
        lift_k(gen_fig1())
    with pytest.raises(AutomatonInputError):
        lift_k(universal(["a"]), letter="a")
    clash = Automaton(states=["0", "0'"], alphabet=["a"], initial=["0"], accepting=["0"],
                      transitions=[("0", "a", "0"), ("0'", "a", "0'")])
    with pytest.raises(AutomatonInputError):
        lift_k(clash)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lift_k_fixed_reduces_zero_pt(k):
    yes = lift_k_fixed(universal(["a"]), k)
    assert is_ptnfa(yes)
    assert decide_k_pt(yes, k)
    assert not decide_k_pt(yes, k - 1)

    no = lift_k_fixed(contains("b", ["b"]), k)
    assert is_ptnfa(no)
    assert not decide_k_pt(no, k)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lift_counterexample_fixed(k):
    seed = contains("b", ["b"])
    cx = decide_k_pt(seed, 0).witness.value
    lifted = lift_counterexample_fixed(seed, cx, k)
    assert lifted.k == k
    assert is_valid_counterexample(lift_k_fixed(seed, k), lifted)
    with pytest.raises(PreconditionError):
        lift_counterexample_fixed(seed, lifted, k)


def test_lift_k_fixed_chain():
    lifted = lift_k_fixed(universal(["a"]), 2, letter="x")
    assert lifted.initial == {"0'1"}
    assert lifted.successors("0'1", "x") == {"0'2"}
    assert lifted.successors("0'2", "x") == {"0"}
    with pytest.raises(PreconditionError):
        lift_k_fixed(universal(["a"]), 0)


# -------------------- UNARY 3CNF --------------------

def test_crt_offset():
    assert crt_offset([(2, 1), (3, 2)]) == 5
    assert crt_offset([(3, 0), (5, 1)]) == 6
    assert crt_offset([]) == 0
    with pytest.raises(AutomatonInputError):
        crt_offset([(2, 0), (4, 1)])
    with pytest.raises(AutomatonInputError):
        crt_offset([(3, 3)])


SIGN_PATTERNS = [
    {s1 * 1, s2 * 2, s3 * 3} for s1, s2, s3 in product((1, -1), repeat=3)
]


@pytest.mark.slow
def test_cnf3_reduction_on_every_clause_set_over_three_variables():
    for mask in range(2 ** len(SIGN_PATTERNS)):
        clauses = [c for bit, c in enumerate(SIGN_PATTERNS) if mask >> bit & 1]
        phi = ThreeCnfFormula(num_vars=3, clauses=clauses)
        a = cnf3_to_unary_nfa(phi)
        assert bool(is_universal(a)) == (brute_force_sat(phi) is None)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** len(SIGN_PATTERNS) - 1))
def test_cnf3_reduction_is_periodic_unless_unsatisfiable(mask):
    clauses = [c for bit, c in enumerate(SIGN_PATTERNS) if mask >> bit & 1]
    phi = ThreeCnfFormula(num_vars=3, clauses=clauses)
    a = cnf3_to_unary_nfa(phi)
    if brute_force_sat(phi) is None:
        assert min_k(a) == 0
    else:
        # the residue classes of a satisfying assignment stay rejected
        assert not unary_is_pt(a)


def test_cnf3_reduction_small_cases():
    unsat = ThreeCnfFormula(num_vars=3, clauses=SIGN_PATTERNS)
    assert is_universal(cnf3_to_unary_nfa(unsat))
    sat = ThreeCnfFormula(num_vars=3, clauses=SIGN_PATTERNS[1:])
    assert not is_universal(cnf3_to_unary_nfa(sat))
    assert not is_universal(cnf3_to_unary_nfa(CnfFormula(num_vars=1)))


def test_cnf3_reduction_errors():
    with pytest.raises(AutomatonInputError):
        cnf3_to_unary_nfa(CnfFormula(num_vars=3, clauses=[{1, 2}]))
    with pytest.raises(ResourceExceededError):
        cnf3_to_unary_nfa(ThreeCnfFormula(num_vars=5, clauses=[{1, 2, 3}]))
    assert cnf3_to_unary_nfa(
        ThreeCnfFormula(num_vars=5, clauses=[{1, 2, 3}]), prime_cap=5
    ).alphabet == ("a",)
