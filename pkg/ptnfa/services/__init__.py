"""Services package for ptnfa."""

# Automata core
from ptnfa.services.automaton import (
    Automaton,
    Dfa,
    accepts,
    as_dfa,
    complete,
    is_complete,
    rename_states,
    step,
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
from ptnfa.services.order import (
    depth,
    is_partially_ordered,
    reachable_states,
    state_graph,
    sub_automaton,
    trim,
)

# Structure
from ptnfa.services.structure import (
    depth_upper_bound_k,
    has_ums_property,
    is_confluent_dfa,
    is_one_pt_dfa,
    is_piecewise_testable_dfa,
    is_piecewise_testable_nfa,
    is_ptnfa,
    is_two_pt_dfa,
    one_pt_sufficient_nfa,
    ptnfa_witness,
    two_pt_sufficient_nfa,
)

# Simon congruence
from ptnfa.services.simon import (
    SubkSet,
    binomial_depth_bound,
    canonical_k_automaton,
    decide_k_pt,
    fixed_alphabet_rep_bound,
    min_k,
    sim_k_equivalent,
    sub_k,
)
from ptnfa.services.unary import unary_decide_k_pt, unary_is_pt, unary_membership_power

# Families and reductions
from ptnfa.services.families import (
    all_letters_language_nfa,
    gen_ai,
    gen_bi,
    gen_cycle_min_dfa,
    gen_cycle_nfa,
    gen_example_l,
    gen_example_llr,
    gen_fig1,
    gen_wi,
)
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

# Documents
from ptnfa.services.parser import (
    load_automaton,
    parse_automaton,
    parse_dimacs,
    save_automaton,
    serialize_automaton,
    to_dot,
)

__all__ = [
    # Automata core
    "Automaton",
    "Dfa",
    "accepts",
    "as_dfa",
    "complete",
    "is_complete",
    "rename_states",
    "step",
    "complement_dfa",
    "concat_automata",
    "determinize",
    "equivalent",
    "intersect_automata",
    "inverse_projection",
    "is_empty_language",
    "is_universal",
    "minimal_dfa",
    "minimize",
    "parallel_compose",
    "reverse",
    "shortest_distinguishing_suffix",
    "subset_construction",
    "union_automata",
    "depth",
    "is_partially_ordered",
    "reachable_states",
    "state_graph",
    "sub_automaton",
    "trim",
    # Structure
    "depth_upper_bound_k",
    "has_ums_property",
    "is_confluent_dfa",
    "is_one_pt_dfa",
    "is_piecewise_testable_dfa",
    "is_piecewise_testable_nfa",
    "is_ptnfa",
    "is_two_pt_dfa",
    "one_pt_sufficient_nfa",
    "ptnfa_witness",
    "two_pt_sufficient_nfa",
    # Simon congruence
    "SubkSet",
    "binomial_depth_bound",
    "canonical_k_automaton",
    "decide_k_pt",
    "fixed_alphabet_rep_bound",
    "min_k",
    "sim_k_equivalent",
    "sub_k",
    "unary_decide_k_pt",
    "unary_is_pt",
    "unary_membership_power",
    # Families and reductions
    "all_letters_language_nfa",
    "gen_ai",
    "gen_bi",
    "gen_cycle_min_dfa",
    "gen_cycle_nfa",
    "gen_example_l",
    "gen_example_llr",
    "gen_fig1",
    "gen_wi",
    "brute_force_sat",
    "cnf3_to_unary_nfa",
    "cnf_to_ptnfa",
    "crt_offset",
    "lift_counterexample",
    "lift_counterexample_fixed",
    "lift_k",
    "lift_k_fixed",
    # Documents
    "load_automaton",
    "parse_automaton",
    "parse_dimacs",
    "save_automaton",
    "serialize_automaton",
    "to_dot",
]
