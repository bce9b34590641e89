"""
Unary-alphabet fast paths.

Responsible for:
- k-piecewise testability of unary ptNFAs in polynomial time
- Membership of a^z by repeated squaring of the transition matrix
- Piecewise testability of unary NFAs via the rho-shaped minimal DFA
"""
from typing import Optional

import numpy as np

from ptnfa.exceptions import InvariantViolationError, PreconditionError
from ptnfa.models.results import KptCounterexample, Verdict, Witness
from ptnfa.models.schemas import WitnessKind
from ptnfa.services.automaton import Automaton
from ptnfa.services.operations import minimal_dfa
from ptnfa.services.order import depth
from ptnfa.services.structure import is_ptnfa
from ptnfa.utils.logging import get_logger

logger = get_logger(__name__)


def _require_unary(a: Automaton) -> str:
    if len(a.alphabet) != 1:
        raise PreconditionError(
            f"operation requires a unary alphabet, got {list(a.alphabet)}"
        )
    return a.alphabet[0]


def unary_decide_k_pt(a: Automaton, k: int) -> Verdict:
    """
    Decide k-piecewise testability of a unary ptNFA.

    With d = depth(a): true iff k >= d, or a^l is accepted exactly when a^k
    is, for every l in [k, d].

    Returns:
        Verdict; when false, the witness is the pair (a^k, a^l).

    Raises:
        PreconditionError: If a is not a unary ptNFA.
    """
    letter = _require_unary(a)
    if not is_ptnfa(a):
        raise PreconditionError("unary k-PT check requires a ptNFA")
    if k < 0:
        raise PreconditionError(f"k must be nonnegative, got {k}")

    d = depth(a)
    if k >= d:
        return Verdict(True, detail=f"k is at least the depth {d}")

    current = a.initial_ids
    for _ in range(k):
        current = a.post(current, 0)
    reference = bool(current & a.accepting_ids)
    for length in range(k + 1, d + 1):
        current = a.post(current, 0)
        if bool(current & a.accepting_ids) != reference:
            cx = KptCounterexample((letter,) * k, (letter,) * length, k)
            return Verdict(False, Witness(WitnessKind.KPT_COUNTEREXAMPLE, cx))
    return Verdict(True)


def transition_matrix(a: Automaton) -> np.ndarray:
    """Boolean adjacency matrix of the (single) letter."""
    _require_unary(a)
    matrix = np.zeros((a.num_states, a.num_states), dtype=bool)
    for p, row in enumerate(a.delta):
        for q in row[0]:
            matrix[p, q] = True
    return matrix


def _bool_product(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return (left.astype(np.int64) @ right.astype(np.int64)) > 0


def unary_membership_power(a: Automaton, z: int) -> bool:
    """
    Decide a^z in L(a) by repeated squaring of the transition matrix.

    Args:
        a: Unary automaton.
        z: Exponent, z >= 0.

    Raises:
        PreconditionError: If a is not unary or z is negative.
    """
    _require_unary(a)
    if z < 0:
        raise PreconditionError(f"exponent must be nonnegative, got {z}")

    vector = np.zeros((1, a.num_states), dtype=bool)
    vector[0, sorted(a.initial_ids)] = True
    power = transition_matrix(a)
    while z:
        if z & 1:
            vector = _bool_product(vector, power)
        z >>= 1
        if z:
            power = _bool_product(power, power)

    accepting = np.zeros(a.num_states, dtype=bool)
    accepting[sorted(a.accepting_ids)] = True
    return bool(np.any(vector[0] & accepting))


def unary_is_pt(a: Automaton, budget: Optional[int] = None) -> Verdict:
    """
    Decide piecewise testability of a unary language.

    The minimal DFA of a unary language is a path entering a cycle; the
    language is piecewise testable iff that cycle has length one.

    Returns:
        Verdict; when false, the witness is (l1, l2, l3) with a^l1 and a^l3
        leading to the same minimal DFA state and a^l2 differing from a^l1
        on acceptance, l1 < l2 < l3.

    Raises:
        PreconditionError: If a is not unary.
        ResourceExceededError: When the subset budget is exceeded.
    """
    _require_unary(a)
    m = minimal_dfa(a, budget)

    first_seen = {}
    sequence = []
    q = m.initial_id
    while q not in first_seen:
        first_seen[q] = len(sequence)
        sequence.append(q)
        q = m.next_id(q, 0)

    l1, l3 = first_seen[q], len(sequence)
    if l3 - l1 == 1:
        return Verdict(True, detail=f"minimal DFA is a chain of {len(sequence)} states")

    accepting = m.accepting_ids
    for l2 in range(l1 + 1, l3):
        if (sequence[l2] in accepting) != (sequence[l1] in accepting):
            logger.debug(f"Unary language has a cycle of length {l3 - l1}")
            return Verdict(False, Witness(WitnessKind.POWER_PATTERN, (l1, l2, l3)))
    raise InvariantViolationError("cycle of a minimal unary DFA has uniform acceptance")
