"""
Reduction constructions.

Responsible for:
- CNF formula -> ptNFA whose universality is unsatisfiability
- Lifting a ptNFA one k-PT level up (fresh letter per level, or one letter
  with a chain of k states), together with its counterexamples
- Chinese remainder offsets and the 3CNF -> unary NFA construction
- A brute-force SAT oracle
"""
import math
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ptnfa import config
from ptnfa.exceptions import AutomatonInputError, PreconditionError, ResourceExceededError
from ptnfa.models.results import KptCounterexample
from ptnfa.models.schemas import CnfFormula, ThreeCnfFormula
from ptnfa.services.automaton import Automaton
from ptnfa.services.simon import saturating_word
from ptnfa.services.structure import is_ptnfa
from ptnfa.utils.logging import get_logger

logger = get_logger(__name__)

Triple = Tuple[str, str, str]


def brute_force_sat(phi: CnfFormula) -> Optional[Dict[int, bool]]:
    """
    A satisfying assignment found by enumeration, or None if unsatisfiable.

    Assignments are tried in the order of product((False, True), ...).
    """
    variables = range(1, phi.num_vars + 1)
    for values in product((False, True), repeat=phi.num_vars):
        assignment = dict(zip(variables, values))
        if phi.evaluate(assignment):
            return assignment
    return None


# -------------------- CNF -> ptNFA --------------------

def cnf_to_ptnfa(phi: CnfFormula) -> Automaton:
    """
    ptNFA over {0, 1} accepting every word of length other than n and the
    length-n words that falsify some clause (1 = true).

    Clause i contributes a deterministic path 0 -> qi.1 -> ... -> qi.n whose
    j-th letter must make the literal on x_j false (both letters when x_j is
    absent). The alpha path counts length up to n + 1; the r chain absorbs
    the missing path transitions.

    Returns:
        An automaton that is universal iff phi is unsatisfiable.
    """
    n = phi.num_vars
    letters = ("0", "1")
    alphas = [f"alpha{l}" for l in range(1, n + 2)]
    rs = [f"r{l}" for l in range(1, n + 1)]
    states = ["0"]
    transitions: List[Triple] = []

    for i, clause in enumerate(phi.clauses, start=1):
        path = ["0"] + [f"q{i}.{j}" for j in range(1, n + 1)]
        states += path[1:]
        for j in range(1, n + 1):
            if j in clause:
                allowed = ("0",)
            elif -j in clause:
                allowed = ("1",)
            else:
                allowed = letters
            for letter in allowed:
                transitions.append((path[j - 1], letter, path[j]))
            if j > 1:
                transitions += [(path[j - 1], x, rs[0]) for x in letters if x not in allowed]
        transitions += [(path[-1], x, rs[0]) for x in letters]

    chain = ["0"] + alphas
    for p, q in zip(chain, chain[1:]):
        transitions += [(p, x, q) for x in letters]
    transitions += [(alphas[-1], x, alphas[-1]) for x in letters]

    for p, q in zip(rs, rs[1:] + [alphas[-1]]):
        transitions += [(p, x, q) for x in letters]

    accepting = ["0"] + [f"q{i}.{n}" for i in range(1, len(phi.clauses) + 1)]
    accepting += [alpha for l, alpha in enumerate(alphas, start=1) if l != n]

    logger.debug(f"cnf_to_ptnfa: {n} variables, {len(phi.clauses)} clauses")
    return Automaton(
        states=states + alphas + rs,
        alphabet=letters,
        initial=["0"],
        accepting=accepting,
        transitions=transitions,
    )


# -------------------- LIFTS --------------------

def _fresh_letter(m: Automaton, letter: Optional[str]) -> str:
    letter = letter or config.DEFAULT_FRESH_LETTER
    if m.has_letter(letter):
        raise AutomatonInputError(f"fresh letter {letter!r} is already in the alphabet")
    return letter


def _require_ptnfa(m: Automaton) -> None:
    if not is_ptnfa(m):
        raise PreconditionError("lifting requires a ptNFA")


def _lift(m: Automaton, letter: str, chain_names) -> Automaton:
    """Prefix every initial state i by the chain chain_names(i) under `letter`."""
    transitions: List[Triple] = list(m.transitions())
    transitions += [(q, letter, q) for q in m.states]

    new_states, new_initial = [], []
    for i in sorted(m.initial):
        chain = chain_names(i)
        clash = set(chain) & set(m.states)
        if clash:
            raise AutomatonInputError(
                f"lifted state names {sorted(clash)} clash with existing states"
            )
        for p, q in zip(chain, chain[1:] + [i]):
            transitions.append((p, letter, q))
        for p in chain:
            transitions += [(p, x, p) for x in m.alphabet]
        new_states += chain
        new_initial.append(chain[0])

    return Automaton(
        states=list(m.states) + new_states,
        alphabet=list(m.alphabet) + [letter],
        initial=new_initial,
        accepting=m.accepting,
        transitions=transitions,
    )


def lift_k(m: Automaton, letter: Optional[str] = None) -> Automaton:
    """
    Raise a k-PT ptNFA to a (k+1)-PT one over one more letter.

    Every state gets a self-loop under the fresh letter; every initial state
    i gets a new initial state i' looping on the old alphabet and entering i
    under the fresh letter.

    Raises:
        PreconditionError: If m is not a ptNFA.
        AutomatonInputError: If the fresh letter or a new name clashes.
    """
    _require_ptnfa(m)
    return _lift(m, _fresh_letter(m, letter), lambda i: [f"{i}'"])


def lift_k_fixed(m0: Automaton, k: int, letter: Optional[str] = None) -> Automaton:
    """
    Reduce 0-piecewise testability to k-piecewise testability with a single
    fresh letter: a chain of k states i'1 .. i'k before every initial state i.

    Raises:
        PreconditionError: If m0 is not a ptNFA or k < 1.
        AutomatonInputError: If the fresh letter or a new name clashes.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    _require_ptnfa(m0)
    return _lift(
        m0, _fresh_letter(m0, letter), lambda i: [f"{i}'{l}" for l in range(1, k + 1)]
    )


def lift_counterexample(
    m: Automaton,
    cx: KptCounterexample,
    letter: Optional[str] = None
) -> KptCounterexample:
    """
    Carry a k-PT counterexample (x, y) of m to lift_k(m) at level k + 1.

    With w saturating every word of length at most k + 1 over the old
    alphabet, the pair is (w z x, w z y).
    """
    letter = _fresh_letter(m, letter)
    prefix = saturating_word(m.alphabet, cx.k + 1) + (letter,)
    return KptCounterexample(prefix + cx.u, prefix + cx.v, cx.k + 1)


def lift_counterexample_fixed(
    m0: Automaton,
    cx: KptCounterexample,
    k: int,
    letter: Optional[str] = None
) -> KptCounterexample:
    """
    Carry a 0-PT counterexample (x, y) of m0 to lift_k_fixed(m0, k).

    The pair is ((w z)^k x, (w z)^k y) with w saturating level k over the
    old alphabet; both words contain every word of length at most k.

    Raises:
        PreconditionError: If cx is not a 0-PT counterexample or k < 1.
    """
    if cx.k != 0:
        raise PreconditionError(f"expected a 0-PT counterexample, got level {cx.k}")
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    letter = _fresh_letter(m0, letter)
    prefix = (saturating_word(m0.alphabet, k) + (letter,)) * k
    return KptCounterexample(prefix + cx.u, prefix + cx.v, k)


# -------------------- UNARY 3CNF --------------------

def crt_offset(constraints: Sequence[Tuple[int, int]]) -> int:
    """
    The unique z with 0 <= z < product of moduli and z = r (mod m) for every
    (m, r).

    Raises:
        AutomatonInputError: On non-coprime moduli, a modulus below 1 or a
            residue out of range.
    """
    z, modulus = 0, 1
    for m, r in constraints:
        if m < 1 or not 0 <= r < m:
            raise AutomatonInputError(f"invalid constraint z = {r} (mod {m})")
        if math.gcd(modulus, m) != 1:
            raise AutomatonInputError(f"modulus {m} is not coprime to the others")
        # z + modulus * t = r (mod m)
        t = ((r - z) * pow(modulus, -1, m)) % m
        z += modulus * t
        modulus *= m
    return z


def _cycle(
    prefix: str,
    tail: int,
    period: int,
    accepting: Iterable[int]
) -> Tuple[List[str], List[Triple], List[str]]:
    """States prefix0 .. prefix(tail+period-1): a tail entering a cycle."""
    a = config.UNARY_LETTER
    names = [f"{prefix}{t}" for t in range(tail + period)]
    transitions = [(p, a, q) for p, q in zip(names, names[1:])]
    transitions.append((names[-1], a, names[tail]))
    return names, transitions, [names[t] for t in accepting]


def cnf3_to_unary_nfa(
    phi: Union[CnfFormula, ThreeCnfFormula],
    prime_cap: Optional[int] = None
) -> Automaton:
    """
    Unary NFA that is universal iff the 3CNF formula is unsatisfiable.

    Variable x_j is encoded by the residue of the word length modulo the
    j-th prime (0 = false, 1 = true). One cycle per variable accepts the
    lengths whose residue encodes no truth value; one tail-and-cycle per
    clause accepts the lengths that encode an assignment falsifying it.

    Args:
        phi: Formula with three literals on distinct variables per clause.
        prime_cap: Largest number of variables (config.UNARY_PRIME_CAP if None).

    Raises:
        AutomatonInputError: If a clause is not a 3-clause on distinct variables.
        ResourceExceededError: If phi has more variables than the cap.
    """
    cap = config.UNARY_PRIME_CAP if prime_cap is None else prime_cap
    if phi.num_vars > min(cap, len(config.PRIMES)):
        raise ResourceExceededError("variables of the unary reduction", cap, phi.num_vars)
    if not isinstance(phi, ThreeCnfFormula):
        try:
            phi = ThreeCnfFormula(num_vars=phi.num_vars, clauses=phi.clauses)
        except ValueError as e:
            raise AutomatonInputError(f"not a 3CNF formula: {e}") from e

    states: List[str] = []
    initial: List[str] = []
    accepting: List[str] = []
    transitions: List[Triple] = []

    def add(names, triples, finals):
        states.extend(names)
        initial.append(names[0])
        accepting.extend(finals)
        transitions.extend(triples)

    for j in range(1, phi.num_vars + 1):
        p = config.PRIMES[j - 1]
        if p > 2:
            add(*_cycle(f"v{j}.", 0, p, range(2, p)))

    for k, clause in enumerate(phi.clauses, start=1):
        literals = sorted(clause, key=abs)
        constraints = [(config.PRIMES[abs(lit) - 1], 0 if lit > 0 else 1) for lit in literals]
        z = crt_offset(constraints)
        period = math.prod(m for m, _ in constraints)
        add(*_cycle(f"c{k}.", z, period, [z]))

    if not states:
        # No clauses and no variable cycles: the empty language
        add(["empty"], [], [])
    return Automaton(
        states=states,
        alphabet=[config.UNARY_LETTER],
        initial=initial,
        accepting=accepting,
        transitions=transitions,
    )
