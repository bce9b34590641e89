"""
Parser service for ptnfa.

Responsible for reading and writing automaton documents (JSON), DIMACS CNF
formulas, and Graphviz dot export.
"""
import json
from pathlib import Path
from typing import Iterator, List, Set

from pydantic import ValidationError

from ptnfa.exceptions import AutomatonInputError, DocumentParseError
from ptnfa.models.schemas import AutomatonDocument, CnfFormula
from ptnfa.services.automaton import Automaton
from ptnfa.utils.logging import get_logger
from ptnfa.utils.words import sorted_states, state_sort_key

logger = get_logger(__name__)


# -------------------- AUTOMATON DOCUMENTS --------------------

def _field_path(loc) -> str:
    return ".".join(str(part) for part in loc)


def parse_automaton(text: str) -> Automaton:
    """
    Parse an automaton document.

    Args:
        text: JSON object with alphabet, states, initial, accepting and
            transitions ([from, letter, to] triples).

    Returns:
        The automaton. Duplicate transition triples are dropped with a warning.

    Raises:
        DocumentParseError: On malformed JSON (with line and column), a schema
            violation (with the field path) or an undeclared name (naming the
            offending triple).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentParseError(f"malformed JSON: {e.msg}", line=e.lineno, column=e.colno) from e

    try:
        document = AutomatonDocument.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        raise DocumentParseError(
            f"invalid automaton document: {error['msg']}", field=_field_path(error["loc"])
        ) from e

    return automaton_from_document(document)


def automaton_from_document(document: AutomatonDocument) -> Automaton:
    """
    Build an automaton from a validated document, checking referential
    integrity.

    Raises:
        DocumentParseError: On undeclared names or duplicates.
    """
    states = set(document.states)
    letters = set(document.alphabet)

    for field in ("initial", "accepting"):
        for position, name in enumerate(getattr(document, field)):
            if name not in states:
                raise DocumentParseError(
                    f"undeclared state {name!r}", field=f"{field}.{position}"
                )
    if not document.initial:
        raise DocumentParseError("at least one initial state is required", field="initial")

    seen: Set[tuple] = set()
    triples = []
    for position, triple in enumerate(document.transitions):
        source, letter, target = triple
        for name in (source, target):
            if name not in states:
                raise DocumentParseError(
                    f"transition {triple} uses undeclared state {name!r}",
                    field=f"transitions.{position}",
                )
        if letter not in letters:
            raise DocumentParseError(
                f"transition {triple} uses letter {letter!r} outside the alphabet",
                field=f"transitions.{position}",
            )
        if tuple(triple) in seen:
            logger.warning(f"Ignoring duplicate transition {triple}")
            continue
        seen.add(tuple(triple))
        triples.append(tuple(triple))

    try:
        return Automaton(
            states=document.states,
            alphabet=document.alphabet,
            initial=document.initial,
            accepting=document.accepting,
            transitions=triples,
        )
    except AutomatonInputError as e:
        if isinstance(e, DocumentParseError):
            raise
        raise DocumentParseError(str(e)) from e


def automaton_to_document(a: Automaton) -> AutomatonDocument:
    """Canonical document: every list sorted."""
    return AutomatonDocument(
        alphabet=list(a.alphabet),
        states=sorted_states(a.states),
        initial=sorted_states(a.initial),
        accepting=sorted_states(a.accepting),
        transitions=[list(t) for t in a.transitions()],
    )


def serialize_automaton(a: Automaton) -> str:
    """
    Canonical serialization: sorted lists, one transition per line.

    parse_automaton(serialize_automaton(a)) == a.
    """
    document = automaton_to_document(a)

    def dump(value) -> str:
        return json.dumps(value, ensure_ascii=False)

    lines = [
        "{",
        f'  "alphabet": {dump(document.alphabet)},',
        f'  "states": {dump(document.states)},',
        f'  "initial": {dump(document.initial)},',
        f'  "accepting": {dump(document.accepting)},',
    ]
    if document.transitions:
        lines.append('  "transitions": [')
        body = [f"    {dump(t)}" for t in document.transitions]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "transitions": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_automaton(file_path: str) -> Automaton:
    """
    Load an automaton document from disk.

    Raises:
        FileNotFoundError: If the file does not exist.
        DocumentParseError: If the document is invalid.
    """
    path = Path(file_path)
    if not path.exists():
        raise FileNotFoundError(f"automaton file not found: {file_path}")
    logger.info(f"Loading automaton from: {file_path}")
    return parse_automaton(path.read_text(encoding="utf-8"))


def save_automaton(a: Automaton, file_path: str) -> None:
    """Write the canonical serialization of an automaton."""
    Path(file_path).write_text(serialize_automaton(a), encoding="utf-8")
    logger.info(f"Saved automaton with {a.num_states} states to: {file_path}")


# -------------------- DIMACS --------------------

def parse_dimacs(text: str) -> CnfFormula:
    """
    Parse a DIMACS CNF formula.

    Comment lines start with "c"; the header is "p cnf <vars> <clauses>";
    clauses are whitespace-separated literals terminated by 0 and may span
    lines. A "%" line ends the clause section.

    Raises:
        DocumentParseError: On a missing or malformed header, a bad token,
            or an invalid formula. A clause count that disagrees with the
            header is only logged.
    """
    num_vars = None
    declared = None
    clauses: List[Set[int]] = []
    current: List[int] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DocumentParseError("malformed header, expected 'p cnf <vars> <clauses>'",
                                         line=line_number)
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DocumentParseError("header counts must be integers", line=line_number) from None
            continue
        if num_vars is None:
            raise DocumentParseError("clause before the 'p cnf' header", line=line_number)
        for column, token in _tokens(raw):
            try:
                literal = int(token)
            except ValueError:
                raise DocumentParseError(
                    f"bad literal {token!r}", line=line_number, column=column
                ) from None
            if literal == 0:
                clauses.append(set(current))
                current = []
            else:
                current.append(literal)

    if num_vars is None:
        raise DocumentParseError("missing 'p cnf' header")
    if current:
        clauses.append(set(current))
    if declared != len(clauses):
        logger.warning(f"DIMACS header declares {declared} clauses, found {len(clauses)}")

    try:
        return CnfFormula(num_vars=num_vars, clauses=clauses)
    except ValidationError as e:
        error = e.errors()[0]
        raise DocumentParseError(f"invalid formula: {error['msg']}") from e


def _tokens(line: str) -> Iterator[tuple]:
    """(1-based column, token) pairs of a line."""
    column = 0
    for token in line.split():
        column = line.index(token, column)
        yield column + 1, token
        column += len(token)


def serialize_dimacs(phi: CnfFormula) -> str:
    """DIMACS text with literals of each clause sorted by variable."""
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    for clause in phi.clauses:
        literals = sorted(clause, key=lambda lit: (abs(lit), lit))
        lines.append(" ".join(str(lit) for lit in literals + [0]))
    return "\n".join(lines) + "\n"


def load_cnf(file_path: str) -> CnfFormula:
    """Load a DIMACS file."""
    path = Path(file_path)
    if not path.exists():
        raise FileNotFoundError(f"CNF file not found: {file_path}")
    return parse_dimacs(path.read_text(encoding="utf-8"))


# -------------------- DOT --------------------

def to_dot(a: Automaton, name: str = "automaton") -> str:
    """
    Graphviz rendering: doubled circles for accepting states, an arrow from
    an invisible node into every initial state, one edge per state pair with
    its letters joined by commas.
    """
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for q in sorted_states(a.states):
        shape = "doublecircle" if q in a.accepting else "circle"
        lines.append(f'  "{q}" [shape={shape}];')
    for i, q in enumerate(sorted_states(a.initial)):
        lines.append(f'  "__start{i}" [shape=point];')
        lines.append(f'  "__start{i}" -> "{q}";')

    labels = {}
    for p, x, q in a.transitions():
        labels.setdefault((p, q), []).append(x)
    for (p, q) in sorted(labels, key=lambda e: (state_sort_key(e[0]), state_sort_key(e[1]))):
        lines.append(f'  "{p}" -> "{q}" [label="{",".join(labels[(p, q)])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
