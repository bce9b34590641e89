"""
Automaton construction command.

Handles:
- Determinization, minimization, reversal and completion
- Concatenation, union and parallel composition
- Sub-automata rooted at a state
"""
from typing import Optional, Tuple

import click

from ptnfa.cli.report import CONTEXT_SETTINGS, CliState, emit_automaton, read_automaton, reported
from ptnfa.exceptions import AutomatonInputError
from ptnfa.models.schemas import CommandStatus, ReportDocument
from ptnfa.services.automaton import as_dfa, complete
from ptnfa.services.operations import (
    concat_automata,
    determinize,
    minimal_dfa,
    minimize,
    parallel_compose,
    reverse,
    union_automata,
)
from ptnfa.services.order import sub_automaton
from ptnfa.utils.logging import get_logger

logger = get_logger(__name__)

# operation -> (least, most) number of input files; None means unbounded
ARITY = {
    "determinize": (1, 1),
    "minimize": (1, 1),
    "reverse": (1, 1),
    "complete": (1, 1),
    "subautomaton": (1, 1),
    "concat": (2, 2),
    "union": (2, 2),
    "parallel": (1, None),
}


def _check_arity(name: str, count: int) -> None:
    least, most = ARITY[name]
    if count < least or (most is not None and count > most):
        expected = str(least) if least == most else f"at least {least}"
        raise click.UsageError(f"'{name}' takes {expected} automaton file(s), got {count}")


@click.command("op", context_settings=CONTEXT_SETTINGS)
@click.argument("name", type=click.Choice(list(ARITY)))
@click.argument("files", nargs=-1, type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Write the result here instead of printing it.")
@click.option("--sink", default=None, metavar="<name>", help="Sink name for 'complete'.")
@click.option("--state", "root", default=None, metavar="<name>",
              help="Root state for 'subautomaton'.")
@click.option("--budget", type=int, metavar="<int>", default=None,
              help="Subset construction budget.")
@click.option("--dot", is_flag=True, help="Emit Graphviz dot instead of JSON.")
@reported
def op_command(
    state: CliState,
    report: ReportDocument,
    name: str,
    files: Tuple[str, ...],
    output: Optional[str],
    sink: Optional[str],
    root: Optional[str],
    budget: Optional[int],
    dot: bool
) -> CommandStatus:
    """Apply the operation NAME to the automata in FILES."""
    _check_arity(name, len(files))
    automata = [read_automaton(report, path) for path in files]
    first = automata[0]

    if name == "determinize":
        result = determinize(first, budget)
    elif name == "minimize":
        d = as_dfa(first)
        result = minimize(d) if d is not None else minimal_dfa(first, budget)
    elif name == "reverse":
        result = reverse(first)
    elif name == "complete":
        result = complete(first, sink)
    elif name == "subautomaton":
        if root is None:
            raise AutomatonInputError("'subautomaton' needs --state")
        result = sub_automaton(first, root)
    elif name == "concat":
        result = concat_automata(*automata)
    elif name == "union":
        result = union_automata(*automata)
    else:
        result = parallel_compose(automata)

    report.values["operation"] = name
    return emit_automaton(state, report, result, output, dot)
