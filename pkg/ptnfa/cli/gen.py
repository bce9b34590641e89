"""
Generator command.

Emits the automaton families, the pinned examples and the reduction
constructions as automaton documents (or, for `wi`, a word).
"""
from typing import Optional

import click

from ptnfa.cli.report import (
    CONTEXT_SETTINGS,
    CliState,
    emit_automaton,
    read_automaton,
    record_file,
    reported,
)
from ptnfa.models.schemas import CommandStatus, ReportDocument
from ptnfa.services.automaton import Automaton, complete
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
from ptnfa.services.parser import load_cnf
from ptnfa.services.reductions import cnf3_to_unary_nfa, cnf_to_ptnfa, lift_k, lift_k_fixed
from ptnfa.services.simon import canonical_k_automaton
from ptnfa.utils.logging import get_logger
from ptnfa.utils.words import format_word, parse_word

logger = get_logger(__name__)

FAMILIES = (
    "ai", "bi", "wi", "cycles", "cycles-dfa", "fig1", "example-l", "example-llr",
    "all-letters", "cnf", "cnf-unary", "lift-k", "lift-k-fixed", "simon",
)

INDEXED = {
    "ai": gen_ai,
    "bi": gen_bi,
    "cycles": gen_cycle_nfa,
    "cycles-dfa": gen_cycle_min_dfa,
}

FIXED = {
    "fig1": gen_fig1,
    "example-l": gen_example_l,
    "example-llr": gen_example_llr,
}


def _require(value, option: str, family: str):
    if value is None:
        raise click.UsageError(f"family '{family}' needs {option}")
    return value


@click.command("gen", context_settings=CONTEXT_SETTINGS)
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("-i", "index", type=int, metavar="<int>", default=None, help="Family index.")
@click.option("-k", "k", type=click.IntRange(min=0), metavar="<int>", default=None,
              help="Level for 'lift-k-fixed' and 'simon'.")
@click.option("--cnf", "cnf_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="DIMACS formula for 'cnf' and 'cnf-unary'.")
@click.option("--from", "source", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Automaton to lift for 'lift-k' and 'lift-k-fixed'.")
@click.option("--alphabet", default=None, metavar="<letters>",
              help="Letters for 'all-letters' and 'simon'.")
@click.option("--letter", default=None, metavar="<letter>", help="Fresh letter of the lifts.")
@click.option("--prime-cap", type=int, metavar="<int>", default=None,
              help="Variable cap of 'cnf-unary'.")
@click.option("--complete", "make_complete", is_flag=True,
              help="Complete the result with a sink.")
@click.option("--sink", default=None, metavar="<name>", help="Sink name for --complete.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Write the result here instead of printing it.")
@click.option("--dot", is_flag=True, help="Emit Graphviz dot instead of JSON.")
@reported
def gen_command(
    state: CliState,
    report: ReportDocument,
    family: str,
    index: Optional[int],
    k: Optional[int],
    cnf_path: Optional[str],
    source: Optional[str],
    alphabet: Optional[str],
    letter: Optional[str],
    prime_cap: Optional[int],
    make_complete: bool,
    sink: Optional[str],
    output: Optional[str],
    dot: bool
) -> CommandStatus:
    """Generate a member of FAMILY."""
    report.values["family"] = family

    if family == "wi":
        word = gen_wi(_require(index, "-i", family))
        text = format_word(word)
        report.values["word"] = text
        report.values["length"] = len(word)
        state.payload = text + "\n"
        return CommandStatus.YES

    a = _build(report, family, index, k, cnf_path, source, alphabet, letter, prime_cap)
    if make_complete:
        a = complete(a, sink)
    return emit_automaton(state, report, a, output, dot)


def _build(report, family, index, k, cnf_path, source, alphabet, letter, prime_cap) -> Automaton:
    if family in INDEXED:
        report.values["i"] = _require(index, "-i", family)
        return INDEXED[family](index)
    if family in FIXED:
        return FIXED[family]()

    if family == "all-letters":
        return all_letters_language_nfa(parse_word(_require(alphabet, "--alphabet", family)))
    if family == "simon":
        letters = parse_word(_require(alphabet, "--alphabet", family))
        dfa, classes = canonical_k_automaton(letters, _require(k, "-k", family))
        report.values["classes"] = [
            [format_word(w) for w in c.shortlex()] for c in classes
        ]
        return dfa

    if family in ("cnf", "cnf-unary"):
        path = _require(cnf_path, "--cnf", family)
        record_file(report, path)
        phi = load_cnf(path)
        if family == "cnf":
            return cnf_to_ptnfa(phi)
        return cnf3_to_unary_nfa(phi, prime_cap)

    m = read_automaton(report, _require(source, "--from", family))
    if family == "lift-k":
        return lift_k(m, letter)
    return lift_k_fixed(m, _require(k, "-k", family), letter)
