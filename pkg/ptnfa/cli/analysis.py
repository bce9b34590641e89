"""
Language analysis commands: k-PT decision, least k, depth, membership and
equivalence.
"""
from typing import Optional

import click

from ptnfa.cli.report import (
    CONTEXT_SETTINGS,
    CliState,
    add_verdict,
    read_automaton,
    reported,
    status_of,
)
from ptnfa.models.schemas import CommandStatus, ReportDocument
from ptnfa.services.automaton import accepts
from ptnfa.services.operations import equivalent
from ptnfa.services.order import depth
from ptnfa.services.simon import decide_k_pt, min_k
from ptnfa.utils.logging import get_logger
from ptnfa.utils.words import format_word, parse_word

logger = get_logger(__name__)


@click.command("decide-k", context_settings=CONTEXT_SETTINGS)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("-k", "k", type=click.IntRange(min=0), metavar="<int>", required=True,
              help="Level of piecewise testability.")
@click.option("--budget", type=int, metavar="<int>", default=None,
              help="Product state budget.")
@reported
def decide_k_command(
    state: CliState,
    report: ReportDocument,
    file: str,
    k: int,
    budget: Optional[int]
) -> CommandStatus:
    """Decide whether the language of FILE is k-piecewise testable."""
    a = read_automaton(report, file)
    verdict = decide_k_pt(a, k, budget)
    report.values["k"] = k
    add_verdict(report, f"{k}-pt", verdict)
    return status_of(verdict.answer)


@click.command("mink", context_settings=CONTEXT_SETTINGS)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--max", "max_k", type=click.IntRange(min=0), metavar="<int>", default=None,
              help="Give up above this k.")
@click.option("--budget", type=int, metavar="<int>", default=None,
              help="Product state budget per decision.")
@reported
def min_k_command(
    state: CliState,
    report: ReportDocument,
    file: str,
    max_k: Optional[int],
    budget: Optional[int]
) -> CommandStatus:
    """Least k for which the language of FILE is k-piecewise testable."""
    a = read_automaton(report, file)
    k = min_k(a, max_k=max_k, budget=budget)
    report.verdicts["pt"] = k is not None
    if k is None:
        report.messages.append("language is not piecewise testable")
        return CommandStatus.NO
    report.values["min_k"] = k
    return CommandStatus.YES


@click.command("depth", context_settings=CONTEXT_SETTINGS)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--budget", type=int, metavar="<int>", default=None,
              help="State budget for the search on cyclic automata.")
@reported
def depth_command(
    state: CliState,
    report: ReportDocument,
    file: str,
    budget: Optional[int]
) -> CommandStatus:
    """Length of the longest simple path from an initial state of FILE."""
    a = read_automaton(report, file)
    report.values["depth"] = depth(a, budget)
    return CommandStatus.YES


@click.command("member", context_settings=CONTEXT_SETTINGS)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("-w", "--word", "text", required=True, metavar="<word>",
              help="Letters, comma-separated when a letter has several characters.")
@reported
def member_command(state: CliState, report: ReportDocument, file: str, text: str) -> CommandStatus:
    """Decide whether FILE accepts a word."""
    a = read_automaton(report, file)
    word = parse_word(text, a.alphabet)
    answer = accepts(a, word)
    report.values["word"] = format_word(word)
    report.verdicts["accepted"] = answer
    return status_of(answer)


@click.command("eq", context_settings=CONTEXT_SETTINGS)
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@reported
def equivalent_command(
    state: CliState,
    report: ReportDocument,
    first: str,
    second: str
) -> CommandStatus:
    """Decide whether two automata accept the same language."""
    a = read_automaton(report, first)
    b = read_automaton(report, second)
    verdict = equivalent(a, b)
    add_verdict(report, "equivalent", verdict)
    return status_of(verdict.answer)
