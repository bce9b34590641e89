"""
Structural checks command.

Handles:
- Partial order, completeness, UMS, confluence and ptNFA checks
- Piecewise testability and the 1-PT / 2-PT decisions
"""
from typing import Optional

import click

from ptnfa.cli.report import (
    CONTEXT_SETTINGS,
    CliState,
    add_pt_report,
    add_verdict,
    read_automaton,
    reported,
    status_of,
)
from ptnfa.models.results import Verdict
from ptnfa.models.schemas import CommandStatus, ReportDocument
from ptnfa.services.automaton import Automaton, is_complete, missing_transitions
from ptnfa.services.operations import minimal_dfa
from ptnfa.services.order import is_partially_ordered
from ptnfa.services.structure import (
    fact_two_report,
    has_ums_property,
    is_confluent_dfa,
    is_one_pt_dfa,
    is_piecewise_testable_dfa,
    is_piecewise_testable_nfa,
    is_ptnfa,
    is_two_pt_dfa,
)
from ptnfa.utils.logging import get_logger

logger = get_logger(__name__)

PROPERTIES = ("po", "complete", "ums", "confluent", "ptnfa", "pt", "1pt", "2pt")


def _dest(name: str) -> str:
    return f"check_{name}"


def _property_flags(func):
    for name in reversed(PROPERTIES):
        func = click.option(
            f"--{name}", _dest(name), is_flag=True, help=f"Check the '{name}' property."
        )(func)
    return func


@click.command("check", context_settings=CONTEXT_SETTINGS)
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@_property_flags
@click.option("--reachable-only", is_flag=True, help="UMS: skip states unreachable from I.")
@click.option("--budget", type=int, metavar="<int>", default=None,
              help="Subset construction budget.")
@reported
def check_command(
    state: CliState,
    report: ReportDocument,
    file: str,
    reachable_only: bool,
    budget: Optional[int],
    **flags: bool
) -> CommandStatus:
    """
    Check structural properties of the automaton in FILE.

    Without a property flag the ptNFA conditions and piecewise testability
    are reported. With several flags the answer is yes iff every check is.
    """
    a = read_automaton(report, file)
    selected = [name for name in PROPERTIES if flags.get(_dest(name))]

    if not selected:
        add_pt_report(report, is_ptnfa(a))
        verdict = is_piecewise_testable_nfa(a, budget)
        add_verdict(report, "pt", verdict)
        return status_of(verdict.answer)

    answers = [_run_check(report, a, name, reachable_only, budget) for name in selected]
    return status_of(all(answers))


def _run_check(
    report: ReportDocument,
    a: Automaton,
    name: str,
    reachable_only: bool,
    budget: Optional[int]
) -> bool:
    if name == "ptnfa":
        pt = is_ptnfa(a)
        add_pt_report(report, pt)
        return pt.verdict

    if name == "complete":
        answer = is_complete(a)
        report.verdicts["complete"] = answer
        for q, x in missing_transitions(a)[:10]:
            report.messages.append(f"missing transition from {q!r} under {x!r}")
        return answer

    verdict = _single_check(report, a, name, reachable_only, budget)
    add_verdict(report, name, verdict)
    return verdict.answer


def _single_check(report, a, name, reachable_only, budget) -> Verdict:
    if name == "po":
        return is_partially_ordered(a)
    if name == "ums":
        return has_ums_property(a, reachable_only=reachable_only)
    if name == "confluent":
        return is_confluent_dfa(a)

    m = minimal_dfa(a, budget)
    if name == "pt":
        report.values["fact_two"] = fact_two_report(m)
        return is_piecewise_testable_dfa(m)
    if name == "1pt":
        return is_one_pt_dfa(m)

    pt = is_piecewise_testable_dfa(m)
    if not pt:
        return Verdict(False, pt.witness, detail="language is not piecewise testable")
    return is_two_pt_dfa(m)
