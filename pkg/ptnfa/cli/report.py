"""
Report plumbing shared by the command modules.

Every command builds a ReportDocument, returns a CommandStatus and lets
`reported` handle timing, error mapping, rendering and the exit code.
"""
import functools
import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional

import click

from ptnfa.exceptions import PtnfaError
from ptnfa.models.results import PtReport, Verdict, Witness, to_jsonable
from ptnfa.models.schemas import CommandStatus, InputDigest, ReportDocument
from ptnfa.services.automaton import Automaton
from ptnfa.services.parser import load_automaton, save_automaton, serialize_automaton, to_dot
from ptnfa.utils.hashing import compute_document_id, compute_file_hash
from ptnfa.utils.logging import get_logger

logger = get_logger(__name__)

EXIT_CODES = {
    CommandStatus.YES: 0,
    CommandStatus.NO: 1,
    CommandStatus.ERROR: 2,
}

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"], max_content_width=100)


@dataclass
class CliState:
    """Per-invocation state carried in click's context object."""
    argv: List[str] = field(default_factory=list)
    as_json: bool = False
    payload: Optional[str] = None
    last_report: Optional[ReportDocument] = None


def status_of(answer: bool) -> CommandStatus:
    return CommandStatus.YES if answer else CommandStatus.NO


# -------------------- REPORT BUILDING --------------------

def read_automaton(report: ReportDocument, file_path: str) -> Automaton:
    """Load an automaton and record its canonical digest."""
    a = load_automaton(file_path)
    report.inputs.append(
        InputDigest(path=file_path, sha256=compute_document_id(serialize_automaton(a)))
    )
    return a


def record_file(report: ReportDocument, file_path: str) -> None:
    """Record a non-automaton input by its raw file digest."""
    report.inputs.append(InputDigest(path=file_path, sha256=compute_file_hash(file_path)))


def add_witness(report: ReportDocument, witness: Optional[Witness]) -> None:
    if witness is not None:
        report.witnesses.append(witness.to_document())


def add_verdict(report: ReportDocument, name: str, verdict: Verdict) -> None:
    """Record a verdict, its witness and, for one-sided checks, a note."""
    report.verdicts[name] = verdict.answer
    add_witness(report, verdict.witness)
    if not verdict.conclusive and not verdict.answer:
        report.messages.append(f"{name}: negative answer is inconclusive")
    if verdict.detail:
        report.messages.append(f"{name}: {verdict.detail}")


def add_pt_report(report: ReportDocument, pt: PtReport) -> None:
    report.verdicts["partially_ordered"] = pt.partially_ordered
    report.verdicts["complete"] = pt.complete
    report.verdicts["ums"] = pt.ums
    report.verdicts["ptnfa"] = pt.verdict
    for witness in pt.violations:
        add_witness(report, witness)


def emit_automaton(
    state: CliState,
    report: ReportDocument,
    a: Automaton,
    output: Optional[str],
    dot: bool
) -> CommandStatus:
    """
    Write a constructed automaton to `output` or make it the command's
    printed payload.
    """
    report.values["states"] = a.num_states
    report.values["alphabet"] = list(a.alphabet)
    text = to_dot(a) if dot else serialize_automaton(a)
    if output:
        if dot:
            with open(output, "w", encoding="utf-8") as f:
                f.write(text)
        else:
            save_automaton(a, output)
        report.messages.append(f"wrote {output}")
    else:
        state.payload = text
        report.values["automaton"] = text if dot else json.loads(text)
    return CommandStatus.YES


# -------------------- RENDERING --------------------

def _yes_no(value: Optional[bool]) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "no"


def render_human(report: ReportDocument) -> str:
    lines = []
    for name, value in report.verdicts.items():
        lines.append(f"{name}: {_yes_no(value)}")
    for name, value in report.values.items():
        if name == "automaton":
            continue
        lines.append(f"{name}: {json.dumps(to_jsonable(value), ensure_ascii=False)}")
    for witness in report.witnesses:
        lines.append(f"witness ({witness.kind.value}): {json.dumps(witness.value, ensure_ascii=False)}")
    lines.extend(report.messages)
    lines.append(f"result: {report.status.value}")
    return "\n".join(lines)


def emit(state: CliState, report: ReportDocument) -> None:
    state.last_report = report
    if state.as_json:
        click.echo(report.model_dump_json(indent=2))
        return
    if report.status == CommandStatus.ERROR:
        for message in report.messages:
            click.echo(f"error: {message}", err=True)
        return
    if state.payload is not None:
        click.echo(state.payload, nl=False)
        return
    click.echo(render_human(report))


def reported(func: Callable[..., CommandStatus]) -> Callable[..., Any]:
    """
    Run a command body with a fresh report, map library errors to the error
    status and exit with the status' code.
    """
    @functools.wraps(func)
    @click.pass_context
    def wrapper(ctx: click.Context, *args, **kwargs):
        state = ctx.ensure_object(CliState)
        report = ReportDocument(
            command=state.argv or ctx.command_path.split()[1:],
            status=CommandStatus.ERROR,
        )
        started = time.perf_counter()
        try:
            report.status = func(state, report, *args, **kwargs)
        except (PtnfaError, OSError) as e:
            logger.info(f"{ctx.command.name} failed: {e}")
            report.status = CommandStatus.ERROR
            report.messages.append(str(e))
            state.payload = None
        report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
        emit(state, report)
        ctx.exit(EXIT_CODES[report.status])

    return wrapper
