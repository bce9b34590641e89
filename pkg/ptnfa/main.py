"""
Command-line entry point for ptnfa.

Run with: python -m ptnfa.main <command> ...
"""
import sys
from typing import List, Optional, Sequence, Tuple

import click

from ptnfa import config
from ptnfa.cli import (
    check_command,
    decide_k_command,
    depth_command,
    equivalent_command,
    gen_command,
    member_command,
    min_k_command,
    op_command,
)
from ptnfa.cli.report import CONTEXT_SETTINGS, EXIT_CODES, CliState
from ptnfa.models.schemas import CommandStatus, ReportDocument
from ptnfa.utils.logging import get_logger, set_log_level

logger = get_logger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False),
              default=None, help=f"Diagnostics on stderr (default {config.LOG_LEVEL}).")
@click.version_option("0.1.0", prog_name="ptnfa")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, log_level: Optional[str]) -> None:
    """Piecewise testability of regular languages given by finite automata."""
    state = ctx.ensure_object(CliState)
    state.as_json = as_json
    if log_level:
        set_log_level(log_level)


cli.add_command(check_command)
cli.add_command(decide_k_command)
cli.add_command(min_k_command)
cli.add_command(depth_command)
cli.add_command(member_command)
cli.add_command(equivalent_command)
cli.add_command(op_command)
cli.add_command(gen_command)


def run_command(argv: Sequence[str]) -> Tuple[int, Optional[ReportDocument]]:
    """
    Run one command line in-process.

    Args:
        argv: Arguments without the program name.

    Returns:
        Tuple of (exit code, report). The report is None when the command
        line itself was rejected (usage errors exit with 2).
    """
    args: List[str] = list(argv)
    state = CliState(argv=args)
    try:
        code = cli.main(args, prog_name="ptnfa", standalone_mode=False, obj=state)
    except click.ClickException as e:
        e.show()
        return e.exit_code, None
    except click.Abort:
        return EXIT_CODES[CommandStatus.ERROR], None
    # --help and --version return without running a command
    return (code if isinstance(code, int) else 0), state.last_report


def main() -> None:
    code, _ = run_command(sys.argv[1:])
    sys.exit(code)


if __name__ == "__main__":
    main()
