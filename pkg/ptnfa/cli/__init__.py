"""Command modules for the ptnfa command line."""
from ptnfa.cli.analysis import (
    decide_k_command,
    depth_command,
    equivalent_command,
    member_command,
    min_k_command,
)
from ptnfa.cli.check import check_command
from ptnfa.cli.gen import gen_command
from ptnfa.cli.ops import op_command

__all__ = [
    "check_command",
    "decide_k_command",
    "min_k_command",
    "depth_command",
    "member_command",
    "equivalent_command",
    "op_command",
    "gen_command",
]
