"""Command-line front end: argument parsing and subcommand dispatch."""

from cli.parsing import COMMANDS, UsageError, build_parser, parse_args
from cli.commands import HANDLERS, run

__all__ = [
    "COMMANDS",
    "HANDLERS",
    "UsageError",
    "build_parser",
    "parse_args",
    "run",
]
