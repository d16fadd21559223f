"""Argument parsing and JSON input loading for the command line."""

import argparse
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import config

logger = logging.getLogger(__name__)

COMMANDS = (
    "check-ucp",
    "herz-schur",
    "hm-test",
    "certify",
    "abelian-dilate",
    "folner",
    "reproduce-s3",
)

# Keys an --in file may provide, with the attribute they fill
INPUT_KEYS = ("group", "u", "matrix", "cert", "K", "s", "t", "nmax")


class UsageError(ValueError):
    """Raised for malformed command lines (mapped to exit code 1)."""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting."""

    def error(self, message: str):
        raise UsageError(message)

    def exit(self, status: int = 0, message: Optional[str] = None):
        if status:
            raise UsageError(message or f"exit {status}")
        raise SystemExit(status)


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per operation; common flags on each."""
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help=f"Relative tolerance (default {config.DEFAULT_TOL})")
    common.add_argument("--exact", action="store_true", help="Keep exact scalars where supported")
    common.add_argument("--in", dest="input", default=None, help="Read inputs from a JSON file")
    common.add_argument("--json", dest="json_out", default=None, help="Also write the report to this file")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")

    parser = _Parser(
        prog="multiplierlab",
        description=f"{config.APP_NAME} - Herz-Schur and Fourier multipliers on discrete groups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py reproduce-s3
  python main.py check-ucp --group Z2 --u "[1, 2]"
  python main.py abelian-dilate --group Z4 --u "[1, [0, 0.5], 0, [0, -0.5]]" --K 4
  python main.py folner --group Z --t 1 --s -1 --nmax 64
        """,
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    for name in ("check-ucp", "herz-schur"):
        p = sub.add_parser(name, parents=[common], help=f"{name} for u on a finite group")
        p.add_argument("--group", help="Group spec, e.g. S3, Z4, Z2xZ2")
        p.add_argument("--u", help="JSON list of values in enumeration order")

    p = sub.add_parser("hm-test", parents=[common], help="Non-factorizability criterion")
    p.add_argument("--group", help="Group spec (with --u)")
    p.add_argument("--u", help="JSON values of u (with --group)")
    p.add_argument("--matrix", help="JSON unit-diagonal PSD matrix")

    p = sub.add_parser("certify", parents=[common], help="Verify a factorizability certificate")
    p.add_argument("--group", help="Group spec (with --u)")
    p.add_argument("--u", help="JSON values of u (with --group)")
    p.add_argument("--matrix", help="JSON matrix to certify")
    p.add_argument("--cert", help='JSON {"unitaries": [...]}')

    p = sub.add_parser("abelian-dilate", parents=[common], help="Truncated dilation residual table")
    p.add_argument("--group", help="Finite abelian group spec")
    p.add_argument("--u", help="JSON values of u")
    p.add_argument("--K", type=int, default=None, help="Truncation depth")

    p = sub.add_parser("folner", parents=[common], help="Folner compression convergence table")
    p.add_argument("--group", help='"Z" or a finite group spec')
    p.add_argument("--s", type=int, default=None, help="Element s")
    p.add_argument("--t", type=int, default=None, help="Element t")
    p.add_argument("--nmax", type=int, default=None, help="Largest interval length for Z")

    p = sub.add_parser("reproduce-s3", parents=[common], help="Exact reproduction of the S3 example")
    p.add_argument("--pdf", default=None, help="Also render the ledger as a PDF")
    return parser


def parse_args(argv: List[str]) -> argparse.Namespace:
    """
    Parse argv and merge values from --in.

    Raises:
        UsageError: For unknown commands or malformed flags.
        ValueError: For unreadable or malformed --in files.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        raise UsageError(f"A subcommand is required: {', '.join(COMMANDS)}")
    if args.input:
        data = load_json_file(args.input)
        if not isinstance(data, dict):
            raise ValueError(f"{args.input} must contain a JSON object")
        for key in INPUT_KEYS:
            if key in data and getattr(args, key, None) is None:
                value = data[key]
                # JSON payloads are kept as text so flags and files parse the same way
                if key in ("u", "matrix", "cert") and not isinstance(value, str):
                    value = json.dumps(value)
                setattr(args, key, value)
    return args


def load_json_file(path: str) -> Any:
    """
    Read a JSON file.

    Raises:
        ValueError: If the file cannot be read or parsed.
    """
    try:
        with open(Path(path), "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise ValueError(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ValueError(f"{path} is not valid JSON: {e}") from e


def parse_json_arg(raw: Optional[str], name: str) -> Any:
    """
    Decode a JSON-valued flag.

    Raises:
        UsageError: If the flag is missing.
        ValueError: If it is not valid JSON.
    """
    if raw is None:
        raise UsageError(f"--{name} is required")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise ValueError(f"--{name} is not valid JSON: {e}") from e


def require(args: argparse.Namespace, name: str) -> Any:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name} is required for {args.command}")
    return value


def inputs_echo(args: argparse.Namespace) -> Dict[str, Any]:
    """Inputs that went into the report, in a fixed order."""
    echo = {}
    for key in INPUT_KEYS + ("exact",):
        value = getattr(args, key, None)
        if value is not None and value is not False:
            echo[key] = value
    return echo
