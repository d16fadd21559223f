#!/usr/bin/env python3
"""
MultiplierLab - Main Entry Point

Decides complete positivity of Fourier and Herz-Schur multipliers on
discrete groups, runs the non-factorizability criterion, verifies
factorizability certificates, simulates abelian dilations and Folner
compressions, and reproduces the S3 example in exact arithmetic.

Usage:
    python main.py reproduce-s3 [--json out.json] [--pdf out.pdf]
    python main.py check-ucp --group Z2 --u "[1, 1]"
    python main.py <command> --help

The JSON report goes to stdout; logs go to stderr.
"""

import logging
import sys

import config

# Configure logging before importing modules that create loggers
logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
    format=config.LOG_FORMAT,
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

from cli import run  # noqa: E402


def main():
    """
    Main entry point - runs one subcommand and exits with its code.

    Exit codes: 0 success, 1 usage or input error, 2 negative verdict.
    """
    try:
        code = run(sys.argv[1:])
    except KeyboardInterrupt:
        sys.exit(config.EXIT_USAGE)
    except Exception as e:
        logger.error(f"Fatal error: {e}", exc_info=True)
        sys.exit(config.EXIT_USAGE)
    sys.exit(code)


if __name__ == "__main__":
    main()
