"""
Subcommand handlers and the run() dispatcher.

Each handler takes the parsed namespace and returns (Report, exit code).
run() owns error mapping: negative verdicts exit 2, usage and input
errors exit 1, and a Report is printed in every case.
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import numpy as np

import config
from arithmetic.scalars import ConsistencyError
from dilation.abelian import NotPositiveDefiniteError, build_dilation, fourier_coefficient, residual_table
from dilation.folner import boundary_identity, convergence_table, folner_sequence
from factorization.certificate import certificate_from_json, verify_certificate
from factorization.hm_criterion import assert_mutually_exclusive, hm_verdict
from groups import FiniteGroup, IntegerGroup, parse_group
from linalg.eigen import ConvergenceError
from multipliers.bochner import bochner_measure
from multipliers.herz_schur import (
    GroupFunction,
    check_ucp,
    herz_schur_matrix,
    parse_group_function,
    parse_scalar,
    scalar_to_json,
)
from pipeline.s3 import VerificationError, run_s3_report
from reporting.json_report import Report, write_report
from cli.parsing import UsageError, inputs_echo, parse_args, parse_json_arg, require

logger = logging.getLogger(__name__)

Outcome = Tuple[Report, int]


def _tol(args: argparse.Namespace) -> float:
    return config.DEFAULT_TOL if args.tol is None else args.tol


def _report(args: argparse.Namespace, results: Dict[str, Any]) -> Report:
    return Report(args.command, inputs_echo(args), results, _tol(args))


def _finite_group(spec: str) -> FiniteGroup:
    group = parse_group(spec)
    if not isinstance(group, FiniteGroup):
        raise UsageError(f"{spec} is not a finite group")
    return group


def load_u(args: argparse.Namespace) -> Tuple[FiniteGroup, GroupFunction]:
    """
    Group and u from --group/--u; u may carry its own "group" key.

    Without --exact the values are converted to floats.
    """
    data = parse_json_arg(args.u, "u")
    spec = args.group
    if spec is None and isinstance(data, dict):
        spec = data.get("group")
    if spec is None:
        raise UsageError(f"--group is required for {args.command}")
    group = _finite_group(spec)
    u = parse_group_function(group, data)
    if not args.exact:
        u = u.to_float()
    return group, u


def load_matrix(args: argparse.Namespace) -> np.ndarray:
    """Square complex matrix from --matrix, or the Herz-Schur matrix of --group/--u."""
    if args.matrix is None:
        group, u = load_u(args)
        return herz_schur_matrix(group, u).to_complex()
    data = parse_json_arg(args.matrix, "matrix")
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise ValueError("--matrix must be a JSON list of rows")
    if any(len(row) != len(data) for row in data):
        raise ValueError("--matrix must be square")
    return np.array([[complex(parse_scalar(v)) for v in row] for row in data], dtype=np.complex128)


def cmd_check_ucp(args: argparse.Namespace) -> Outcome:
    group, u = load_u(args)
    report = check_ucp(group, u, _tol(args))
    return _report(args, {"ucp": report.ucp, **report.to_json()}), \
        config.EXIT_OK if report.ucp else config.EXIT_NEGATIVE_VERDICT


def cmd_herz_schur(args: argparse.Namespace) -> Outcome:
    group, u = load_u(args)
    matrix = herz_schur_matrix(group, u)
    results = {
        "group": group.name,
        "labels": list(group.elements),
        "hermitian": matrix.is_hermitian(_tol(args)),
        "matrix": matrix.to_json(),
    }
    return _report(args, results), config.EXIT_OK


def cmd_hm_test(args: argparse.Namespace) -> Outcome:
    verdict = hm_verdict(load_matrix(args), _tol(args))
    # Both verdicts are successful outcomes of the test
    return _report(args, verdict.to_json()), config.EXIT_OK


def cmd_certify(args: argparse.Namespace) -> Outcome:
    matrix = load_matrix(args)
    cert = certificate_from_json(parse_json_arg(args.cert, "cert"))
    result = verify_certificate(matrix, cert, _tol(args))
    results = result.to_json()
    try:
        verdict = hm_verdict(matrix, _tol(args))
    except ValueError as e:
        logger.debug(f"Criterion not applicable to certified matrix: {e}")
    else:
        assert_mutually_exclusive(verdict, result.accepted)
        results["criterion"] = verdict.verdict
    return _report(args, results), config.EXIT_OK if result.accepted else config.EXIT_NEGATIVE_VERDICT


def cmd_abelian_dilate(args: argparse.Namespace) -> Outcome:
    group, u = load_u(args)
    K = require(args, "K")
    tol = _tol(args)
    try:
        model = build_dilation(group, u, K, tol)
    except NotPositiveDefiniteError as e:
        weights = bochner_measure(group, u).weights
        results = {
            "accepted": False,
            "reason": str(e),
            "bochner_weights": [scalar_to_json(complex(w)) for w in weights],
        }
        return _report(args, results), config.EXIT_NEGATIVE_VERDICT

    table = residual_table(model)
    coefficients = [
        {"k": k, "t": t, "value": scalar_to_json(fourier_coefficient(model, k, t))}
        for k in range(model.K + 1)
        for t in range(group.order)
    ]
    worst = max(row["residual"] for row in table)
    results = {
        "accepted": True,
        "group": group.name,
        "K": model.K,
        "states": int(np.prod(model.state_shape)),
        "bochner_weights": [float(w) for w in model.measure.real_weights()],
        "residuals": table,
        "fourier_coefficients": coefficients,
        "max_residual": worst,
    }
    ok = worst <= tol
    if not ok:
        logger.error(f"Dilation residual {worst:.3e} exceeds tolerance {tol:.1e}")
    return _report(args, results), config.EXIT_OK if ok else config.EXIT_NEGATIVE_VERDICT


def cmd_folner(args: argparse.Namespace) -> Outcome:
    group = parse_group(require(args, "group"))
    s = require(args, "s")
    t = require(args, "t")
    if isinstance(group, IntegerGroup):
        windows = folner_sequence(group, "intervals", require(args, "nmax"))
    else:
        windows = folner_sequence(group, "whole_group")
    table = convergence_table(windows, s, t)
    last = windows[-1]
    results = {
        "group": group.name,
        "s": s,
        "t": t,
        "table": table,
        "boundary": {k: str(v) for k, v in boundary_identity(last, t).items()},
    }
    return _report(args, results), config.EXIT_OK


def _ledger_lines(report) -> List[str]:
    width = max(len(entry.identity) for entry in report.ledger)
    return [
        f"[{'ok' if entry.verified else 'FAIL'}] {entry.identity.ljust(width)}  {entry.expected}"
        for entry in report.ledger
    ]


def cmd_reproduce_s3(args: argparse.Namespace, stderr: TextIO) -> Outcome:
    try:
        s3 = run_s3_report(_tol(args))
    except VerificationError as e:
        logger.error(f"S3 reproduction failed at {e.identity}")
        results = {"verified": False, "identity": e.identity, "expected": str(e.expected), "actual": str(e.actual)}
        return _report(args, results), config.EXIT_NEGATIVE_VERDICT

    for line in _ledger_lines(s3):
        print(line, file=stderr)
    results = {"verified": True, **s3.to_json()}
    if args.pdf:
        # Imported here so the other commands do not load reportlab
        from reporting.pdf_report import generate_s3_pdf
        results["pdf"] = str(generate_s3_pdf(s3, args.pdf))
    return _report(args, results), config.EXIT_OK


HANDLERS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "check-ucp": cmd_check_ucp,
    "herz-schur": cmd_herz_schur,
    "hm-test": cmd_hm_test,
    "certify": cmd_certify,
    "abelian-dilate": cmd_abelian_dilate,
    "folner": cmd_folner,
}


def _command_name(argv: List[str]) -> str:
    for arg in argv:
        if not arg.startswith("-"):
            return arg
    return ""


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Run one CLI invocation.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
        stdout: Stream for the JSON report
        stderr: Stream for the human-readable S3 ledger

    Returns:
        Exit code: 0 success, 1 usage or input error, 2 negative verdict.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    args = None
    try:
        args = parse_args(argv)
        if args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        logger.debug(f"Running {args.command} with {inputs_echo(args)}")
        if args.command == "reproduce-s3":
            report, code = cmd_reproduce_s3(args, stderr)
        else:
            report, code = HANDLERS[args.command](args)
    except ConsistencyError as e:
        logger.error(f"Consistency check failed: {e}")
        report, code = _error_report(args, argv, f"consistency check failed: {e}"), config.EXIT_NEGATIVE_VERDICT
    except (UsageError, ValueError, TypeError, IndexError, KeyError, OverflowError, ConvergenceError, OSError) as e:
        kind = "usage error" if isinstance(e, UsageError) else type(e).__name__
        logger.error(f"{kind}: {e}")
        report, code = _error_report(args, argv, f"{kind}: {e}"), config.EXIT_USAGE

    if code != config.EXIT_OK and report.status == "ok":
        report.status = "negative"
    print(report.to_json(), file=stdout)
    if args is not None and args.json_out:
        try:
            write_report(report, args.json_out)
        except OSError as e:
            logger.error(f"Could not write report to {args.json_out}: {e}")
            return config.EXIT_USAGE
    return code


def _error_report(args: Optional[argparse.Namespace], argv: List[str], message: str) -> Report:
    if args is None:
        return Report(_command_name(argv), {"argv": argv}, {}, config.DEFAULT_TOL, "error", message)
    return Report(args.command, inputs_echo(args), {}, _tol(args), "error", message)
