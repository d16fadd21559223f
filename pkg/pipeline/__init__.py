"""End-to-end exact reproduction of the S3 counterexample."""

from pipeline.s3 import (
    S3Report,
    LedgerEntry,
    VerificationError,
    s3_constants,
    peter_weyl_blocks,
    s3_irreps,
    run_s3_report,
)

__all__ = [
    "S3Report",
    "LedgerEntry",
    "VerificationError",
    "s3_constants",
    "peter_weyl_blocks",
    "s3_irreps",
    "run_s3_report",
]
