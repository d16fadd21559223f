"""
Non-factorizability test for Schur multipliers.

For a unit-diagonal PSD matrix A with minimal Gram decomposition
A = sum_k conj(phi(k)) (x) phi(k), k = 1..d, the Schur multiplier of A is
not factorizable when d >= 2 and the d^2 vectors conj(phi(k)) o phi(l) are
linearly independent. Otherwise the test says nothing.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

import config
from arithmetic.scalars import ConsistencyError
from linalg.eigen import as_complex_matrix
from linalg.gram import gram_vectors, hadamard_family
from linalg.rank import float_rank
from multipliers.herz_schur import HerzSchurMatrix

logger = logging.getLogger(__name__)

NOT_FACTORIZABLE = "NotFactorizable"
INCONCLUSIVE = "Inconclusive"


class NonUnitDiagonalError(ValueError):
    """Raised when a Schur multiplier symbol does not have ones on the diagonal."""


@dataclass
class HmVerdict:
    """Outcome of the Hadamard-family rank test. Never claims factorizability."""
    verdict: str
    d: int
    hadamard_rank: int
    witness: np.ndarray = field(repr=False)
    min_eigenvalue: float = 0.0

    @property
    def not_factorizable(self) -> bool:
        return self.verdict == NOT_FACTORIZABLE

    def to_json(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "d": self.d,
            "hadamard_rank": self.hadamard_rank,
            "min_eigenvalue": self.min_eigenvalue,
        }


def _as_matrix(a: Any) -> np.ndarray:
    if isinstance(a, HerzSchurMatrix):
        return a.to_complex()
    return as_complex_matrix(a)


def hm_verdict(a: Any, tol: Optional[float] = None) -> HmVerdict:
    """
    Run the non-factorizability criterion on a Schur multiplier symbol.

    Args:
        a: Unit-diagonal PSD matrix or HerzSchurMatrix
        tol: Relative tolerance for PSD, Gram rank and Hadamard rank

    Returns:
        HmVerdict

    Raises:
        NonUnitDiagonalError: If some diagonal entry differs from 1.
        NotPositiveSemidefiniteError: If A has a negative eigenvalue.
    """
    tol = config.DEFAULT_TOL if tol is None else tol
    matrix = _as_matrix(a)
    diagonal_error = float(np.max(np.abs(np.diag(matrix) - 1.0))) if matrix.size else 0.0
    if diagonal_error > tol:
        raise NonUnitDiagonalError(f"Diagonal entries must equal 1 (max deviation {diagonal_error:.3e})")

    dec = gram_vectors(matrix, tol)
    family = hadamard_family(dec)
    family_rank = float_rank(family, tol) if dec.d else 0
    not_factorizable = dec.d >= 2 and family_rank == dec.d * dec.d
    verdict = HmVerdict(
        NOT_FACTORIZABLE if not_factorizable else INCONCLUSIVE,
        dec.d,
        family_rank,
        family,
        float(dec.eigen.eigenvalues[-1]) if matrix.size else 0.0,
    )
    logger.info(f"hm_verdict: {verdict.verdict} (d={verdict.d}, hadamard_rank={verdict.hadamard_rank})")
    return verdict


def assert_mutually_exclusive(verdict: HmVerdict, certificate_accepted: bool) -> None:
    """
    A matrix cannot be both certified factorizable and proven non-factorizable.

    Raises:
        ConsistencyError: If both happen for the same matrix.
    """
    if verdict.not_factorizable and certificate_accepted:
        raise ConsistencyError(
            "A certificate was accepted for a matrix the criterion proves not factorizable"
        )
