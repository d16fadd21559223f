"""
Hermitian eigendecomposition by the cyclic complex Jacobi method.

The sweep order and the rotation formulas are fixed, so identical input
gives bit-identical output.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

import config

logger = logging.getLogger(__name__)


class NotHermitianError(ValueError):
    """Raised when a matrix expected to be Hermitian is not."""


class ConvergenceError(RuntimeError):
    """Raised when Jacobi sweeps fail to reduce the off-diagonal part."""


@dataclass
class EigenResult:
    """
    Eigenvalues in descending order with orthonormal eigenvectors as columns.

    Each eigenvector is phase-normalized so its first nonzero component is
    real and positive.
    """
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float
    sweeps: int = 0

    def to_json(self) -> dict:
        return {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "residual": float(self.residual),
            "sweeps": self.sweeps,
        }


def as_complex_matrix(matrix: Any) -> np.ndarray:
    """Float image of a matrix that may hold ExactScalar entries."""
    array = np.asarray(matrix)
    if array.dtype == object:
        array = np.vectorize(complex, otypes=[np.complex128])(array)
    array = np.array(array, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {array.shape}")
    return array


def hermitian_defect(matrix: np.ndarray) -> float:
    """max |A - A*| entrywise."""
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _normalize_phases(vectors: np.ndarray) -> np.ndarray:
    n = vectors.shape[0]
    out = vectors.copy()
    for k in range(vectors.shape[1]):
        column = out[:, k]
        scale = np.max(np.abs(column)) if n else 0.0
        for x in column:
            if abs(x) > 1e-12 * scale:
                out[:, k] = column * (abs(x) / x)
                break
    return out


def hermitian_eigen(
    matrix: Any,
    hermitian_tol: Optional[float] = None,
    max_sweeps: Optional[int] = None,
) -> EigenResult:
    """
    Diagonalize a Hermitian matrix.

    Args:
        matrix: Square Hermitian matrix (complex, real or ExactScalar entries)
        hermitian_tol: Allowed |A - A*| relative to max(1, ||A||_F)
        max_sweeps: Sweep limit (default config.EIGEN_MAX_SWEEPS)

    Returns:
        EigenResult with descending eigenvalues.

    Raises:
        NotHermitianError: If A is not Hermitian within tolerance.
        ConvergenceError: If the sweeps do not converge.
    """
    hermitian_tol = config.HERMITIAN_TOL if hermitian_tol is None else hermitian_tol
    max_sweeps = config.EIGEN_MAX_SWEEPS if max_sweeps is None else max_sweeps

    original = as_complex_matrix(matrix)
    n = original.shape[0]
    norm = float(np.linalg.norm(original))
    defect = hermitian_defect(original)
    if defect > hermitian_tol * max(1.0, norm):
        raise NotHermitianError(f"Matrix is not Hermitian (max |A - A*| = {defect:.3e})")

    a = (original + original.conj().T) / 2
    v = np.eye(n, dtype=np.complex128)
    threshold = config.EIGEN_OFFDIAG_THRESHOLD * norm
    skip = threshold / n if n else 0.0

    sweeps = 0
    while True:
        off = _offdiag_norm(a)
        if off <= threshold:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge after {max_sweeps} sweeps (off-diagonal norm {off:.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                magnitude = abs(apq)
                if magnitude <= skip:
                    continue
                phase = np.conj(apq / magnitude)
                tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q] * phase
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q

                row_p = a[p, :].copy()
                row_q = a[q, :] * np.conj(phase)
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vp = v[:, p].copy()
                vq = v[:, q] * phase
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        logger.debug(f"Jacobi sweep {sweeps}: off-diagonal norm {off:.3e}")

    eigenvalues = a.diagonal().real.copy()
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = _normalize_phases(v[:, order])
    residual = float(np.linalg.norm(original @ vectors - vectors * eigenvalues))
    if residual > config.EIGEN_RESIDUAL_TOL * max(1.0, norm):
        logger.warning(f"Eigen residual {residual:.3e} exceeds {config.EIGEN_RESIDUAL_TOL:.0e} * ||A||")
    return EigenResult(eigenvalues, vectors, residual, sweeps)
