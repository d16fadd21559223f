"""
Gram (Kraus) decompositions of positive semidefinite matrices.

Outer products follow (x (x) y)[i][j] = x_i * y_j, and a decomposition
satisfies A = sum_k conj(phi(k)) (x) phi(k).
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

import numpy as np

import config
from arithmetic.scalars import ExactScalar
from linalg.eigen import EigenResult, as_complex_matrix, hermitian_eigen

logger = logging.getLogger(__name__)


class NotPositiveSemidefiniteError(ValueError):
    """Raised when a matrix has an eigenvalue below -tol * ||A||."""


@dataclass
class GramDecomposition:
    """Rank d and Gram vectors phi(1..d) stored as the rows of `vectors`."""
    d: int
    vectors: np.ndarray
    eigen: EigenResult
    reconstruction_error: float

    def reconstruct(self) -> np.ndarray:
        return reconstruct(self.vectors)


def reconstruct(vectors: np.ndarray) -> np.ndarray:
    """sum_k conj(phi(k)) (x) phi(k)."""
    n = vectors.shape[1] if vectors.ndim == 2 else 0
    total = np.zeros((n, n), dtype=np.complex128)
    for phi in vectors:
        total += np.outer(np.conj(phi), phi)
    return total


def gram_vectors(matrix: Any, tol: Optional[float] = None) -> GramDecomposition:
    """
    Extract Gram vectors phi(k) = sqrt(lambda_k) * conj(u_k).

    Only eigenpairs with lambda_k > tol * lambda_max are kept, so d is the
    numerical rank of A.

    Args:
        matrix: Hermitian PSD matrix
        tol: Relative tolerance (default config.DEFAULT_TOL)

    Returns:
        GramDecomposition with vectors in descending eigenvalue order.

    Raises:
        NotPositiveSemidefiniteError: If an eigenvalue is below -tol * ||A||_F.
    """
    tol = config.DEFAULT_TOL if tol is None else tol
    a = as_complex_matrix(matrix)
    eigen = hermitian_eigen(a)
    norm = float(np.linalg.norm(a))
    n = a.shape[0]

    if n and eigen.eigenvalues[-1] < -tol * max(norm, 1.0):
        raise NotPositiveSemidefiniteError(
            f"Matrix is not positive semidefinite (min eigenvalue {eigen.eigenvalues[-1]:.3e})"
        )

    lambda_max = float(eigen.eigenvalues[0]) if n else 0.0
    keep = [k for k in range(n) if eigen.eigenvalues[k] > tol * lambda_max and lambda_max > 0]
    vectors = np.array(
        [np.sqrt(eigen.eigenvalues[k]) * np.conj(eigen.eigenvectors[:, k]) for k in keep],
        dtype=np.complex128,
    ).reshape(len(keep), n)

    error = float(np.linalg.norm(reconstruct(vectors) - a)) if n else 0.0
    if error > config.GRAM_RECONSTRUCTION_TOL * max(norm, 1.0):
        logger.warning(f"Gram reconstruction error {error:.3e} is above tolerance")
    logger.debug(f"Gram decomposition of a {n}x{n} matrix has rank {len(keep)}")
    return GramDecomposition(len(keep), vectors, eigen, error)


def hadamard_rows(vectors: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """
    Rows conj(phi(k)) o phi(l) for (k, l) in lexicographic order.

    Works on exact or float entries.
    """
    def conj(x):
        return x.conj() if isinstance(x, ExactScalar) else np.conj(x)

    rows = []
    for phi_k in vectors:
        for phi_l in vectors:
            rows.append([conj(a) * b for a, b in zip(phi_k, phi_l)])
    return rows


def hadamard_family(dec: GramDecomposition) -> np.ndarray:
    """d^2 x n matrix whose row (k, l) is conj(phi(k)) o phi(l)."""
    d, n = dec.vectors.shape
    if d == 0:
        return np.zeros((0, n), dtype=np.complex128)
    left = np.conj(dec.vectors)[:, None, :]
    right = dec.vectors[None, :, :]
    return (left * right).reshape(d * d, n)


def kraus_operators(dec: GramDecomposition) -> List[np.ndarray]:
    """Diagonal operators a_k = diag(phi(k)) realizing the Schur multiplier of A."""
    return [np.diag(phi) for phi in dec.vectors]


def apply_kraus(operators: Sequence[np.ndarray], x: Any) -> np.ndarray:
    """x -> sum_k a_k^* x a_k."""
    x = np.asarray(x, dtype=np.complex128)
    total = np.zeros_like(x)
    for a in operators:
        total += a.conj().T @ x @ a
    return total
