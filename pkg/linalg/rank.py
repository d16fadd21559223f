"""
Exact and floating-point rank, determinant and characteristic polynomial.

The exact routines work on nested lists of ExactScalar using fraction-free
(Bareiss) elimination, so entries stay in the field without intermediate
reduction to a common denominator.
"""

import logging
from fractions import Fraction
from typing import Any, List, Optional, Sequence

import numpy as np

import config
from arithmetic.scalars import ExactScalar

logger = logging.getLogger(__name__)

ExactMatrix = List[List[ExactScalar]]


def to_exact_matrix(rows: Any) -> ExactMatrix:
    """
    Copy a matrix into a list of ExactScalar rows.

    Raises:
        TypeError: If an entry is not exact.
    """
    return [[ExactScalar.coerce(x) for x in row] for row in rows]


def _bareiss(matrix: ExactMatrix):
    """Fraction-free elimination. Returns (rank, last pivot, row swaps)."""
    m = [row[:] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    prev = ExactScalar.one()
    r = 0
    swaps = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if not m[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
            swaps += 1
        pivot = m[r][c]
        for i in range(r + 1, n_rows):
            lead = m[i][c]
            for j in range(c + 1, n_cols):
                m[i][j] = (pivot * m[i][j] - lead * m[r][j]) / prev
            m[i][c] = ExactScalar.zero()
        logger.debug(f"Bareiss pivot at ({r}, {c})")
        prev = pivot
        r += 1
    return r, prev, swaps


def exact_rank(rows: Any) -> int:
    """Rank over Q(i, sqrt2, sqrt3) of a matrix with exact entries."""
    matrix = to_exact_matrix(rows)
    if not matrix or not matrix[0]:
        return 0
    rank_value, _, _ = _bareiss(matrix)
    return rank_value


def exact_determinant(rows: Any) -> ExactScalar:
    """
    Determinant of a square exact matrix.

    Raises:
        ValueError: If the matrix is not square.
    """
    matrix = to_exact_matrix(rows)
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("Determinant needs a square matrix")
    if n == 0:
        return ExactScalar.one()
    rank_value, last, swaps = _bareiss(matrix)
    if rank_value < n:
        return ExactScalar.zero()
    return -last if swaps % 2 else last


def float_rank(rows: Any, tol: Optional[float] = None) -> int:
    """Number of singular values above tol * sigma_max."""
    tol = config.DEFAULT_TOL if tol is None else tol
    array = np.asarray(rows)
    if array.dtype == object:
        array = np.vectorize(complex, otypes=[np.complex128])(array)
    array = np.array(array, dtype=np.complex128)
    if array.size == 0:
        return 0
    singular = np.linalg.svd(array, compute_uv=False)
    sigma_max = float(singular[0])
    if sigma_max == 0.0:
        return 0
    return int(np.sum(singular > tol * sigma_max))


def rank(rows: Any, mode: str = "float", tol: Optional[float] = None) -> int:
    """
    Rank of a matrix.

    Args:
        rows: Matrix as nested sequences or an array
        mode: "exact" (ExactScalar entries required) or "float"
        tol: Relative singular value threshold for float mode

    Returns:
        The rank.
    """
    if mode == "exact":
        return exact_rank(rows)
    if mode == "float":
        return float_rank(rows, tol)
    raise ValueError(f"Unknown rank mode: {mode}")


def exact_matmul(a: Sequence[Sequence[ExactScalar]], b: Sequence[Sequence[ExactScalar]]) -> ExactMatrix:
    inner = len(b)
    cols = len(b[0]) if inner else 0
    result = []
    for row in a:
        out_row = []
        for j in range(cols):
            total = ExactScalar.zero()
            for k in range(inner):
                if not row[k].is_zero() and not b[k][j].is_zero():
                    total = total + row[k] * b[k][j]
            out_row.append(total)
        result.append(out_row)
    return result


def characteristic_polynomial(rows: Any) -> List[ExactScalar]:
    """
    Coefficients of det(xI - A), highest degree first, by Faddeev-LeVerrier.

    The leading coefficient is 1.
    """
    a = to_exact_matrix(rows)
    n = len(a)
    coeffs = [ExactScalar.one()]
    m = [[ExactScalar.zero() for _ in range(n)] for _ in range(n)]
    for k in range(1, n + 1):
        am = exact_matmul(a, m)
        for i in range(n):
            am[i][i] = am[i][i] + coeffs[-1]
        m = am
        product = exact_matmul(a, m)
        trace = sum((product[i][i] for i in range(n)), ExactScalar.zero())
        coeffs.append(-trace / Fraction(k))
    return coeffs


def polynomial_multiply(p: Sequence[ExactScalar], q: Sequence[ExactScalar]) -> List[ExactScalar]:
    """Product of two coefficient lists (highest degree first)."""
    if not p or not q:
        return []
    result = [ExactScalar.zero() for _ in range(len(p) + len(q) - 1)]
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            result[i + j] = result[i + j] + x * y
    return result
