"""Hermitian eigensolver, Gram decompositions and exact/float rank."""

from linalg.eigen import (
    EigenResult,
    NotHermitianError,
    ConvergenceError,
    hermitian_eigen,
    as_complex_matrix,
)
from linalg.gram import (
    GramDecomposition,
    NotPositiveSemidefiniteError,
    gram_vectors,
    hadamard_family,
    hadamard_rows,
    kraus_operators,
    apply_kraus,
    reconstruct,
)
from linalg.rank import (
    rank,
    exact_rank,
    float_rank,
    exact_determinant,
    characteristic_polynomial,
    polynomial_multiply,
    exact_matmul,
    to_exact_matrix,
)

__all__ = [
    "EigenResult",
    "NotHermitianError",
    "ConvergenceError",
    "hermitian_eigen",
    "as_complex_matrix",
    "GramDecomposition",
    "NotPositiveSemidefiniteError",
    "gram_vectors",
    "hadamard_family",
    "hadamard_rows",
    "kraus_operators",
    "apply_kraus",
    "reconstruct",
    "rank",
    "exact_rank",
    "float_rank",
    "exact_determinant",
    "characteristic_polynomial",
    "polynomial_multiply",
    "exact_matmul",
    "to_exact_matrix",
]
