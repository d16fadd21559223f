"""Exact and floating-point scalar arithmetic."""

from arithmetic.scalars import (
    ExactScalar,
    ComplexFloat,
    CapacityError,
    ConsistencyError,
    exact_arith,
    to_float,
    to_complex,
    approx_equal,
    is_exact,
    root_of_unity_12,
    I,
    J,
    SQRT2,
    SQRT3,
    SQRT6,
)

__all__ = [
    "ExactScalar",
    "ComplexFloat",
    "CapacityError",
    "ConsistencyError",
    "exact_arith",
    "to_float",
    "to_complex",
    "approx_equal",
    "is_exact",
    "root_of_unity_12",
    "I",
    "J",
    "SQRT2",
    "SQRT3",
    "SQRT6",
]
