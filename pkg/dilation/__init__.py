"""Abelian dilation model and Folner compressions."""

from dilation.abelian import (
    DilationModel,
    NotPositiveDefiniteError,
    build_dilation,
    character_test_function,
    convolution_power,
    convolve,
    dilation_residual,
    evaluator_gap,
    fourier_coefficient,
    residual_table,
)
from dilation.folner import (
    CompressionReport,
    FolnerWindow,
    boundary_identity,
    compress,
    convergence_table,
    folner_sequence,
    mult_defect,
    pairing_value,
    trace_identity,
)

__all__ = [
    "DilationModel",
    "NotPositiveDefiniteError",
    "build_dilation",
    "character_test_function",
    "convolution_power",
    "convolve",
    "dilation_residual",
    "evaluator_gap",
    "fourier_coefficient",
    "residual_table",
    "CompressionReport",
    "FolnerWindow",
    "boundary_identity",
    "compress",
    "convergence_table",
    "folner_sequence",
    "mult_defect",
    "pairing_value",
    "trace_identity",
]
