"""Herz-Schur and Fourier multipliers on finite groups."""

from multipliers.herz_schur import (
    GroupFunction,
    HerzSchurMatrix,
    UcpReport,
    make_group_function,
    parse_group_function,
    parse_scalar,
    scalar_to_json,
    herz_schur_matrix,
    check_ucp,
    apply_schur,
    apply_fourier,
    plancherel_trace,
)
from multipliers.bochner import (
    SpectralMeasure,
    bochner_measure,
    fourier_transform,
    measure_from_weights,
    roundtrip_error,
)

__all__ = [
    "GroupFunction",
    "HerzSchurMatrix",
    "UcpReport",
    "SpectralMeasure",
    "make_group_function",
    "parse_group_function",
    "parse_scalar",
    "scalar_to_json",
    "herz_schur_matrix",
    "check_ucp",
    "apply_schur",
    "apply_fourier",
    "plancherel_trace",
    "bochner_measure",
    "fourier_transform",
    "measure_from_weights",
    "roundtrip_error",
]
