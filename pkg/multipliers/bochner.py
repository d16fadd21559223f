"""
Bochner transform on finite abelian groups.

mu(chi) = (1/n) sum_t u(t) conj(chi(t)) and u(t) = sum_chi mu(chi) chi(t).
u is positive definite exactly when every weight mu(chi) is nonnegative.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

import config
from arithmetic.scalars import ExactScalar, to_complex
from groups.dual_group import DualGroup, dual_group
from groups.finite_group import FiniteGroup
from multipliers.herz_schur import GroupFunction, make_group_function, scalar_to_json

logger = logging.getLogger(__name__)


@dataclass
class SpectralMeasure:
    """
    Weights on the characters of a finite abelian group.

    `weights` is always the float image; `exact_weights` is set when the
    measure was computed in exact arithmetic.
    """
    dual: DualGroup
    weights: np.ndarray
    exact_weights: Optional[List[ExactScalar]] = None

    @property
    def order(self) -> int:
        return self.dual.order

    def total(self) -> complex:
        return complex(np.sum(self.weights))

    def is_real(self, tol: Optional[float] = None) -> bool:
        tol = config.DEFAULT_TOL if tol is None else tol
        return bool(np.all(np.abs(self.weights.imag) <= tol))

    def is_nonnegative(self, tol: Optional[float] = None) -> bool:
        tol = config.DEFAULT_TOL if tol is None else tol
        return self.is_real(tol) and bool(np.all(self.weights.real >= -tol))

    def is_probability(self, tol: Optional[float] = None) -> bool:
        tol = config.DEFAULT_TOL if tol is None else tol
        return self.is_nonnegative(tol) and abs(self.total() - 1.0) <= tol

    def real_weights(self) -> np.ndarray:
        return self.weights.real.copy()

    def to_json(self) -> Dict[str, Any]:
        values = self.exact_weights if self.exact_weights is not None else list(self.weights)
        return {
            "group": self.dual.base.name,
            "weights": [scalar_to_json(v) for v in values],
            "nonnegative": self.is_nonnegative(),
            "total": scalar_to_json(self.total()),
        }


def measure_from_weights(group: FiniteGroup, weights: Sequence[Any]) -> SpectralMeasure:
    """Wrap explicit character weights (float or exact) as a SpectralMeasure."""
    dual = dual_group(group)
    if len(weights) != dual.order:
        raise ValueError(f"Expected {dual.order} weights, got {len(weights)}")
    exact = None
    if all(isinstance(w, (ExactScalar, int, Fraction)) and not isinstance(w, bool) for w in weights):
        exact = [ExactScalar.coerce(w) for w in weights]
    array = np.array([to_complex(w) for w in weights], dtype=np.complex128)
    return SpectralMeasure(dual, array, exact)


def bochner_measure(group: FiniteGroup, u: GroupFunction) -> SpectralMeasure:
    """
    Inverse Fourier transform of u onto the dual group.

    Args:
        group: Finite abelian group
        u: Function on the group

    Returns:
        SpectralMeasure with mu(chi_k) = (1/n) sum_t u(t) conj(chi_k(t)).

    Raises:
        NotAbelianError: If the group is not abelian.
    """
    dual = dual_group(group)
    n = group.order
    if u.exact and dual.has_exact_values():
        table = dual.exact_characters()
        exact = []
        for k in range(n):
            total = ExactScalar.zero()
            for t in range(n):
                total = total + u(t) * table[k][t].conj()
            exact.append(total / n)
        weights = np.array([complex(w) for w in exact], dtype=np.complex128)
        measure = SpectralMeasure(dual, weights, exact)
    else:
        values = u.as_complex()
        weights = (dual.characters.conj() @ values) / n
        measure = SpectralMeasure(dual, weights)
    logger.debug(f"Bochner weights on {group.name}: {np.round(measure.weights, 12)}")
    return measure


def fourier_transform(measure: SpectralMeasure) -> GroupFunction:
    """u(t) = sum_chi mu(chi) chi(t)."""
    group = measure.dual.base
    if measure.exact_weights is not None and measure.dual.has_exact_values():
        table = measure.dual.exact_characters()
        values = []
        for t in range(group.order):
            total = ExactScalar.zero()
            for k, w in enumerate(measure.exact_weights):
                total = total + w * table[k][t]
            values.append(total)
        return make_group_function(group, values)
    values = measure.weights @ measure.dual.characters
    return make_group_function(group, [complex(v) for v in values])


def roundtrip_error(u: GroupFunction, measure: SpectralMeasure) -> float:
    """sup_t |u(t) - sum_chi mu(chi) chi(t)|."""
    recovered = measure.weights @ measure.dual.characters
    return float(np.max(np.abs(u.as_complex() - recovered)))
