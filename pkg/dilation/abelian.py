"""
Truncated dilation model for Fourier multipliers on finite abelian groups.

Given a unital positive definite u on G with Bochner measure mu on the
dual group, functions on Ghat x Ghat^K carry:

    J f(t, s)  = f(t)
    U F(t, s)  = F(t - s_0, s_1, ..., s_{K-1}, e)
    E_J F(t)   = sum_s nu(s) F(t, s),   nu = mu^K

and E_J U^k J f = mu^{*k} * f for every k <= K. Characters are indexed like
the elements of G (see groups.dual_group), so "t - s" on the dual group is
read from the Cayley table of G.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

import config
from arithmetic.scalars import CapacityError
from groups.dual_group import DualGroup
from groups.finite_group import FiniteGroup
from multipliers.bochner import SpectralMeasure, bochner_measure
from multipliers.herz_schur import GroupFunction

logger = logging.getLogger(__name__)


class NotPositiveDefiniteError(ValueError):
    """Raised when u has no probability measure as its Bochner transform."""


def _subtraction_table(dual: DualGroup) -> np.ndarray:
    """sub[t, s] = index of t - s on the dual group."""
    cayley = np.array(dual.base.cayley, dtype=np.intp)
    inv = np.array(dual.base.inv, dtype=np.intp)
    return cayley[:, inv]


def convolve(dual: DualGroup, mu: np.ndarray, f: np.ndarray) -> np.ndarray:
    """(mu * f)(t) = sum_s mu(s) f(t - s)."""
    sub = _subtraction_table(dual)
    return f[sub] @ mu


def convolution_power(measure: SpectralMeasure, k: int) -> SpectralMeasure:
    """
    k-fold convolution of a measure on the dual group.

    k = 0 gives the point mass at the trivial character.
    """
    if k < 0:
        raise ValueError(f"Convolution power must be nonnegative, got {k}")
    n = measure.order
    result = np.zeros(n, dtype=np.complex128)
    result[0] = 1.0
    for _ in range(k):
        result = convolve(measure.dual, measure.weights, result)
    return SpectralMeasure(measure.dual, result)


@dataclass
class DilationModel:
    """Ghat x Ghat^K realization of (J, U, E_J) for the measure mu."""
    group: FiniteGroup
    measure: SpectralMeasure
    K: int
    u: Optional[GroupFunction] = None
    _sub: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.K < 1:
            raise ValueError(f"Truncation depth must be at least 1, got {self.K}")
        self._sub = _subtraction_table(self.measure.dual)

    @property
    def dual(self) -> DualGroup:
        return self.measure.dual

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def state_shape(self) -> tuple:
        return (self.n,) * (self.K + 1)

    @property
    def weights(self) -> np.ndarray:
        return self.measure.real_weights()

    def lift(self, f: Sequence[Any]) -> np.ndarray:
        """J f: constant along the fiber."""
        f = np.asarray(f, dtype=np.complex128)
        if f.shape != (self.n,):
            raise ValueError(f"Expected a function on {self.n} characters, got shape {f.shape}")
        shaped = f.reshape((self.n,) + (1,) * self.K)
        return np.broadcast_to(shaped, self.state_shape).copy()

    def step(self, state: np.ndarray) -> np.ndarray:
        """U: shift the fiber left, translate by s_0, fill the last slot with e."""
        filled = state[..., 0]
        return filled[self._sub]

    def expect(self, state: np.ndarray) -> np.ndarray:
        """E_J: integrate every fiber coordinate against mu."""
        result = state
        for _ in range(self.K):
            result = result @ self.weights
        return result

    def trace(self, state: np.ndarray) -> complex:
        """Integral against (normalized counting on Ghat) x nu."""
        return complex(np.mean(self.expect(state)))

    def power(self, f: Sequence[Any], k: int) -> np.ndarray:
        """E_J U^k J f through materialized state arrays."""
        self._check_power(k)
        state = self.lift(f)
        for _ in range(k):
            state = self.step(state)
        return self.expect(state)

    def power_direct(self, f: Sequence[Any], k: int) -> np.ndarray:
        """E_J U^k J f by summing f(t - s_0 - ... - s_{k-1}) over s directly."""
        self._check_power(k)
        f = np.asarray(f, dtype=np.complex128)
        weights = self.weights
        cayley = self.group.cayley
        inv = self.group.inv
        out = np.zeros(self.n, dtype=np.complex128)
        for s in itertools.product(range(self.n), repeat=k):
            weight = 1.0
            shift = 0
            for s_i in s:
                weight *= weights[s_i]
                shift = cayley[shift][s_i]
            if weight == 0.0:
                continue
            back = inv[shift]
            for t in range(self.n):
                out[t] += weight * f[cayley[t][back]]
        return out

    def multiplier_power(self, f: Sequence[Any], k: int) -> np.ndarray:
        """T^k f = mu^{*k} * f."""
        mu_k = convolution_power(self.measure, k).weights
        return convolve(self.dual, mu_k, np.asarray(f, dtype=np.complex128))

    def _check_power(self, k: int) -> None:
        if k < 0 or k > self.K:
            raise ValueError(f"Power {k} is outside 0..{self.K} for this truncation")


def build_dilation(
    group: FiniteGroup,
    u: GroupFunction,
    K: int,
    tol: Optional[float] = None,
    state_cap: Optional[int] = None,
) -> DilationModel:
    """
    Build the truncated dilation model for u.

    Args:
        group: Finite abelian group
        u: Unital positive definite function on the group
        K: Truncation depth (powers up to K are exact)
        tol: Tolerance for the probability check of the Bochner measure
        state_cap: Largest allowed |G|^(K+1) (default config.DILATION_STATE_CAP)

    Returns:
        DilationModel

    Raises:
        NotPositiveDefiniteError: If the Bochner measure is not a probability measure.
        CapacityError: If the state arrays would exceed the cap.
        NotAbelianError: If the group is not abelian.
    """
    tol = config.DEFAULT_TOL if tol is None else tol
    state_cap = config.DILATION_STATE_CAP if state_cap is None else state_cap
    if K < 1:
        raise ValueError(f"Truncation depth must be at least 1, got {K}")
    size = group.order ** (K + 1)
    if size > state_cap:
        raise CapacityError(f"State array of {size} entries exceeds the cap of {state_cap}")

    measure = bochner_measure(group, u)
    if not measure.is_probability(tol):
        raise NotPositiveDefiniteError(
            f"u is not unital positive definite on {group.name}: Bochner weights {np.round(measure.weights, 12).tolist()}"
        )
    logger.info(f"Built dilation model on {group.name} with K={K} ({size} states)")
    return DilationModel(group, measure, K, u)


def dilation_residual(model: DilationModel, k: int, f: Sequence[Any], evaluator: str = "array") -> float:
    """
    sup-norm distance between E_J U^k J f and mu^{*k} * f.

    Args:
        model: Dilation model
        k: Power, 0 <= k <= K
        f: Function on the dual group
        evaluator: "array" for the state-array path, "direct" for the summation oracle

    Raises:
        ValueError: If k > K or the evaluator is unknown.
    """
    if evaluator == "array":
        lhs = model.power(f, k)
    elif evaluator == "direct":
        lhs = model.power_direct(f, k)
    else:
        raise ValueError(f"Unknown evaluator: {evaluator}")
    rhs = model.multiplier_power(f, k)
    return float(np.max(np.abs(lhs - rhs))) if lhs.size else 0.0


def evaluator_gap(model: DilationModel, k: int, f: Sequence[Any]) -> float:
    """sup-norm distance between the two evaluators of E_J U^k J f."""
    return float(np.max(np.abs(model.power(f, k) - model.power_direct(f, k))))


def character_test_function(model: DilationModel, t: int) -> np.ndarray:
    """e_t(chi) = conj(chi(t)); the multiplier T scales it by u(t)."""
    return np.conj(model.dual.characters[:, t])


def fourier_coefficient(model: DilationModel, k: int, t: int) -> complex:
    """
    Coefficient of e_t in E_J U^k J e_t, which equals u(t)^k.
    """
    e_t = character_test_function(model, t)
    image = model.power(e_t, k)
    return complex(np.vdot(e_t, image) / model.n)


def residual_table(model: DilationModel) -> List[Dict[str, Any]]:
    """Max residual and evaluator gap over all delta_chi, for k = 0..K."""
    rows = []
    basis = np.eye(model.n)
    for k in range(model.K + 1):
        residual = max(dilation_residual(model, k, f) for f in basis)
        gap = max(evaluator_gap(model, k, f) for f in basis)
        rows.append({"k": k, "residual": residual, "evaluator_gap": gap})
        logger.debug(f"k={k}: residual {residual:.3e}, evaluator gap {gap:.3e}")
    return rows
