"""
Functions on finite groups, Herz-Schur matrices and multiplier actions.

The Herz-Schur matrix of u on G is A[s][t] = u(s t^-1), with rows and
columns in the group's enumeration order.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

import config
from arithmetic.scalars import ExactScalar, approx_equal, is_exact, to_complex
from groups.finite_group import FiniteGroup
from linalg.eigen import NotHermitianError, as_complex_matrix, hermitian_defect, hermitian_eigen

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupFunction:
    """
    A function u: G -> scalars, one value per element in enumeration order.

    Values are either all ExactScalar or all Python complex; mixed input is
    promoted to complex by make_group_function.
    """
    group: FiniteGroup
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise ValueError(
                f"{self.group.name} has {self.group.order} elements but u has {len(self.values)} values"
            )

    def __call__(self, t: int) -> Any:
        return self.values[t]

    @property
    def exact(self) -> bool:
        return all(isinstance(v, ExactScalar) for v in self.values)

    def is_unital(self, tol: Optional[float] = None) -> bool:
        value = self.values[self.group.identity]
        if isinstance(value, ExactScalar):
            return value == 1
        return approx_equal(value, 1.0, tol)

    def is_symmetric(self, tol: Optional[float] = None) -> bool:
        """u(t^-1) = conj(u(t)) for all t, the condition for a Hermitian matrix."""
        for t in range(self.group.order):
            a = self.values[self.group.inv[t]]
            b = self.values[t]
            if self.exact:
                if a != b.conj():
                    return False
            elif not approx_equal(a, np.conj(b), tol):
                return False
        return True

    def as_complex(self) -> np.ndarray:
        return np.array([to_complex(v) for v in self.values], dtype=np.complex128)

    def to_float(self) -> "GroupFunction":
        return GroupFunction(self.group, tuple(complex(v) for v in self.as_complex()))

    def to_json(self) -> Dict[str, Any]:
        return {"group": self.group.name, "values": [scalar_to_json(v) for v in self.values]}


def scalar_to_json(value: Any) -> Any:
    if isinstance(value, ExactScalar):
        return value.to_json()
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def _float_pair(re: Any, im: Any, raw: Any) -> complex:
    if isinstance(re, bool) or isinstance(im, bool):
        raise ValueError(f"Malformed scalar {raw!r}")
    try:
        value = complex(float(re), float(im))
    except (TypeError, ValueError) as e:
        raise ValueError(f"Malformed scalar {raw!r}") from e
    if not np.isfinite(value):
        raise ValueError(f"Scalar must be finite: {raw!r}")
    return value


def parse_scalar(raw: Any) -> Any:
    """
    Parse one scalar from its JSON form.

    Accepted forms: a number, a rational string "p/q", a pair [re, im],
    {"re": x, "im": y} with numbers, or the exact form {"re": [4], "im": [4]}.

    Raises:
        ValueError: If the value cannot be parsed.
    """
    if isinstance(raw, bool):
        raise ValueError(f"Not a scalar: {raw!r}")
    if isinstance(raw, int):
        return ExactScalar.from_rational(raw)
    if isinstance(raw, float):
        return _float_pair(raw, 0.0, raw)
    if isinstance(raw, str):
        try:
            return ExactScalar.from_rational(Fraction(raw))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational scalar: {raw!r}") from e
    if isinstance(raw, (list, tuple)) and len(raw) == 2:
        re, im = raw
        if all(isinstance(x, int) and not isinstance(x, bool) for x in (re, im)):
            return ExactScalar(re=(re, 0, 0, 0), im=(im, 0, 0, 0))
        return _float_pair(re, im, raw)
    if isinstance(raw, dict):
        re = raw.get("re", 0)
        im = raw.get("im", 0)
        if isinstance(re, list):
            return ExactScalar.from_json(raw)
        if isinstance(re, str) or isinstance(im, str):
            try:
                return ExactScalar(re=(Fraction(str(re)), 0, 0, 0), im=(Fraction(str(im)), 0, 0, 0))
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"Malformed scalar {raw!r}") from e
        if isinstance(re, int) and isinstance(im, int) and not isinstance(re, bool) and not isinstance(im, bool):
            return ExactScalar(re=(re, 0, 0, 0), im=(im, 0, 0, 0))
        return _float_pair(re, im, raw)
    raise ValueError(f"Not a scalar: {raw!r}")


def make_group_function(group: FiniteGroup, values: Sequence[Any]) -> GroupFunction:
    """
    Build a GroupFunction, keeping exact values exact unless any input is a float.
    """
    values = list(values)
    if all(is_exact(v) for v in values):
        return GroupFunction(group, tuple(ExactScalar.coerce(v) for v in values))
    return GroupFunction(group, tuple(to_complex(v) for v in values))


def parse_group_function(group: FiniteGroup, data: Any) -> GroupFunction:
    """
    Parse u from JSON: a list of scalars or {"group": ..., "values": [...]}.

    Raises:
        ValueError: For malformed input or a group name mismatch.
    """
    if isinstance(data, dict):
        name = data.get("group")
        if name is not None and name != group.name:
            raise ValueError(f"u is given on {name} but the group is {group.name}")
        if "values" not in data:
            raise ValueError("u needs a 'values' list")
        data = data["values"]
    if not isinstance(data, list):
        raise ValueError("u must be a JSON list of values")
    return make_group_function(group, [parse_scalar(v) for v in data])


def _matrix(values: List[List[Any]], exact: bool) -> np.ndarray:
    if exact:
        array = np.empty((len(values), len(values)), dtype=object)
        for i, row in enumerate(values):
            for j, v in enumerate(row):
                array[i, j] = v
        return array
    return np.array(values, dtype=np.complex128)


@dataclass
class HerzSchurMatrix:
    """A[s][t] = u(s t^-1) together with the (G, u) it came from."""
    group: FiniteGroup
    u: GroupFunction
    matrix: np.ndarray = field(repr=False)

    @property
    def exact(self) -> bool:
        return self.u.exact

    def to_complex(self) -> np.ndarray:
        return as_complex_matrix(self.matrix)

    def is_hermitian(self, tol: Optional[float] = None) -> bool:
        return self.u.is_symmetric(tol)

    def to_json(self) -> List[List[Any]]:
        return [[scalar_to_json(v) for v in row] for row in self.matrix]


def herz_schur_matrix(group: FiniteGroup, u: GroupFunction) -> HerzSchurMatrix:
    """
    Build the Herz-Schur matrix of u.

    Args:
        group: Finite group
        u: Function on the group

    Returns:
        HerzSchurMatrix with entries u(s t^-1).
    """
    if u.group is not group and u.group.cayley != group.cayley:
        raise ValueError(f"u is defined on {u.group.name}, not {group.name}")
    n = group.order
    rows = [[u(group.cayley[s][group.inv[t]]) for t in range(n)] for s in range(n)]
    return HerzSchurMatrix(group, u, _matrix(rows, u.exact))


@dataclass
class UcpReport:
    """Result of the unital complete positivity check."""
    unital: bool
    positive_definite: bool
    min_eigenvalue: Optional[float]
    hermitian: bool = True
    reason: str = ""
    eigenvalues: List[float] = field(default_factory=list)

    @property
    def ucp(self) -> bool:
        return self.unital and self.positive_definite

    def to_json(self) -> Dict[str, Any]:
        return {
            "unital": self.unital,
            "positive_definite": self.positive_definite,
            "min_eigenvalue": self.min_eigenvalue,
            "hermitian": self.hermitian,
            "reason": self.reason,
            "eigenvalues": self.eigenvalues,
        }


def check_ucp(group: FiniteGroup, u: GroupFunction, tol: Optional[float] = None) -> UcpReport:
    """
    Decide whether M_u is unital and completely positive.

    For a finite group, u is positive definite iff its full Herz-Schur
    matrix is positive semidefinite.

    Args:
        group: Finite group
        u: Function on the group
        tol: Relative eigenvalue tolerance (default config.DEFAULT_TOL)

    Returns:
        UcpReport; a non-Hermitian matrix is reported as not positive.
    """
    tol = config.DEFAULT_TOL if tol is None else tol
    unital = u.is_unital(tol)
    a = herz_schur_matrix(group, u).to_complex()
    norm = float(np.linalg.norm(a))

    defect = hermitian_defect(a)
    if defect > tol * max(1.0, norm):
        logger.info(f"Herz-Schur matrix on {group.name} is not Hermitian (defect {defect:.3e})")
        return UcpReport(unital, False, None, hermitian=False, reason="non-Hermitian")

    try:
        eigen = hermitian_eigen(a, hermitian_tol=tol)
    except NotHermitianError:
        return UcpReport(unital, False, None, hermitian=False, reason="non-Hermitian")

    min_eigenvalue = float(eigen.eigenvalues[-1])
    positive = min_eigenvalue >= -tol * max(1.0, norm)
    reason = "" if positive else "negative eigenvalue"
    if not unital:
        reason = "u(e) != 1" if positive else f"{reason}; u(e) != 1"
    logger.info(f"check_ucp on {group.name}: unital={unital}, min eigenvalue={min_eigenvalue:.3e}")
    return UcpReport(unital, positive, min_eigenvalue, True, reason,
                     [float(v) for v in eigen.eigenvalues])


def apply_schur(a: Any, x: Any) -> np.ndarray:
    """
    Entrywise (Schur) product A o x.

    Args:
        a: HerzSchurMatrix or raw n x n matrix
        x: n x n matrix

    Returns:
        The product; exact when both operands are exact.

    Raises:
        ValueError: On a dimension mismatch.
    """
    matrix = a.matrix if isinstance(a, HerzSchurMatrix) else np.asarray(a)
    x = np.asarray(x)
    if matrix.shape != x.shape:
        raise ValueError(f"Schur multiplier of shape {matrix.shape} cannot act on {x.shape}")
    if matrix.dtype == object or x.dtype == object:
        if x.dtype.kind in "iu":
            x = x.astype(object)
        if matrix.dtype.kind in "iu":
            matrix = matrix.astype(object)
        if matrix.dtype.kind in "fc" or x.dtype.kind in "fc":
            return as_complex_matrix(matrix) * as_complex_matrix(x)
        return matrix * x
    return matrix * x


def apply_fourier(u: GroupFunction, coeffs: Sequence[Any], k: int = 1) -> List[Any]:
    """
    Apply M_u^k to x = sum_t coeffs(t) lambda(t), coefficientwise.

    Raises:
        ValueError: If k is negative or the coefficient count is wrong.
    """
    if k < 0:
        raise ValueError(f"Power must be nonnegative, got {k}")
    coeffs = list(coeffs)
    if len(coeffs) != u.group.order:
        raise ValueError(f"Expected {u.group.order} coefficients, got {len(coeffs)}")
    if k == 0:
        return coeffs
    out = []
    for value, c in zip(u.values, coeffs):
        if isinstance(value, ExactScalar) and is_exact(c):
            out.append((value ** k) * ExactScalar.coerce(c))
        else:
            out.append(complex(value) ** k * to_complex(c))
    return out


def plancherel_trace(group: FiniteGroup, coeffs: Sequence[Any]) -> Any:
    """tau_G(sum_t coeffs(t) lambda(t)) = coeffs(e)."""
    return coeffs[group.identity]
