"""
Factorizability certificates.

A certificate is a family of m x m unitaries d_t, one per index, and the
normalized trace tau = trace / m. It certifies A when A[i][j] = tau(d_j^* d_i).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

import config
from groups.dual_group import dual_group
from groups.finite_group import FiniteGroup
from linalg.eigen import as_complex_matrix

logger = logging.getLogger(__name__)

DIRECT = "direct"
TRANSPOSED = "transposed"


@dataclass
class Certificate:
    """Unitaries d_t indexed like the rows of the matrix they certify."""
    index: tuple
    unitaries: List[np.ndarray] = field(repr=False)

    def __post_init__(self):
        if len(self.index) != len(self.unitaries):
            raise ValueError("A certificate needs one unitary per index")
        shapes = {u.shape for u in self.unitaries}
        if len(shapes) > 1:
            raise ValueError(f"Certificate unitaries have different shapes: {sorted(shapes)}")

    @property
    def m(self) -> int:
        return self.unitaries[0].shape[0] if self.unitaries else 0

    def trace(self, x: np.ndarray) -> complex:
        """Normalized trace on m x m matrices."""
        return complex(np.trace(x)) / self.m

    def gram(self) -> np.ndarray:
        """G[i][j] = tau(d_j^* d_i)."""
        n = len(self.unitaries)
        g = np.zeros((n, n), dtype=np.complex128)
        for i, di in enumerate(self.unitaries):
            for j, dj in enumerate(self.unitaries):
                g[i, j] = self.trace(dj.conj().T @ di)
        return g

    def unitarity_defect(self) -> float:
        identity = np.eye(self.m)
        return max((float(np.max(np.abs(d.conj().T @ d - identity))) for d in self.unitaries), default=0.0)


@dataclass
class CertificateResult:
    accepted: bool
    orientation: Optional[str]
    deviation: float
    reason: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {
            "accepted": self.accepted,
            "orientation": self.orientation,
            "deviation": self.deviation,
            "reason": self.reason,
        }


def verify_certificate(a: Any, cert: Certificate, tol: Optional[float] = None) -> CertificateResult:
    """
    Check A[i][j] = tau(d_j^* d_i) for all i, j.

    For Hermitian A the transposed orientation A[i][j] = tau(d_i^* d_j) is
    accepted as well; the result reports which one matched.

    Args:
        a: Matrix to certify
        cert: Certificate with one unitary per row of A
        tol: Absolute tolerance on unitarity and entries

    Returns:
        CertificateResult

    Raises:
        ValueError: If the certificate size does not match A.
    """
    tol = config.DEFAULT_TOL if tol is None else tol
    matrix = as_complex_matrix(a)
    if matrix.shape[0] != len(cert.unitaries):
        raise ValueError(
            f"Certificate has {len(cert.unitaries)} unitaries for a {matrix.shape[0]}x{matrix.shape[0]} matrix"
        )

    unitarity = cert.unitarity_defect()
    if unitarity > tol:
        return CertificateResult(False, None, unitarity, f"not unitary (defect {unitarity:.3e})")

    gram = cert.gram()
    direct = float(np.max(np.abs(matrix - gram))) if matrix.size else 0.0
    if direct <= tol:
        return CertificateResult(True, DIRECT, direct)

    hermitian = float(np.max(np.abs(matrix - matrix.conj().T))) <= tol if matrix.size else True
    transposed = float(np.max(np.abs(matrix - gram.T))) if matrix.size else 0.0
    if hermitian and transposed <= tol:
        return CertificateResult(True, TRANSPOSED, transposed)

    deviation = min(direct, transposed) if hermitian else direct
    logger.info(f"Certificate rejected: entry mismatch {deviation:.3e}")
    return CertificateResult(False, None, deviation, f"entry mismatch {deviation:.3e}")


def certificate_from_measure(group: FiniteGroup, counts: Sequence[int]) -> Certificate:
    """
    Certificate for the Herz-Schur multiplier of u = sum_chi (counts/m) chi.

    d_t = diag(chi(t) repeated counts(chi) times) with m = sum counts, so
    tau(d_j^* d_i) = u(i j^-1).

    Raises:
        ValueError: If counts are negative or sum to zero.
        NotAbelianError: If the group is not abelian.
    """
    dual = dual_group(group)
    counts = [int(c) for c in counts]
    if len(counts) != dual.order:
        raise ValueError(f"Expected {dual.order} counts, got {len(counts)}")
    if any(c < 0 for c in counts) or sum(counts) == 0:
        raise ValueError("Counts must be nonnegative with a positive sum")
    unitaries = []
    for t in range(group.order):
        diagonal = np.repeat(dual.characters[:, t], counts)
        unitaries.append(np.diag(diagonal))
    return Certificate(tuple(range(group.order)), unitaries)


def certificate_from_json(data: Any) -> Certificate:
    """
    Parse {"unitaries": [[[entry, ...], ...], ...]} with entries as numbers,
    [re, im] pairs or {"re", "im"} objects.

    Raises:
        ValueError: For malformed input.
    """
    if not isinstance(data, dict) or "unitaries" not in data:
        raise ValueError("Certificate JSON needs a 'unitaries' list")

    def entry(raw: Any) -> complex:
        if isinstance(raw, (int, float)) and not isinstance(raw, bool):
            return complex(raw)
        if isinstance(raw, (list, tuple)) and len(raw) == 2:
            return complex(float(raw[0]), float(raw[1]))
        if isinstance(raw, dict):
            return complex(float(raw.get("re", 0)), float(raw.get("im", 0)))
        raise ValueError(f"Malformed certificate entry {raw!r}")

    try:
        unitaries = [as_complex_matrix([[entry(x) for x in row] for row in d]) for d in data["unitaries"]]
    except TypeError as e:
        raise ValueError(f"Malformed certificate: {e}") from e
    index = tuple(data.get("index", range(len(unitaries))))
    return Certificate(index, unitaries)
