"""
Folner windows and compressions of the left regular representation.

For a finite window F the compression of lambda(s) is the |F| x |F| 0/1
matrix with entry (p, q) = 1 iff F[p] = s F[q]. All quantities here are
counts divided by |F| and are returned as exact Fractions.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Union

import numpy as np

import config
from arithmetic.scalars import ConsistencyError, ExactScalar, is_exact
from groups.finite_group import FiniteGroup
from groups.integer_group import IntegerGroup

logger = logging.getLogger(__name__)

WindowGroup = Union[FiniteGroup, IntegerGroup]


@dataclass(frozen=True)
class FolnerWindow:
    """A finite, duplicate-free list of group elements."""
    group: WindowGroup
    elements: tuple
    _position: Dict[Any, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.elements:
            raise ValueError("A window must be non-empty")
        position = {}
        for p, x in enumerate(self.elements):
            if not self.group.contains(x):
                raise ValueError(f"{x!r} is not an element of {self.group.name}")
            if x in position:
                raise ValueError(f"Duplicate element {x!r} in window")
            position[x] = p
        object.__setattr__(self, "_position", position)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Any) -> bool:
        return x in self._position

    def position(self, x: Any) -> Optional[int]:
        return self._position.get(x)

    def translate(self, g: Any) -> set:
        """The set gF."""
        _require_element(self.group, "g", g)
        return {self.group.multiply(g, x) for x in self.elements}

    def to_json(self) -> Dict[str, Any]:
        return {"group": self.group.name, "size": self.size, "elements": list(self.elements)}


@dataclass
class CompressionReport:
    """Multiplicativity defect of the compression for the pair (s, t)."""
    s: Any
    t: Any
    defect_sq: Fraction
    bound: Fraction
    intersect_ratio: Fraction

    def to_json(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "t": self.t,
            "defect_sq": str(self.defect_sq),
            "bound": str(self.bound),
            "intersect_ratio": str(self.intersect_ratio),
        }


def compress(window: FolnerWindow, s: Any) -> np.ndarray:
    """
    Compression of lambda(s) to the window.

    Returns:
        |F| x |F| integer matrix with entry (p, q) = 1 iff F[p] = s F[q].
    """
    if not window.group.contains(s):
        raise ValueError(f"{s!r} is not an element of {window.group.name}")
    m = window.size
    matrix = np.zeros((m, m), dtype=np.int64)
    for q, x in enumerate(window.elements):
        p = window.position(window.group.multiply(s, x))
        if p is not None:
            matrix[p, q] = 1
    return matrix


def trace_identity(window: FolnerWindow, s: Any) -> Fraction:
    """Normalized trace of compress(window, s): 1 for s = e, else 0."""
    return Fraction(int(np.trace(compress(window, s))), window.size)


def _require_element(group: Any, name: str, value: Any) -> None:
    if not group.contains(value):
        raise ValueError(f"{name}={value!r} is not an element of {group.name}")


def _ratio(count: int, window: FolnerWindow) -> Fraction:
    return Fraction(count, window.size)


def mult_defect(window: FolnerWindow, s: Any, t: Any) -> CompressionReport:
    """
    Defect of compress(st) against compress(s) compress(t).

    defect_sq counts q in F with stq in F but tq not in F; it equals the
    normalized Hilbert-Schmidt norm squared of the matrix difference.

    Raises:
        ValueError: If s or t is not an element of the window's group.
        ConsistencyError: If the count and the matrix computation disagree.
    """
    g = window.group
    _require_element(g, "s", s)
    _require_element(g, "t", t)
    st = g.multiply(s, t)
    lost = 0
    for q in window.elements:
        tq = g.multiply(t, q)
        if g.multiply(s, tq) in window and tq not in window:
            lost += 1
    defect_sq = _ratio(lost, window)

    difference = compress(window, st) - compress(window, s) @ compress(window, t)
    direct = _ratio(int(np.sum(difference * difference)), window)
    if direct != defect_sq:
        raise ConsistencyError(f"Defect count {defect_sq} disagrees with matrix norm {direct}")

    elements = set(window.elements)
    t_inv_f = window.translate(g.inverse(t))
    bound = _ratio(len(elements ^ t_inv_f), window)
    intersect = _ratio(len(elements & window.translate(t)), window)
    logger.debug(f"mult_defect(s={s}, t={t}, |F|={window.size}): {defect_sq} <= {bound}")
    return CompressionReport(s, t, defect_sq, bound, intersect)


def boundary_identity(window: FolnerWindow, g_elem: Any) -> Dict[str, Fraction]:
    """
    Both Folner ratios for g, checked against |F n gF|/|F| = 1 - |F (+) gF| / (2|F|).

    Raises:
        ConsistencyError: If the identity fails.
    """
    elements = set(window.elements)
    shifted = window.translate(g_elem)
    intersect = _ratio(len(elements & shifted), window)
    symmetric = _ratio(len(elements ^ shifted), window)
    if intersect != 1 - symmetric / 2:
        raise ConsistencyError(f"Folner ratios {intersect} and {symmetric} are inconsistent")
    return {"intersect_ratio": intersect, "symmetric_difference_ratio": symmetric}


def _values_agree(a: Any, b: Any) -> bool:
    if is_exact(a) and is_exact(b):
        return ExactScalar.coerce(a) == ExactScalar.coerce(b)
    return abs(complex(a) - complex(b)) <= config.CONSISTENCY_TOL * max(1.0, abs(complex(a)))


def pairing_value(window: FolnerWindow, u: Callable[[Any], Any], k: int, s: Any, t: Any) -> Any:
    """
    tau_F(T_F^k(compress(t)) compress(s)) where T_F is the Schur multiplier
    with symbol u(F[p] F[q]^-1).

    Computed from the matrices and from the closed form
    u(t)^k |F n tF| / |F| (zero unless s = t^-1); the two must agree.

    Args:
        window: Folner window
        u: Function on the group (callable on elements)
        k: Nonnegative power
        s, t: Group elements

    Returns:
        The matrix value (exact when u is exact).

    Raises:
        ConsistencyError: If the two evaluations disagree.
    """
    if k < 0:
        raise ValueError(f"Power must be nonnegative, got {k}")
    g = window.group
    elements = window.elements
    c_t = compress(window, t)
    c_s = compress(window, s)

    cache: Dict[Any, Any] = {}

    def symbol_power(x: Any) -> Any:
        if x not in cache:
            cache[x] = u(x) ** k
        return cache[x]

    # trace(X @ c_s) with X = symbol^k o c_t; only nonzero entries of c_s contribute
    direct: Any = 0
    rows, cols = np.nonzero(c_s)
    for r, p in zip(rows.tolist(), cols.tolist()):
        if c_t[p, r]:
            direct = direct + symbol_power(g.multiply(elements[p], g.inverse(elements[r])))
    if is_exact(direct):
        direct = Fraction(direct) if isinstance(direct, int) else direct
    direct = direct / window.size

    if g.multiply(s, t) == g.identity:
        overlap = len(set(elements) & window.translate(t))
        closed = u(t) ** k * Fraction(overlap, window.size)
    else:
        closed = 0
    if not _values_agree(direct, closed):
        raise ConsistencyError(f"Pairing mismatch: matrices give {direct}, closed form gives {closed}")
    return direct


def folner_sequence(group: WindowGroup, kind: str, n_max: Optional[int] = None) -> List[FolnerWindow]:
    """
    Standard Folner windows.

    Args:
        group: IntegerGroup for "intervals", FiniteGroup for "whole_group"
        kind: "intervals" (F_n = {0..n-1}, n = 1..n_max) or "whole_group"
        n_max: Largest interval length

    Raises:
        ValueError: For an invalid kind/group pairing.
    """
    if kind == "intervals":
        if not isinstance(group, IntegerGroup):
            raise ValueError("Interval windows are only defined for Z")
        if n_max is None or n_max < 1:
            raise ValueError(f"intervals need n_max >= 1, got {n_max}")
        if n_max > group.bound:
            raise ValueError(f"n_max {n_max} exceeds the integer window bound")
        return [FolnerWindow(group, tuple(range(n))) for n in range(1, n_max + 1)]
    if kind == "whole_group":
        if not isinstance(group, FiniteGroup):
            raise ValueError("whole_group windows need a finite group")
        return [FolnerWindow(group, tuple(range(group.order)))]
    raise ValueError(f"Unknown Folner sequence kind: {kind}")


def convergence_table(windows: List[FolnerWindow], s: Any, t: Any) -> List[Dict[str, Any]]:
    """One row per window: n, defect_sq, bound, intersect_ratio."""
    rows = []
    for window in windows:
        report = mult_defect(window, s, t)
        rows.append({
            "n": window.size,
            "defect_sq": str(report.defect_sq),
            "bound": str(report.bound),
            "intersect_ratio": str(report.intersect_ratio),
        })
    return rows
