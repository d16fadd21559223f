"""
Finite groups stored as Cayley tables.

Every builder puts the identity at index 0. Elements are referenced by
their index; labels are only for display and JSON export.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

import config

logger = logging.getLogger(__name__)

# Element order of S3 used throughout: 1, (123), (132), (12), (23), (31)
# as one-line images of (0, 1, 2)
S3_ENUMERATION: Tuple[Tuple[str, Tuple[int, ...]], ...] = (
    ("1", (0, 1, 2)),
    ("(123)", (1, 2, 0)),
    ("(132)", (2, 0, 1)),
    ("(12)", (1, 0, 2)),
    ("(23)", (0, 2, 1)),
    ("(31)", (2, 1, 0)),
)


class UnsupportedGroupError(ValueError):
    """Raised for group specs the builders do not understand or cannot size."""


class NotAbelianError(ValueError):
    """Raised when an operation needs an abelian group."""


@dataclass(frozen=True)
class FiniteGroup:
    """
    A finite group given by its Cayley table.

    cayley[i][j] is the index of elements[i] * elements[j]; inv[i] is the
    index of the inverse of elements[i]. When the group is a direct product
    of cyclic groups Z_{n1} x ... x Z_{nr} with mixed-radix indexing,
    `factors` records (n1, ..., nr); otherwise it is None.
    """
    name: str
    elements: Tuple[str, ...]
    cayley: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    identity: int = 0
    factors: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise UnsupportedGroupError("A group needs at least one element")
        if len(self.cayley) != n or any(len(row) != n for row in self.cayley):
            raise ValueError(f"Cayley table of {self.name} is not {n}x{n}")
        if len(self.inv) != n:
            raise ValueError(f"Inverse table of {self.name} has wrong length")
        for i in range(n):
            if self.cayley[i][self.inv[i]] != self.identity:
                raise ValueError(f"{self.elements[i]} * inv != identity in {self.name}")
            if self.cayley[self.identity][i] != i or self.cayley[i][self.identity] != i:
                raise ValueError(f"Index {self.identity} is not the identity of {self.name}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def contains(self, a: Any) -> bool:
        return isinstance(a, (int, np.integer)) and not isinstance(a, bool) and 0 <= a < self.order

    def index(self, label: str) -> int:
        """
        Look up an element index by its label.

        Raises:
            KeyError: If no element has that label.
        """
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(f"No element labelled {label!r} in {self.name}") from None

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.cayley[i][j] == self.cayley[j][i] for i in range(n) for j in range(i + 1, n))

    def is_finite(self) -> bool:
        return True

    def check_associativity(self) -> bool:
        """Full scan of all triples (intended for small groups)."""
        n = self.order
        c = self.cayley
        for a in range(n):
            for b in range(n):
                ab = c[a][b]
                for d in range(n):
                    if c[ab][d] != c[a][c[b][d]]:
                        logger.debug(f"Associativity fails in {self.name} at ({a}, {b}, {d})")
                        return False
        return True

    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        result = 1
        for a in range(self.order):
            k, x = 1, a
            while x != self.identity:
                x = self.cayley[x][a]
                k += 1
            result = result * k // np.gcd(result, k)
        return int(result)

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "order": self.order,
            "elements": list(self.elements),
            "identity": self.identity,
            "cayley": [list(row) for row in self.cayley],
            "inverse": list(self.inv),
        }


def _inverse_table(cayley: Sequence[Sequence[int]], identity: int = 0) -> Tuple[int, ...]:
    n = len(cayley)
    inv = []
    for i in range(n):
        matches = [j for j in range(n) if cayley[i][j] == identity]
        if len(matches) != 1:
            raise ValueError(f"Element {i} has {len(matches)} right inverses")
        inv.append(matches[0])
    return tuple(inv)


def _check_order(n: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise UnsupportedGroupError(f"{what} needs a positive integer order, got {n!r}")
    if n > config.MAX_GROUP_ORDER:
        raise UnsupportedGroupError(
            f"{what} of order {n} exceeds the limit of {config.MAX_GROUP_ORDER} elements"
        )


def cyclic(n: int) -> FiniteGroup:
    """Z_n with elements 0..n-1 under addition mod n."""
    _check_order(n, "cyclic group")
    cayley = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inv = tuple((-i) % n for i in range(n))
    return FiniteGroup(f"Z{n}", tuple(str(k) for k in range(n)), cayley, inv, 0, (n,))


def _cycle_label(perm: Tuple[int, ...]) -> str:
    """Cycle notation with 1-based points, e.g. (123)(45); identity is '1'."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append("(" + "".join(str(p + 1) for p in cycle) + ")")
    return "".join(cycles) if cycles else "1"


def symmetric(n: int) -> FiniteGroup:
    """
    S_n acting on {1..n}, composed right to left: (st)(x) = s(t(x)).

    S3 uses the order 1, (123), (132), (12), (23), (31); other degrees
    enumerate permutations lexicographically by one-line notation.
    """
    if not isinstance(n, int) or n < 1 or n > config.MAX_SYMMETRIC_DEGREE:
        raise UnsupportedGroupError(
            f"symmetric group degree must be between 1 and {config.MAX_SYMMETRIC_DEGREE}, got {n!r}"
        )
    if n == 3:
        labels = tuple(label for label, _ in S3_ENUMERATION)
        perms = [perm for _, perm in S3_ENUMERATION]
    else:
        perms = list(itertools.permutations(range(n)))
        labels = tuple(_cycle_label(p) for p in perms)
    position = {p: k for k, p in enumerate(perms)}
    cayley = tuple(
        tuple(position[tuple(s[t[x]] for x in range(n))] for t in perms)
        for s in perms
    )
    # S1 and S2 are cyclic with the same indexing as Z1 and Z2
    factors: Optional[Tuple[int, ...]] = None
    if n == 1:
        factors = ()
    elif n == 2:
        factors = (2,)
    return FiniteGroup(f"S{n}", labels, cayley, _inverse_table(cayley), 0, factors)


def product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product G x H; element (i, j) has index i * |H| + j."""
    n_g, n_h = g.order, h.order
    _check_order(n_g * n_h, "direct product")
    labels = tuple(f"({a},{b})" for a in g.elements for b in h.elements)
    cayley = tuple(
        tuple(
            g.cayley[i1][i2] * n_h + h.cayley[j1][j2]
            for i2 in range(n_g) for j2 in range(n_h)
        )
        for i1 in range(n_g) for j1 in range(n_h)
    )
    inv = tuple(g.inv[i] * n_h + h.inv[j] for i in range(n_g) for j in range(n_h))
    factors = None
    if g.factors is not None and h.factors is not None:
        factors = g.factors + h.factors
    return FiniteGroup(f"{g.name}x{h.name}", labels, cayley, inv, 0, factors)


GroupSpec = Union[str, Tuple[Any, ...]]

_FACTOR_PATTERN = re.compile(r"^([ZS])(\d+)$")


def build_group(spec: GroupSpec) -> FiniteGroup:
    """
    Build a finite group from a spec.

    Args:
        spec: Either a string such as "S3", "Z4", "Z2xZ2", or a tuple
              ("cyclic", n), ("symmetric", n), ("product", spec, spec).

    Returns:
        The FiniteGroup.

    Raises:
        UnsupportedGroupError: For unknown specs or orders beyond the limits.
    """
    if isinstance(spec, str):
        factors = [part.strip() for part in spec.split("x")]
        groups = []
        for part in factors:
            match = _FACTOR_PATTERN.match(part)
            if not match:
                raise UnsupportedGroupError(f"Unsupported group spec: {spec!r}")
            letter, degree = match.group(1), int(match.group(2))
            groups.append(cyclic(degree) if letter == "Z" else symmetric(degree))
        result = groups[0]
        for g in groups[1:]:
            result = product(result, g)
        return result

    if isinstance(spec, tuple) and spec:
        kind = spec[0]
        if kind == "cyclic" and len(spec) == 2:
            return cyclic(spec[1])
        if kind == "symmetric" and len(spec) == 2:
            return symmetric(spec[1])
        if kind == "product" and len(spec) == 3:
            return product(build_group(spec[1]), build_group(spec[2]))
    raise UnsupportedGroupError(f"Unsupported group spec: {spec!r}")


def regular_representation(group: FiniteGroup, s: int) -> np.ndarray:
    """
    Left regular representation lambda(s) as an n x n 0/1 matrix.

    Entry (p, q) is 1 iff p = s q.
    """
    if not group.contains(s):
        raise ValueError(f"{s!r} is not an element index of {group.name}")
    n = group.order
    matrix = np.zeros((n, n), dtype=np.int64)
    row = group.cayley[s]
    for q in range(n):
        matrix[row[q], q] = 1
    return matrix


def all_regular_matrices(group: FiniteGroup) -> List[np.ndarray]:
    """lambda(s) for every element, in enumeration order."""
    return [regular_representation(group, s) for s in range(group.order)]
