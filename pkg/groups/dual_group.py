"""
Dual groups of finite abelian groups.

A finite abelian group built from cyclic factors Z_{n1} x ... x Z_{nr}
has characters chi_k(t) = prod_m exp(2 pi i k_m t_m / n_m), where k and t
are read in the same mixed-radix digits as the element indices. Character
k is therefore identified with element k, and the dual group law is the
base group's Cayley table.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from arithmetic.scalars import ExactScalar, root_of_unity_12
from groups.finite_group import FiniteGroup, NotAbelianError

logger = logging.getLogger(__name__)


def _digits(index: int, factors: Tuple[int, ...]) -> Tuple[int, ...]:
    """Mixed-radix digits of an element index, most significant first."""
    digits = []
    for n in reversed(factors):
        digits.append(index % n)
        index //= n
    return tuple(reversed(digits))


@dataclass(frozen=True)
class DualGroup:
    """
    Character table of a finite abelian group.

    characters[k, t] = chi_k(t). Row 0 is the trivial character.
    """
    base: FiniteGroup
    characters: np.ndarray = field(repr=False, compare=False)
    # Integer phases: chi_k(t) = exp(2 pi i phases[k][t] / period)
    phases: Tuple[Tuple[int, ...], ...] = field(repr=False)
    period: int = 1

    @property
    def order(self) -> int:
        return self.base.order

    def multiply(self, k: int, l: int) -> int:
        """Index of the character chi_k * chi_l."""
        return self.base.cayley[k][l]

    def inverse(self, k: int) -> int:
        """Index of conj(chi_k)."""
        return self.base.inv[k]

    def has_exact_values(self) -> bool:
        return 12 % self.period == 0

    def exact_characters(self) -> List[List[ExactScalar]]:
        """
        Character table in exact arithmetic.

        Raises:
            ValueError: If the group exponent does not divide 12.
        """
        if not self.has_exact_values():
            raise ValueError(
                f"Characters of {self.base.name} need roots of unity of order {self.period}, "
                f"which are not in the exact field"
            )
        scale = 12 // self.period
        return [[root_of_unity_12(p * scale) for p in row] for row in self.phases]

    def character(self, k: int) -> np.ndarray:
        return self.characters[k]


def dual_group(group: FiniteGroup) -> DualGroup:
    """
    Build the dual group of a finite abelian group.

    Args:
        group: Abelian group built from cyclic factors.

    Returns:
        DualGroup whose character k is indexed like element k.

    Raises:
        NotAbelianError: If the Cayley table is not symmetric.
    """
    if not group.is_abelian():
        raise NotAbelianError(f"{group.name} is not abelian; it has no dual group of characters")
    factors: Optional[Tuple[int, ...]] = group.factors
    if factors is None:
        raise NotAbelianError(f"{group.name} has no cyclic decomposition recorded")

    n = group.order
    period = 1
    for m in factors:
        period = period * m // math.gcd(period, m)

    digits = [_digits(i, factors) for i in range(n)]
    phases = tuple(
        tuple(
            sum(k_m * t_m * (period // n_m) for k_m, t_m, n_m in zip(digits[k], digits[t], factors)) % period
            for t in range(n)
        )
        for k in range(n)
    )
    phase_array = np.array(phases, dtype=np.float64).reshape(n, n)
    characters = np.exp(2j * np.pi * phase_array / period)
    # Snap the values that are exactly +-1 or +-i
    characters = np.where(np.abs(characters.real) < 1e-15, 1j * characters.imag, characters)
    characters = np.where(np.abs(characters.imag) < 1e-15, characters.real + 0j, characters)
    logger.debug(f"Built dual of {group.name} with character period {period}")
    return DualGroup(group, characters, phases, period)
