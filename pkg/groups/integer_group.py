"""The integer group Z under addition, used through finite windows."""

from dataclasses import dataclass
from typing import Any

import numpy as np

import config


@dataclass(frozen=True)
class IntegerGroup:
    """Z with identity 0 and inverse given by negation."""
    name: str = config.INTEGER_GROUP_SPEC
    bound: int = config.INTEGER_WINDOW_BOUND

    identity: int = 0

    def multiply(self, a: int, b: int) -> int:
        return a + b

    def inverse(self, a: int) -> int:
        return -a

    def contains(self, a: Any) -> bool:
        """Integers within the window bound belong to the group."""
        if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
            return False
        return -self.bound <= int(a) <= self.bound

    def is_abelian(self) -> bool:
        return True

    def is_finite(self) -> bool:
        return False
