"""Finite groups, the integer group and dual groups."""

from typing import Union

import config
from groups.finite_group import (
    FiniteGroup,
    NotAbelianError,
    UnsupportedGroupError,
    all_regular_matrices,
    build_group,
    cyclic,
    product,
    regular_representation,
    symmetric,
)
from groups.integer_group import IntegerGroup
from groups.dual_group import DualGroup, dual_group

Group = Union[FiniteGroup, IntegerGroup]


def parse_group(spec: str) -> Group:
    """
    Parse a CLI group spec such as "S3", "Z4", "Z2xZ2" or "Z".

    Raises:
        UnsupportedGroupError: If the group string is not understood.
    """
    spec = spec.strip()
    if spec == config.INTEGER_GROUP_SPEC:
        return IntegerGroup()
    return build_group(spec)


__all__ = [
    "FiniteGroup",
    "IntegerGroup",
    "DualGroup",
    "Group",
    "NotAbelianError",
    "UnsupportedGroupError",
    "build_group",
    "parse_group",
    "cyclic",
    "symmetric",
    "product",
    "regular_representation",
    "all_regular_matrices",
    "dual_group",
]
