#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#


from typing import NamedTuple

import attrs

from lotterydyn.common.exceptions import DomainError


@attrs.define(frozen=True)
class WalkConfig:
    """Walk on {1, 2, ...}: right with probability p, otherwise left, holding at the wall 1."""

    p: float
    start: int

    def __attrs_post_init__(self) -> None:
        if not 0 <= self.p < 0.5:
            raise DomainError(f"Walk bias must satisfy 0 <= p < 1/2, got {self.p}")
        if self.start < 1:
            raise DomainError(f"Walk must start at a state >= 1, got {self.start}")


@attrs.define(frozen=True)
class WalkPath:
    states: tuple[int, ...]
    visits_to_one: int


class CoupledPaths(NamedTuple):
    """A walled walk and the free walk driven by the same coin flips."""

    walled: WalkPath
    free: tuple[int, ...]


# 🎟️🎲🔚
