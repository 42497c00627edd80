#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Invariant checks, one module per package. Importing this package registers them all."""

from lotterydyn.verify.suites import contest, dynamics, experiments, potential, walk

__all__ = ["contest", "dynamics", "experiments", "potential", "walk"]

# 🎟️🎲🔚
