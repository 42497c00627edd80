#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Seeded random streams.

Every run owns a Philox generator keyed by a 64-bit seed. Sweeps derive one
seed per (base seed, cell, replicate) through a SeedSequence, so any single
replicate can be re-run from the seed recorded in its result row.
"""

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator for a single run."""
    return np.random.Generator(np.random.Philox(seed))


def derive_seed(base_seed: int, cell: int, replicate: int) -> int:
    """Independent 64-bit seed for replicate `replicate` of sweep cell `cell`."""
    sequence = np.random.SeedSequence([base_seed, cell, replicate])
    return int(sequence.generate_state(1, np.uint64)[0])


# 🎟️🎲🔚
