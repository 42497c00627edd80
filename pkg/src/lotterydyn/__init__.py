#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Best-response dynamics in lottery contests."""

from provide.foundation.utils.versioning import get_version

__version__ = get_version("lotterydyn", __file__)

__all__ = [
    "__version__",
]

# 🎟️🎲🔚
