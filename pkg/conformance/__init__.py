#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""lotterydyn conformance suites.

Full-size acceptance runs of the invariant checks, kept out of the default test path."""

# 🎟️🎲🔚
