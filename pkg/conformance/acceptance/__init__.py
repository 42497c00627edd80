#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Acceptance criteria, one suite per behaviour, run at full scale."""

# 🎟️🎲🔚
