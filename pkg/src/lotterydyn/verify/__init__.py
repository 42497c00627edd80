#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Executable invariant checks for every lotterydyn package."""

from lotterydyn.verify.logic import (
    FULL,
    MODULES,
    QUICK,
    SCALES,
    Check,
    CheckOutcome,
    CheckResult,
    SuiteResult,
    VerifyScale,
    check,
    registered_checks,
    run_check,
    run_verification,
)

__all__ = [
    "FULL",
    "MODULES",
    "QUICK",
    "SCALES",
    "Check",
    "CheckOutcome",
    "CheckResult",
    "SuiteResult",
    "VerifyScale",
    "check",
    "registered_checks",
    "run_check",
    "run_verification",
]

# 🎟️🎲🔚
