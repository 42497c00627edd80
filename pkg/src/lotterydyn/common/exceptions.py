#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Common exceptions for lotterydyn."""

from provide.foundation.errors import FoundationError


class LotteryDynError(FoundationError):
    """Base class for exceptions in lotterydyn."""


class ContestConfigError(LotteryDynError):
    """Invalid contest definition, or a heterogeneous contest where a homogeneous one is required."""


class ProfileError(LotteryDynError):
    """Action profile that does not fit its contest (length, sign, finiteness, agent index)."""


class DomainError(LotteryDynError):
    """Numeric argument outside the domain on which an operation is defined."""


class PolicyError(LotteryDynError):
    """Unknown selection policy, or a weight vector violating its L/U bounds."""


class ExperimentSpecError(LotteryDynError):
    """Malformed experiment spec file."""


class LotteryDynConfigError(LotteryDynError):
    """Errors related to lotterydyn configuration loading or validation."""


class OutputError(LotteryDynError):
    """Failure writing or reading result files, or an unknown plot transform."""


# 🎟️🎲🔚
