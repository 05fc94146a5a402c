#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright 2026 The genvar developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Terms of a generalized-variance swap."""

import enum
from dataclasses import dataclass

import numpy as np

from ..exceptions import DomainError
from ..expectation import discount_factor

REFERENCE_NOTIONAL: float = 1e6


class Measure(enum.Enum):
    """Generalized variance the swap is written on."""

    TRACE = "trace"
    MAX_EIGEN = "max-eigen"


@dataclass(frozen=True)
class SwapContract:
    r"""Forward contract on a generalized variance of asset returns.

    The swap pays the time-averaged generalized variance over
    :math:`[0, T]` against the strike :math:`K`, both in variance points of
    :math:`10^{-6}`.

    Attributes:
        maturity_days: Maturity :math:`T` in trading days.
        daily_rate: Interest rate :math:`r` per trading day.
        strike: Strike :math:`K` in variance points.
        notional_units: Units of generalized variance the swap is written
            on. Legs are quoted for :math:`10^6` units.
        measure: Generalized variance the swap is written on.
    """

    maturity_days: int
    daily_rate: float
    strike: float
    notional_units: float = REFERENCE_NOTIONAL
    measure: Measure = Measure.TRACE

    def __post_init__(self) -> None:
        """Check contract terms.

        Raises:
            DomainError: if a term is outside its domain.
        """
        if int(self.maturity_days) != self.maturity_days:
            raise DomainError("maturity should be a whole number of days")
        if self.maturity_days < 1:
            raise DomainError(
                f"maturity should be at least one day, "
                f"got {self.maturity_days}"
            )
        if not np.isfinite(self.daily_rate):
            raise DomainError("interest rate should be finite")
        if not np.isfinite(self.strike) or self.strike < 0.0:
            raise DomainError(f"strike should be nonnegative: {self.strike}")
        if not self.notional_units > 0.0:
            raise DomainError("notional should be positive")

    @property
    def discount_factor(self) -> float:
        r"""Discount factor :math:`e^{-rT}`."""
        return discount_factor(self.maturity_days, self.daily_rate)

    @property
    def discounted_strike(self) -> float:
        r"""Present value :math:`e^{-rT} K` of the strike."""
        return self.discount_factor * self.strike

    @property
    def notional_scale(self) -> float:
        """Ratio of the notional to the quoting notional."""
        return self.notional_units / REFERENCE_NOTIONAL
