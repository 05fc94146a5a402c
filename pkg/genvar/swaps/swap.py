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

r"""All swaps derive from the :class:`Swap` base class.

A swap turns an expected covariance matrix into a gross leg, the present
value of the generalized variance it is written on. The price is the gross
leg minus the discounted strike:

.. math::

    P = e^{-rT} \mathbb{E}[V] - e^{-rT} K
"""

import abc
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..covariance import ExpectedCovariance
from ..exceptions import ConsistencyError
from ..frontier import EfficientWeights
from .contract import Measure, SwapContract
from .exceptions import MeasureMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PricingResult:
    """Price of a swap with its legs.

    Legs are scaled by the notional divided by :math:`10^6`, so that the
    default notional quotes prices in variance points.

    Attributes:
        price: Signed value of the swap to the receiver of the variance leg.
        gross_leg: Present value of the generalized-variance leg.
        discounted_strike: Present value of the strike leg.
        diagnostics: Expectation mode, initial distribution, discount factor
            and measure-specific quantities.
        weights: Portfolio weights of a maximum-eigenvalue swap.
    """

    price: float
    gross_leg: float
    discounted_strike: float
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    weights: Optional[EfficientWeights] = None


class Swap(abc.ABC):
    """Abstract base class for generalized-variance swaps.

    Attributes:
        contract: Terms of the swap.
    """

    contract: SwapContract

    def __init__(self, contract: SwapContract) -> None:
        """Bind a swap to its contract.

        Args:
            contract: Terms of the swap.

        Raises:
            MeasureMismatch: if the contract is written on another measure.
        """
        if contract.measure is not self.measure:
            raise MeasureMismatch(self.measure.value, contract.measure.value)
        self.contract = contract

    @property
    @abc.abstractmethod
    def measure(self) -> Measure:
        """Generalized variance this swap prices."""

    @abc.abstractmethod
    def compute_gross_leg(
        self, expected: ExpectedCovariance
    ) -> Tuple[float, Dict[str, Any], Optional[EfficientWeights]]:
        """Compute the gross leg for the reference notional.

        Args:
            expected: Expected covariance matrix at maturity.

        Returns:
            Tuple ``(gross_leg, diagnostics, weights)`` where weights are
            ``None`` for measures without a portfolio.
        """

    def check_consistency(self, expected: ExpectedCovariance) -> None:
        """Check that an expected covariance matches the contract terms.

        Args:
            expected: Expected covariance matrix at maturity.

        Raises:
            ConsistencyError: if maturity or rate differ.
        """
        if expected.maturity_days != self.contract.maturity_days:
            raise ConsistencyError(
                f"expected covariance is for T={expected.maturity_days} "
                f"but the contract has T={self.contract.maturity_days}"
            )
        if abs(expected.daily_rate - self.contract.daily_rate) > 1e-15:
            raise ConsistencyError(
                f"expected covariance is discounted at r={expected.daily_rate}"
                f" but the contract has r={self.contract.daily_rate}"
            )

    def price(self, expected: ExpectedCovariance) -> PricingResult:
        """Price the swap from an expected covariance matrix.

        Args:
            expected: Expected covariance matrix built with the same maturity
                and rate as the contract.

        Returns:
            Pricing result.
        """
        self.check_consistency(expected)
        gross_leg, diagnostics, weights = self.compute_gross_leg(expected)
        scale = self.contract.notional_scale
        gross_leg = scale * gross_leg
        discounted_strike = scale * self.contract.discounted_strike
        diagnostics = {
            "measure": self.measure.value,
            "mode": (
                expected.mode.value if expected.mode is not None else None
            ),
            "initial": (
                expected.initial.tolist()
                if expected.initial is not None
                else None
            ),
            "discount_factor": self.contract.discount_factor,
            **diagnostics,
        }
        logger.debug(
            "%s leg %.6f against discounted strike %.6f",
            self.measure.value,
            gross_leg,
            discounted_strike,
        )
        return PricingResult(
            price=gross_leg - discounted_strike,
            gross_leg=gross_leg,
            discounted_strike=discounted_strike,
            diagnostics=diagnostics,
            weights=weights,
        )

    def __repr__(self) -> str:
        """Human-readable representation of the swap."""
        return (
            f"{self.__class__.__name__}("
            f"T={self.contract.maturity_days}, K={self.contract.strike})"
        )
