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

r"""Swap on the constrained maximum variance of the covariance matrix.

The weights :math:`w` of the extremal feasible portfolio are computed on the
expected covariance matrix, and the gross leg is the quadratic form
:math:`w^T \bar{\Omega} w` of that matrix. This is a deterministic stand-in
for :math:`\mathbb{E}[\lambda(x_t)]`, which ignores the Jensen gap between
the two quantities.
"""

from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..covariance import ExpectedCovariance
from ..frontier import EfficientWeights, Sense, constrained_max_variance
from ..utils import as_square_matrix
from .contract import Measure, SwapContract
from .swap import PricingResult, Swap


class EigenSwap(Swap):
    """Swap paying the variance of the extremal feasible portfolio.

    Attributes:
        means: Mean return of each asset.
        k: Target mean return of the portfolio.
        sense: Whether the portfolio maximizes or minimizes variance.
        omega: Matrix to compute weights on, instead of the expected
            covariance matrix.
    """

    means: np.ndarray
    k: float
    sense: Sense
    omega: Optional[np.ndarray]

    def __init__(
        self,
        contract: SwapContract,
        means: np.ndarray,
        k: float,
        sense: Sense = Sense.MAXIMIZE,
        omega: Optional[np.ndarray] = None,
    ) -> None:
        """Create a maximum-eigenvalue swap.

        Args:
            contract: Contract on the max-eigen measure.
            means: Mean return of each asset.
            k: Target mean return of the portfolio.
            sense: Whether the portfolio maximizes or minimizes variance.
            omega: Matrix to compute weights on. Defaults to the expected
                covariance matrix passed at pricing time.
        """
        super().__init__(contract)
        self.means = np.asarray(means, dtype=float)
        self.k = float(k)
        self.sense = sense
        self.omega = (
            None if omega is None else as_square_matrix(omega, "omega")
        )

    @property
    def measure(self) -> Measure:
        """Max-eigen measure."""
        return Measure.MAX_EIGEN

    def compute_gross_leg(
        self, expected: ExpectedCovariance
    ) -> Tuple[float, Dict[str, Any], Optional[EfficientWeights]]:
        """Quadratic form of the expected matrix at the extremal weights.

        Args:
            expected: Expected covariance matrix at maturity.

        Returns:
            Gross leg, solver diagnostics and the weights.
        """
        omega = self.omega if self.omega is not None else expected.matrix
        weights = constrained_max_variance(
            omega, self.means, self.k, self.sense
        )
        row = weights.w @ expected.matrix
        gross_leg = float(row @ weights.w)
        diagnostics = {
            "row_vector": row.tolist(),
            "sense": self.sense.value,
            "branch": weights.branch.value,
            "lambda_multiplier": weights.lambda_multiplier,
            "s": weights.reduced.s,
        }
        return gross_leg, diagnostics, weights


def price_eigen(
    expected: ExpectedCovariance,
    means: np.ndarray,
    k: float,
    contract: SwapContract,
    sense: Sense = Sense.MAXIMIZE,
    omega: Optional[np.ndarray] = None,
) -> PricingResult:
    """Price a maximum-eigenvalue swap.

    Args:
        expected: Expected covariance matrix at maturity.
        means: Mean return of each asset.
        k: Target mean return of the portfolio.
        contract: Contract on the max-eigen measure.
        sense: Whether the portfolio maximizes or minimizes variance.
        omega: Matrix to compute weights on, defaults to the expected one.

    Returns:
        Pricing result, with the portfolio weights attached.
    """
    return EigenSwap(contract, means, k, sense, omega).price(expected)
