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

"""Swap on the trace of the covariance matrix."""

from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..covariance import ExpectedCovariance
from ..exceptions import DimensionError
from ..frontier import EfficientWeights
from .contract import Measure, SwapContract
from .swap import PricingResult, Swap


def trace_of(matrix: np.ndarray) -> float:
    r"""Sum of the diagonal of a square matrix.

    For a covariance matrix this is the total variance
    :math:`\sum_i \sigma_i^2` of the assets.

    Args:
        matrix: Square matrix.

    Returns:
        Trace of the matrix.

    Raises:
        DimensionError: if the matrix is not square.
    """
    array = np.asarray(matrix, dtype=float)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionError(f"trace of a non-square matrix {array.shape}")
    return float(np.trace(array))


class TraceSwap(Swap):
    """Swap paying the time-averaged trace of the covariance matrix."""

    @property
    def measure(self) -> Measure:
        """Trace measure."""
        return Measure.TRACE

    def compute_gross_leg(
        self, expected: ExpectedCovariance
    ) -> Tuple[float, Dict[str, Any], Optional[EfficientWeights]]:
        """Trace of the expected covariance matrix.

        Args:
            expected: Expected covariance matrix at maturity.

        Returns:
            Gross leg, per-asset variance legs, no weights.
        """
        variances = np.diag(expected.matrix)
        return (
            trace_of(expected.matrix),
            {"variance_legs": variances.tolist()},
            None,
        )


def price_trace(
    expected: ExpectedCovariance, contract: SwapContract
) -> PricingResult:
    """Price a trace swap.

    Args:
        expected: Expected covariance matrix at maturity.
        contract: Contract on the trace measure.

    Returns:
        Pricing result with gross leg the trace of the expected matrix.
    """
    return TraceSwap(contract).price(expected)
