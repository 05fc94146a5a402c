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

"""Per-period returns of a price panel."""

import enum
from typing import Optional, Sequence, Tuple

import numpy as np

from ..exceptions import DimensionError
from ..utils import readonly
from .prices import PricePanel


class ReturnKind(enum.Enum):
    """Return convention."""

    SIMPLE = "simple"
    LOG = "log"


class ReturnSeries:
    r"""Matrix of per-period returns with its column means.

    Attributes:
        returns: Matrix of shape ``(T - 1, n)`` of per-period returns.
        means: Mean return :math:`\mu_i` of each asset, per period.
        asset_names: Labels of the ``n`` assets.
        kind: Return convention the series was computed with.
    """

    returns: np.ndarray
    means: np.ndarray
    asset_names: Tuple[str, ...]
    kind: ReturnKind

    def __init__(
        self,
        returns: np.ndarray,
        asset_names: Optional[Sequence[str]] = None,
        kind: ReturnKind = ReturnKind.SIMPLE,
    ) -> None:
        """Create a return series, computing its means.

        Args:
            returns: Matrix of shape ``(T - 1, n)`` of returns.
            asset_names: Asset labels, defaults to ``asset0, asset1, ...``.
            kind: Return convention.
        """
        array = np.asarray(returns, dtype=float)
        if array.ndim != 2 or array.shape[0] < 1:
            raise DimensionError("returns should be a non-empty matrix")
        if asset_names is None:
            asset_names = [f"asset{i}" for i in range(array.shape[1])]
        if len(asset_names) != array.shape[1]:
            raise DimensionError("there should be one name per asset column")
        self.returns = readonly(array)
        self.means = readonly(array.mean(axis=0))
        self.asset_names = tuple(asset_names)
        self.kind = kind

    @property
    def n_periods(self) -> int:
        """Number of return rows."""
        return self.returns.shape[0]

    @property
    def n_assets(self) -> int:
        """Number of assets."""
        return self.returns.shape[1]


def compute_returns(
    panel: PricePanel, kind: ReturnKind = ReturnKind.SIMPLE
) -> ReturnSeries:
    r"""Compute per-period returns of a price panel.

    Simple returns are :math:`S_{t+1} / S_t - 1`, the discrete counterpart of
    :math:`\mathrm{d}S / S`. Log returns :math:`\log(S_{t+1} / S_t)` are
    available as an alternative convention.

    Args:
        panel: Price panel with at least two rows.
        kind: Return convention.

    Returns:
        Return series with ``T - 1`` rows.
    """
    if panel.n_periods < 2:
        raise DimensionError("need at least two price rows for a return")
    ratios = panel.prices[1:] / panel.prices[:-1]
    returns = np.log(ratios) if kind is ReturnKind.LOG else ratios - 1.0
    return ReturnSeries(returns, panel.asset_names, kind)
