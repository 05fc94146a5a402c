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

"""Classification of return periods into regime states."""

from typing import Dict

import numpy as np

from ..exceptions import DimensionError
from .returns import ReturnSeries
from .states import ALL_STATES, State


class RegimeLabeling:
    """Per-asset and combined regime labels of a return series.

    Attributes:
        per_asset_states: Matrix of shape ``(T - 1, n)`` of per-asset labels,
            each ``State.UP`` or ``State.DOWN``.
        combined_states: Vector of ``T - 1`` combined labels.
        state_counts: Occupancy count of each combined state.
    """

    per_asset_states: np.ndarray
    combined_states: np.ndarray
    state_counts: Dict[State, int]

    def __init__(self, per_asset_states: np.ndarray) -> None:
        """Derive combined labels from per-asset labels.

        The combined label of a period is ``UP`` when every asset is up,
        ``DOWN`` when every asset is down, and ``MIDDLE`` otherwise.

        Args:
            per_asset_states: Matrix of per-asset labels.
        """
        labels = np.asarray(per_asset_states, dtype=int)
        if labels.ndim != 2:
            raise DimensionError("per-asset labels should be a matrix")
        if not np.all(np.isin(labels, (State.DOWN, State.UP))):
            raise ValueError("per-asset labels should be UP or DOWN")
        is_up = labels == State.UP
        combined = np.full(labels.shape[0], int(State.MIDDLE))
        combined[is_up.all(axis=1)] = State.UP
        combined[(~is_up).all(axis=1)] = State.DOWN
        labels.setflags(write=False)
        combined.setflags(write=False)
        self.per_asset_states = labels
        self.combined_states = combined
        self.state_counts = {
            state: int(np.count_nonzero(combined == state))
            for state in ALL_STATES
        }

    @property
    def n_periods(self) -> int:
        """Number of labeled periods."""
        return self.combined_states.shape[0]

    def __repr__(self) -> str:
        """Human-readable representation of the labeling."""
        counts = ", ".join(f"{s}={c}" for s, c in self.state_counts.items())
        return f"RegimeLabeling({counts})"


def classify_states(series: ReturnSeries) -> RegimeLabeling:
    r"""Label each period by comparing returns to their means.

    An asset is ``UP`` in a period when its return is strictly above its
    mean :math:`\mu_i`, and ``DOWN`` otherwise, so that a return equal to the
    mean counts as down.

    Args:
        series: Return series.

    Returns:
        Per-asset and combined labels.
    """
    is_up = series.returns > series.means[np.newaxis, :]
    per_asset = np.where(is_up, int(State.UP), int(State.DOWN))
    return RegimeLabeling(per_asset)
