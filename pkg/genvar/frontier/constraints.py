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

r"""Linear constraints on portfolio weights.

Weights :math:`w` are fully invested and reach a target mean return
:math:`k`, which reads :math:`A^T w = b` with:

.. math::

    A = \begin{bmatrix} \mu & \mathbb{1} \end{bmatrix}, \qquad
    b = \begin{bmatrix} k \\ 1 \end{bmatrix}
"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import DimensionError, DomainError
from ..utils import VectorSpace, readonly
from .exceptions import RankError


@dataclass(frozen=True)
class ConstraintSystem:
    """Target-return and full-investment constraints.

    Attributes:
        a: Matrix of shape ``(n, 2)`` whose columns are the mean returns and
            ones.
        b: Right-hand side vector ``(k, 1)``.
        k: Target mean return per period.
    """

    a: np.ndarray
    b: np.ndarray
    k: float

    @property
    def n_assets(self) -> int:
        """Number of assets."""
        return self.a.shape[0]

    @property
    def means(self) -> np.ndarray:
        """Mean returns of the assets."""
        return self.a[:, 0]


def build_constraints(means: np.ndarray, k: float) -> ConstraintSystem:
    """Build the constraint system of the max-variance problem.

    Args:
        means: Mean return of each asset.
        k: Target mean return.

    Returns:
        Constraint system.

    Raises:
        DimensionError: if there are fewer than three assets.
        RankError: if all mean returns are equal.
    """
    means = np.asarray(means, dtype=float)
    if means.ndim != 1 or means.shape[0] < 3:
        raise DimensionError(
            f"need a vector of at least 3 mean returns, got {means.shape}"
        )
    if not np.all(np.isfinite(means)) or not np.isfinite(k):
        raise DomainError("mean returns and target should be finite")
    if np.ptp(means) <= 0.0:
        raise RankError("target-return constraint degenerate: equal means")
    space = VectorSpace(means.shape[0])
    a = np.column_stack([means, space.ones])
    return ConstraintSystem(
        a=readonly(a), b=readonly([k, 1.0]), k=float(k)
    )
