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

r"""Constrained maximum-variance portfolio.

The problem solved here is:

.. math::

    \begin{split}\begin{array}{ll}
        \underset{w}{\mbox{maximize}} & w^T \Omega w \\
        \mbox{subject to} & w^T w = 1, \quad \mathbb{1}^T w = 1,
            \quad \mu^T w = k
    \end{array}\end{split}

or its minimization counterpart. Its optimum is the "largest eigenvalue" of
the covariance matrix restricted to feasible portfolios.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .constraints import ConstraintSystem, build_constraints
from .exceptions import SolverError
from .reduction import QRReduction, ReducedProblem, qr_reduce, reduce_problem
from .secular import Branch, Sense, solve_secular

logger = logging.getLogger(__name__)

CONSTRAINT_TOLERANCE: float = 1e-8


@dataclass(frozen=True)
class EfficientWeights:
    r"""Solution of the constrained max-variance problem.

    Attributes:
        w: Portfolio weights :math:`w = P [q; r]`.
        q: Coordinates fixed by the linear constraints.
        r_vec: Null-space coordinates :math:`r`.
        u: Coordinates :math:`u = \tilde{Q}^T r` in the eigenbasis of
            :math:`C`.
        lambda_multiplier: Lagrange multiplier of the unit-norm constraint,
            ``None`` when the feasible set is a single point.
        objective: Portfolio variance :math:`w^T \Omega w`.
        branch: Family of the selected secular solution.
        sense: Direction of the optimization.
        system: Constraint system the weights satisfy.
        reduced: Reduced problem the weights were computed from.
    """

    w: np.ndarray
    q: np.ndarray
    r_vec: np.ndarray
    u: np.ndarray
    lambda_multiplier: Optional[float]
    objective: float
    branch: Branch
    sense: Sense
    system: ConstraintSystem
    reduced: ReducedProblem

    def residuals(self) -> Tuple[float, float, float]:
        r"""Constraint residuals of the weights.

        Returns:
            Tuple :math:`(|w^T w - 1|, |\mathbb{1}^T w - 1|, |\mu^T w - k|)`.
        """
        return (
            abs(float(self.w @ self.w) - 1.0),
            abs(float(np.sum(self.w)) - 1.0),
            abs(float(self.system.means @ self.w) - self.system.k),
        )


def weights_from_reduction(
    qr: QRReduction,
    reduced: ReducedProblem,
    system: ConstraintSystem,
    omega: np.ndarray,
    sense: Sense = Sense.MAXIMIZE,
) -> EfficientWeights:
    """Solve a reduced problem and map its solution back to weights.

    Args:
        qr: QR reduction of the constraint matrix.
        reduced: Reduced problem.
        system: Constraint system.
        omega: Covariance matrix.
        sense: Direction of the optimization.

    Returns:
        Efficient weights.

    Raises:
        SolverError: if the weights violate the constraints.
    """
    solution = solve_secular(reduced, sense)
    w = qr.p @ np.hstack([reduced.q, solution.r_vec])
    weights = EfficientWeights(
        w=w,
        q=np.array(reduced.q),
        r_vec=np.array(solution.r_vec),
        u=np.array(solution.u),
        lambda_multiplier=solution.lambda_multiplier,
        objective=float(w @ omega @ w),
        branch=solution.branch,
        sense=sense,
        system=system,
        reduced=reduced,
    )
    residuals = weights.residuals()
    if max(residuals) >= CONSTRAINT_TOLERANCE:
        raise SolverError(f"weights violate constraints: {residuals}")
    return weights


def constrained_max_variance(
    omega: np.ndarray,
    means: np.ndarray,
    k: float,
    sense: Sense = Sense.MAXIMIZE,
) -> EfficientWeights:
    """Find the feasible portfolio of extremal variance.

    Args:
        omega: Symmetric covariance matrix.
        means: Mean return of each asset.
        k: Target mean return.
        sense: Whether to maximize or minimize the variance.

    Returns:
        Efficient weights.
    """
    system = build_constraints(means, k)
    qr = qr_reduce(system)
    reduced = reduce_problem(qr, omega, system)
    weights = weights_from_reduction(qr, reduced, system, omega, sense)
    logger.debug(
        "Weights %s with variance %.6f (%s)",
        weights.w,
        weights.objective,
        sense.value,
    )
    return weights
