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

r"""Null-space reduction of the constrained max-variance problem.

With the QR decomposition :math:`A = P \begin{bmatrix} R \\ 0
\end{bmatrix}`, weights are written in the rotated basis as
:math:`w = P \begin{bmatrix} q \\ r \end{bmatrix}`. The linear constraints
:math:`A^T w = b` fix :math:`q` by :math:`R^T q = b`, and the unit-norm
constraint leaves :math:`r` on the sphere :math:`r^T r = s^2 = 1 - q^T q`.
In this basis the portfolio variance is:

.. math::

    w^T \Omega w = q^T B q + 2 r^T \Gamma q + r^T C r, \qquad
    P^T \Omega P = \begin{bmatrix} B & \Gamma^T \\ \Gamma & C \end{bmatrix}
"""

import logging

import numpy as np
import scipy.linalg

from ..exceptions import DimensionError
from ..utils import as_square_matrix, readonly, symmetrized
from .constraints import ConstraintSystem
from .exceptions import ConditioningError, InfeasibleTarget, RankError

logger = logging.getLogger(__name__)


class QRReduction:
    r"""Orthogonal basis adapted to the constraints.

    The sign convention is a positive diagonal for :math:`R` and
    :math:`\det P = +1`, which fixes every column of :math:`P` including the
    null-space basis :math:`P_2`.

    Attributes:
        p: Orthogonal matrix :math:`P` of shape ``(n, n)``.
        r_mat: Upper-triangular matrix :math:`R` of shape ``(2, 2)``.
    """

    p: np.ndarray
    r_mat: np.ndarray

    def __init__(self, p: np.ndarray, r_mat: np.ndarray) -> None:
        """Wrap the factors of a QR decomposition.

        Args:
            p: Orthogonal factor.
            r_mat: Leading triangular block of the triangular factor.
        """
        self.p = readonly(p)
        self.r_mat = readonly(r_mat)

    @property
    def p1(self) -> np.ndarray:
        """Columns of :math:`P` spanning the range of :math:`A`."""
        return self.p[:, :2]

    @property
    def p2(self) -> np.ndarray:
        r"""Columns of :math:`P` spanning the null space of :math:`A^T`."""
        return self.p[:, 2:]


def qr_reduce(system: ConstraintSystem) -> QRReduction:
    """Compute the sign-normalized QR decomposition of the constraints.

    Args:
        system: Constraint system.

    Returns:
        QR reduction with positive diagonal of :math:`R`.

    Raises:
        RankError: if the constraint matrix does not have full column rank.
    """
    p, r_full = scipy.linalg.qr(system.a, mode="full")
    r_mat = r_full[:2, :]
    diagonal = np.diag(r_mat)
    if np.any(np.abs(diagonal) <= 1e-12 * np.max(np.abs(r_mat))):
        raise RankError(
            "target-return constraint degenerate: constraint matrix "
            f"has rank below 2 (R diagonal {diagonal})"
        )
    signs = np.where(diagonal < 0.0, -1.0, 1.0)
    p[:, :2] *= signs
    r_mat = signs[:, np.newaxis] * r_mat
    if np.linalg.det(p) < 0.0:
        p[:, -1] *= -1.0
    logger.debug("Constraint factor R =\n%s", r_mat)
    return QRReduction(p, r_mat)


class ReducedProblem:
    r"""Max-variance problem restricted to the feasible sphere.

    Attributes:
        b_mat: Block :math:`B` of shape ``(2, 2)``.
        gamma: Block :math:`\Gamma` of shape ``(n - 2, 2)``.
        c: Block :math:`C` of shape ``(n - 2, n - 2)``.
        q: Fixed coordinates :math:`q` solving :math:`R^T q = b`.
        s2: Squared radius :math:`s^2 = 1 - q^T q` of the feasible sphere.
        g: Vector :math:`g = -\Gamma q`.
        eigvecs: Orthogonal matrix :math:`\tilde{Q}` with
            :math:`C = \tilde{Q} D \tilde{Q}^T`.
        eigvals: Eigenvalues :math:`\delta_i` of :math:`C`, ascending.
        d: Rotated vector :math:`d = \tilde{Q}^T g`.
    """

    b_mat: np.ndarray
    gamma: np.ndarray
    c: np.ndarray
    q: np.ndarray
    s2: float
    g: np.ndarray
    eigvecs: np.ndarray
    eigvals: np.ndarray
    d: np.ndarray

    def __init__(
        self,
        b_mat: np.ndarray,
        gamma: np.ndarray,
        c: np.ndarray,
        q: np.ndarray,
        s2: float,
    ) -> None:
        r"""Create the reduced problem and diagonalize its quadratic part.

        Args:
            b_mat: Block :math:`B`.
            gamma: Block :math:`\Gamma`.
            c: Block :math:`C`.
            q: Fixed coordinates :math:`q`.
            s2: Squared radius of the feasible sphere.
        """
        eigvals, eigvecs = scipy.linalg.eigh(c)
        g = -gamma @ q
        self.b_mat = readonly(b_mat)
        self.gamma = readonly(gamma)
        self.c = readonly(c)
        self.q = readonly(q)
        self.s2 = float(s2)
        self.g = readonly(g)
        self.eigvecs = readonly(eigvecs)
        self.eigvals = readonly(eigvals)
        self.d = readonly(eigvecs.T @ g)

    @property
    def s(self) -> float:
        """Radius :math:`s` of the feasible sphere."""
        return float(np.sqrt(self.s2))

    def objective(self, r: np.ndarray) -> float:
        r"""Portfolio variance :math:`q^T B q + 2 r^T \Gamma q + r^T C r`.

        Args:
            r: Null-space coordinates of the weights.

        Returns:
            Variance of the portfolio with coordinates :math:`(q, r)`.
        """
        r = np.asarray(r, dtype=float)
        return float(
            self.q @ self.b_mat @ self.q
            + 2.0 * r @ self.gamma @ self.q
            + r @ self.c @ r
        )


def reduce_problem(
    qr: QRReduction, omega: np.ndarray, system: ConstraintSystem
) -> ReducedProblem:
    """Reduce the max-variance problem to the feasible sphere.

    Args:
        qr: QR reduction of the constraint matrix.
        omega: Symmetric covariance matrix.
        system: Constraint system.

    Returns:
        Reduced problem.

    Raises:
        ConditioningError: if :math:`R` is numerically singular.
        InfeasibleTarget: if :math:`q^T q > 1`.
    """
    omega = as_square_matrix(omega, "covariance matrix")
    n = system.n_assets
    if omega.shape != (n, n):
        raise DimensionError(
            f"covariance matrix should be {n} x {n}, got {omega.shape}"
        )
    scale = max(1.0, float(np.max(np.abs(omega))))
    omega = symmetrized(omega, 1e-10 * scale, "covariance matrix")
    determinant = qr.r_mat[0, 0] * qr.r_mat[1, 1]
    if abs(determinant) < 1e-14:
        raise ConditioningError(
            f"constraint factor R is singular (det R = {determinant:.3e})"
        )
    q = scipy.linalg.solve_triangular(qr.r_mat, system.b, trans="T")
    s2 = 1.0 - float(q @ q)
    if s2 < -1e-12:
        raise InfeasibleTarget(s2)
    s2 = max(s2, 0.0)
    rotated = qr.p.T @ omega @ qr.p
    rotated = np.triu(rotated) + np.triu(rotated, 1).T
    logger.debug("Reduced problem q = %s, s^2 = %.10f", q, s2)
    return ReducedProblem(
        b_mat=rotated[:2, :2],
        gamma=rotated[2:, :2],
        c=rotated[2:, 2:],
        q=q,
        s2=s2,
    )
