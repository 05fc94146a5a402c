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

r"""Extremal quadratic form on a sphere by the secular equation.

In the eigenbasis of :math:`C`, the reduced objective is
:math:`-2 d^T u + u^T D u` on the sphere :math:`u^T u = s^2`. Its stationary
points satisfy

.. math::

    (D - \lambda I) u = d, \qquad u^T u = s^2

so that :math:`u_i = d_i / (\delta_i - \lambda)` where :math:`\lambda` is a
root of the secular function

.. math::

    \phi(\lambda) = \sum_i \frac{d_i^2}{(\delta_i - \lambda)^2} - s^2

All real roots are enumerated, together with the solutions at
:math:`\lambda = \delta_j` when :math:`d` vanishes on the eigenspace of
:math:`\delta_j`, and the candidate with the extremal objective is selected.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from ..utils import readonly
from .exceptions import SolverError
from .reduction import ReducedProblem

logger = logging.getLogger(__name__)


class Sense(enum.Enum):
    """Direction of the optimization."""

    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class Branch(enum.Enum):
    """Family of the secular solution that was selected."""

    UPPER = "upper"
    LOWER = "lower"
    INTERIOR = "interior"
    HARD_CASE = "hard-case"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class SecularSolution:
    r"""Stationary point of the reduced objective on the sphere.

    Attributes:
        u: Coordinates in the eigenbasis of :math:`C`.
        r_vec: Null-space coordinates :math:`r = \tilde{Q} u`.
        lambda_multiplier: Lagrange multiplier :math:`\lambda` of the
            unit-norm constraint, ``None`` when the sphere is a point.
        branch: Family of the selected solution.
        objective: Reduced objective :math:`-2 d^T u + u^T D u`.
    """

    u: np.ndarray
    r_vec: np.ndarray
    lambda_multiplier: Optional[float]
    branch: Branch
    objective: float


Candidate = Tuple[np.ndarray, float, Branch]


def secular_function(
    lam: float, eigvals: np.ndarray, d: np.ndarray, s2: float
) -> float:
    r"""Evaluate :math:`\phi(\lambda)`.

    Args:
        lam: Multiplier :math:`\lambda`, not an eigenvalue with nonzero
            :math:`d_i`.
        eigvals: Eigenvalues :math:`\delta_i`.
        d: Rotated linear term.
        s2: Squared radius.

    Returns:
        Value of the secular function.
    """
    active = d != 0.0
    return float(
        np.sum(d[active] ** 2 / (eigvals[active] - lam) ** 2) - s2
    )


def __clusters(eigvals: np.ndarray) -> List[np.ndarray]:
    scale = max(float(np.max(np.abs(eigvals))), np.finfo(float).tiny)
    tol = 1e-12 * scale
    clusters = [[0]]
    for i in range(1, eigvals.shape[0]):
        if eigvals[i] - eigvals[clusters[-1][-1]] <= tol:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    return [np.array(cluster) for cluster in clusters]


def __find_root(
    phi: Callable[[float], float], lo: float, hi: float
) -> float:
    f_lo, f_hi = phi(lo), phi(hi)
    if f_lo == 0.0 or lo == hi:
        return lo
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        return lo if abs(f_lo) < abs(f_hi) else hi
    xtol = max(1e-14 * (hi - lo), 1e-300)
    return float(brentq(phi, lo, hi, xtol=xtol, maxiter=500))


def __enumerate_candidates(
    eigvals: np.ndarray, d: np.ndarray, s2: float
) -> List[Candidate]:
    s = np.sqrt(s2)
    scale = max(
        float(np.max(np.abs(eigvals))),
        float(np.max(np.abs(d))),
        np.finfo(float).tiny,
    )
    active = np.abs(d) > 1e-13 * scale
    d_active = np.where(active, d, 0.0)
    clusters = __clusters(eigvals)
    active_clusters = [c for c in clusters if np.any(active[c])]

    def phi(lam: float) -> float:
        return secular_function(lam, eigvals, d_active, s2)

    def on_sphere(lam: float) -> np.ndarray:
        u = np.zeros_like(d)
        u[active] = d_active[active] / (eigvals[active] - lam)
        return u * (s / np.linalg.norm(u))

    candidates: List[Candidate] = []
    if active_clusters:
        d_norm = float(np.linalg.norm(d_active))
        top, bottom = active_clusters[-1], active_clusters[0]
        top_delta = float(np.max(eigvals[top]))
        bottom_delta = float(np.min(eigvals[bottom]))
        lam = __find_root(
            phi,
            top_delta + np.linalg.norm(d_active[top]) / s,
            top_delta + d_norm / s,
        )
        candidates.append((on_sphere(lam), lam, Branch.UPPER))
        lam = __find_root(
            phi,
            bottom_delta - d_norm / s,
            bottom_delta - np.linalg.norm(d_active[bottom]) / s,
        )
        candidates.append((on_sphere(lam), lam, Branch.LOWER))
        for left, right in zip(active_clusters[:-1], active_clusters[1:]):
            a = float(np.max(eigvals[left]))
            b = float(np.min(eigvals[right]))
            inner = minimize_scalar(
                phi,
                bounds=(a, b),
                method="bounded",
                options={"xatol": 1e-12 * (b - a)},
            )
            if inner.fun >= 0.0:
                continue
            lo = a + 0.5 * np.linalg.norm(d_active[left]) / s
            hi = b - 0.5 * np.linalg.norm(d_active[right]) / s
            for bracket in ((lo, inner.x), (inner.x, hi)):
                if bracket[0] < bracket[1]:
                    lam = __find_root(phi, *bracket)
                    candidates.append((on_sphere(lam), lam, Branch.INTERIOR))

    for cluster in clusters:
        if np.any(active[cluster]):
            continue
        lam = float(np.mean(eigvals[cluster]))
        u = np.zeros_like(d)
        u[active] = d_active[active] / (eigvals[active] - lam)
        residual = s2 - float(u @ u)
        if residual < -1e-12 * max(s2, 1.0):
            continue
        for sign in (1.0, -1.0):
            v = u.copy()
            v[cluster[0]] = sign * np.sqrt(max(residual, 0.0))
            candidates.append((v, lam, Branch.HARD_CASE))
    return candidates


def solve_secular(
    reduced: ReducedProblem, sense: Sense = Sense.MAXIMIZE
) -> SecularSolution:
    r"""Find the extremal stationary point of the reduced objective.

    Outer roots are bracketed by bounds on :math:`\phi` on each side of the
    spectrum. Between two consecutive poles, roots are searched on both
    sides of the minimum of :math:`\phi` when it is negative. Eigenspaces on
    which :math:`d` vanishes add the solutions of the so-called hard case.
    Ties between objectives are broken toward the largest first coordinate
    of :math:`r`.

    Args:
        reduced: Reduced problem.
        sense: Whether to maximize or minimize the objective.

    Returns:
        Selected solution.

    Raises:
        SolverError: if no stationary point is found.
    """
    eigvals = np.array(reduced.eigvals)
    d = np.array(reduced.d)
    if reduced.s2 <= 0.0:
        u = np.zeros_like(d)
        return SecularSolution(
            u=readonly(u),
            r_vec=readonly(u),
            lambda_multiplier=None,
            branch=Branch.BOUNDARY,
            objective=0.0,
        )
    candidates = __enumerate_candidates(eigvals, d, reduced.s2)
    if not candidates:
        raise SolverError("secular equation has no admissible root")
    sign = 1.0 if sense is Sense.MAXIMIZE else -1.0
    objectives = [
        float(-2.0 * d @ u + u @ (eigvals * u)) for u, _, _ in candidates
    ]
    r_vecs = [reduced.eigvecs @ u for u, _, _ in candidates]
    scores = [sign * objective for objective in objectives]
    best = max(scores)
    tol = 1e-12 * max(1.0, abs(best))
    tied = [i for i, score in enumerate(scores) if score >= best - tol]
    pick = max(tied, key=lambda i: r_vecs[i][0])
    u, lam, branch = candidates[pick]
    logger.debug(
        "Selected %s root lambda = %.12g among %d candidates",
        branch.value,
        lam,
        len(candidates),
    )
    return SecularSolution(
        u=readonly(u),
        r_vec=readonly(r_vecs[pick]),
        lambda_multiplier=float(lam),
        branch=branch,
        objective=objectives[pick],
    )
