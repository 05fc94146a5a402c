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

r"""Continuous-time generator of the regime chain and its semigroup.

The generator :math:`Q` has nonnegative off-diagonal rates and zero row sums,
so that :math:`e^{tQ}` is a transition matrix for every :math:`t \geq 0`.
Conditional expectations of a per-state quantity :math:`f` then propagate as:

.. math::

    \mathbb{E}[f(x_t) | x_0 = i] = (e^{tQ} f)_i
"""

import enum
import logging
from typing import Optional

import numpy as np
import scipy.linalg

from .exceptions import DimensionError, DomainError, SingularTransition
from .regimes import TransitionModel
from .utils import as_square_matrix, readonly

logger = logging.getLogger(__name__)


class GeneratorSource(enum.Enum):
    """How a generator matrix was obtained."""

    MATRIX_LOG = "matrix-log"
    LINEAR_APPROX = "linear-approx"
    USER_SUPPLIED = "user-supplied"


def _repair_rows(q: np.ndarray) -> np.ndarray:
    """Clamp negative rates to zero and reset diagonals to zero row sums."""
    repaired = np.array(q)
    np.fill_diagonal(repaired, 0.0)
    repaired = np.clip(repaired, 0.0, None)
    np.fill_diagonal(repaired, -repaired.sum(axis=1))
    return repaired


class GeneratorModel:
    r"""Generator of a continuous-time Markov chain.

    Attributes:
        q: Generator matrix :math:`Q`, rates per trading day divided by
            ``dt``.
        source: How the matrix was obtained.
        dt: Period length of the transition matrix it was derived from, in
            trading days.
        fallback_reason: Why the matrix logarithm was rejected, for a
            linear approximation.
    """

    q: np.ndarray
    source: GeneratorSource
    dt: float
    fallback_reason: Optional[str]

    def __init__(
        self,
        q: np.ndarray,
        source: GeneratorSource = GeneratorSource.USER_SUPPLIED,
        dt: float = 1.0,
        fallback_reason: Optional[str] = None,
    ) -> None:
        """Create a generator after checking its structure.

        Args:
            q: Square matrix with zero row sums and nonnegative off-diagonals.
            source: How the matrix was obtained.
            dt: Period length in trading days.
            fallback_reason: Why the matrix logarithm was rejected.

        Raises:
            DomainError: if rows do not sum to zero or a rate is negative.
        """
        q = as_square_matrix(q, "generator")
        if dt <= 0.0:
            raise DomainError(f"period length should be positive, got {dt}")
        row_sums = np.abs(q.sum(axis=1))
        if np.any(row_sums > 1e-10):
            raise DomainError(
                f"generator rows should sum to zero, got {q.sum(axis=1)}"
            )
        off_diagonal = q[~np.eye(q.shape[0], dtype=bool)]
        if np.any(off_diagonal < -1e-12):
            raise DomainError("generator has negative off-diagonal rates")
        self.q = readonly(_repair_rows(q))
        self.source = source
        self.dt = dt
        self.fallback_reason = fallback_reason

    @property
    def n_states(self) -> int:
        """Number of states."""
        return self.q.shape[0]

    def __repr__(self) -> str:
        """Human-readable representation of the generator."""
        return (
            f"GeneratorModel(source={self.source.value}, dt={self.dt}, "
            f"n_states={self.n_states})"
        )


def derive_generator(
    model: TransitionModel, dt: float = 1.0
) -> GeneratorModel:
    r"""Derive a generator from an estimated transition matrix.

    The principal matrix logarithm :math:`Q = \log(\Pi) / \Delta t` is used
    when it is real with off-diagonal entries above :math:`-10^{-8}`. Tiny
    negative rates are then clamped to zero and diagonals repaired so that
    rows sum to zero. Otherwise, for instance when :math:`\Pi` has eigenvalues
    on the negative real axis, the generator falls back to the linear
    approximation :math:`Q = (\Pi - I) / \Delta t`.

    Args:
        model: Transition model.
        dt: Period length of the transition matrix in trading days.

    Returns:
        Generator model, tagged with the method that produced it.

    Raises:
        SingularTransition: if the transition matrix is numerically singular.
    """
    if dt <= 0.0:
        raise DomainError(f"period length should be positive, got {dt}")
    pi = np.array(model.pi)
    determinant = np.linalg.det(pi)
    if abs(determinant) < 1e-12:
        raise SingularTransition(
            f"transition matrix is singular (determinant {determinant:.3e})"
        )
    log_pi = np.asarray(scipy.linalg.logm(pi))
    reason: Optional[str] = None
    if np.iscomplexobj(log_pi):
        if np.max(np.abs(log_pi.imag)) > 1e-10:
            reason = "principal logarithm is not real"
        else:
            log_pi = log_pi.real
    if reason is None and not np.all(np.isfinite(log_pi)):
        reason = "principal logarithm is not finite"
    if reason is None:
        q = log_pi / dt
        off_diagonal = q[~np.eye(q.shape[0], dtype=bool)]
        if np.all(off_diagonal >= -1e-8):
            if np.any(off_diagonal < 0.0):
                logger.warning(
                    "Clamping negative rates down to %.3e in the generator",
                    off_diagonal.min(),
                )
            logger.debug(
                "Matrix logarithm residual: %.3e",
                np.linalg.norm(scipy.linalg.expm(log_pi) - pi, 1),
            )
            return GeneratorModel(
                _repair_rows(q), GeneratorSource.MATRIX_LOG, dt
            )
        reason = (
            "principal logarithm has a negative off-diagonal rate "
            f"{off_diagonal.min():.3e}"
        )
    logger.warning(
        "Transition matrix logarithm rejected (%s), "
        "falling back to the linear approximation (Pi - I) / dt",
        reason,
    )
    q = (pi - np.eye(pi.shape[0])) / dt
    return GeneratorModel(
        _repair_rows(q), GeneratorSource.LINEAR_APPROX, dt, reason
    )


def matrix_exponential(q: np.ndarray, t: float) -> np.ndarray:
    r"""Compute :math:`e^{tQ}` by scaling and squaring with a Padé core.

    Args:
        q: Square matrix, usually a generator.
        t: Nonnegative duration.

    Returns:
        Matrix exponential of :math:`t Q`.

    Raises:
        DomainError: if ``t`` is negative or an entry is not finite.
    """
    q = as_square_matrix(q, "generator")
    if not np.isfinite(t) or t < 0.0:
        raise DomainError(f"duration should be nonnegative, got {t}")
    result = scipy.linalg.expm(t * q)
    if not np.all(np.isfinite(result)):
        raise DomainError("matrix exponential overflowed")
    return result


def propagate_expectation(
    gen: GeneratorModel, f: np.ndarray, t: float
) -> np.ndarray:
    r"""Expected value of a per-state quantity after a duration.

    Args:
        gen: Generator model.
        f: Value of the quantity in each state.
        t: Duration in trading days.

    Returns:
        Vector :math:`e^{tQ} f` whose entry :math:`i` is the expectation of
        :math:`f(x_t)` given :math:`x_0 = i`.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (gen.n_states,):
        raise DimensionError(
            f"expected {gen.n_states} per-state values, got shape {f.shape}"
        )
    return matrix_exponential(gen.q, t) @ f
