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

r"""Per-regime covariance matrices and their expectation at maturity.

In regime :math:`x`, asset returns have covariance matrix

.. math::

    \Omega(x)_{ij} = \rho_{ij}(x) \sigma_i(x) \sigma_j(x)

The expected covariance of a swap is the discounted time average of
:math:`\Omega(x_t)` over the life of the contract, scaled by :math:`10^6` so
that variances of daily returns read as variance points.
"""

import enum
import logging
from typing import TYPE_CHECKING, Dict, Optional, Sequence, Tuple

import numpy as np

from .exceptions import (
    ConsistencyError,
    DimensionError,
    DomainError,
    NotPositiveSemidefinite,
)
from .expectation import (
    ExpectationMode,
    discount_factor,
    time_averaged_operator,
)
from .generator import GeneratorModel
from .regimes import (
    ALL_STATES,
    EstimationError,
    RegimeLabeling,
    ReturnSeries,
    State,
    TransitionModel,
)
from .regimes.transition import InitialState
from .utils import readonly, symmetrized

if TYPE_CHECKING:
    from .swaps.contract import SwapContract

logger = logging.getLogger(__name__)

VARIANCE_SCALE: float = 1e6


class Centering(enum.Enum):
    """Mean that per-regime deviations are taken from."""

    STATE = "state"
    GRAND = "grand"


class RegimeCovariance:
    r"""Covariance matrix :math:`\Omega(s)` of asset returns in each regime.

    Attributes:
        states: Regime states, in the order of :attr:`matrices`.
        matrices: Array of shape ``(m, n, n)`` of symmetric positive
            semidefinite matrices.
    """

    states: Tuple[State, ...]
    matrices: np.ndarray

    def __init__(self, states: Sequence[State], matrices: np.ndarray) -> None:
        """Create per-regime covariances after validating them.

        Args:
            states: Regime states.
            matrices: One covariance matrix per state.

        Raises:
            DimensionError: if shapes are inconsistent.
            DomainError: if a matrix is not symmetric or has an implied
                correlation above one.
            NotPositiveSemidefinite: if a matrix has a negative eigenvalue.
        """
        array = np.asarray(matrices, dtype=float)
        if array.ndim != 3 or array.shape[1] != array.shape[2]:
            raise DimensionError("matrices should have shape (m, n, n)")
        if array.shape[0] != len(states):
            raise DimensionError("there should be one matrix per state")
        if not np.all(np.isfinite(array)):
            raise DomainError("covariance matrices have non-finite entries")
        validated = np.empty_like(array)
        for index, state in enumerate(states):
            omega = symmetrized(array[index], 1e-12, f"covariance of {state}")
            variances = np.diag(omega)
            if np.any(variances < 0.0):
                raise DomainError(
                    f"covariance of {state} has a negative variance"
                )
            smallest = float(np.linalg.eigvalsh(omega)[0])
            if smallest < -1e-10:
                raise NotPositiveSemidefinite(str(state), smallest)
            scale = np.sqrt(np.outer(variances, variances))
            bound = np.abs(omega) - (1.0 + 1e-10) * scale
            if np.any(bound > 0.0):
                raise DomainError(
                    f"covariance of {state} implies a correlation above one"
                )
            validated[index] = omega
        self.states = tuple(states)
        self.matrices = readonly(validated)

    @classmethod
    def from_matrices(
        cls, per_state: Dict[State, np.ndarray]
    ) -> "RegimeCovariance":
        """Create per-regime covariances from a state-to-matrix mapping.

        Args:
            per_state: Covariance matrix of each regime.

        Returns:
            Per-regime covariances, states in canonical order.
        """
        states = tuple(s for s in ALL_STATES if s in per_state)
        if len(states) != len(per_state):
            raise DomainError(f"unknown states in {list(per_state)}")
        return cls(states, np.stack([per_state[s] for s in states]))

    @property
    def n_assets(self) -> int:
        """Number of assets :math:`n`."""
        return self.matrices.shape[1]

    @property
    def per_state(self) -> Dict[State, np.ndarray]:
        """Covariance matrix of each regime."""
        return {s: self.matrices[i] for i, s in enumerate(self.states)}

    def __getitem__(self, state: State) -> np.ndarray:
        """Covariance matrix of a regime."""
        try:
            return self.matrices[self.states.index(State.parse(state))]
        except ValueError as value_error:
            raise KeyError(f"no covariance for state {state}") from value_error

    def volatilities(self, state: State) -> np.ndarray:
        r"""Volatilities :math:`\sigma_i(s)` of asset returns in a regime."""
        return np.sqrt(np.diag(self[state]))

    def correlation(self, state: State) -> np.ndarray:
        r"""Correlation matrix :math:`\rho_{ij}(s)` in a regime.

        Assets with zero volatility get zero correlations and a unit
        diagonal.
        """
        sigma = self.volatilities(state)
        scale = np.outer(sigma, sigma)
        rho = np.divide(
            self[state], scale, out=np.zeros_like(scale), where=scale > 0.0
        )
        np.fill_diagonal(rho, 1.0)
        return rho

    def scaled(self, factor: float) -> "RegimeCovariance":
        """Multiply all regime covariances by a nonnegative factor."""
        if factor < 0.0:
            raise DomainError("covariance scale factor should be nonnegative")
        return RegimeCovariance(self.states, factor * self.matrices)

    def __repr__(self) -> str:
        """Human-readable representation of the covariances."""
        names = ", ".join(str(state) for state in self.states)
        return f"RegimeCovariance(states=[{names}], n={self.n_assets})"


def estimate_regime_covariance(
    series: ReturnSeries,
    labeling: RegimeLabeling,
    centering: Centering = Centering.STATE,
) -> RegimeCovariance:
    """Estimate the covariance of returns in each occurring regime.

    The estimator divides by ``count - 1``. Deviations are taken from the
    mean of returns within the regime, or from the full-sample means when
    ``centering`` is :attr:`Centering.GRAND`.

    Args:
        series: Return series.
        labeling: Combined regime labels of the series.
        centering: Mean that deviations are taken from.

    Returns:
        Per-regime covariances of the states occurring in the labels.

    Raises:
        EstimationError: if a regime has fewer than two observations.
    """
    if labeling.n_periods != series.n_periods:
        raise DimensionError(
            f"{labeling.n_periods} labels for {series.n_periods} returns"
        )
    states = tuple(s for s in ALL_STATES if labeling.state_counts[s] > 0)
    matrices = []
    for state in states:
        rows = series.returns[labeling.combined_states == state]
        count = rows.shape[0]
        if count < 2:
            raise EstimationError(
                str(state), f"need at least two observations, got {count}"
            )
        center = (
            rows.mean(axis=0)
            if centering is Centering.STATE
            else series.means
        )
        deviations = rows - center
        matrices.append(deviations.T @ deviations / (count - 1))
        logger.debug("State %s: %d observations", state, count)
    return RegimeCovariance(states, np.stack(matrices))


class ExpectedCovariance:
    r"""Discounted time-averaged expected covariance matrix at maturity.

    Entries are in variance points: the expectation of :math:`\Omega_{ij}`
    times :math:`10^6`.

    Attributes:
        matrix: Symmetric matrix of discounted expected entries.
        maturity_days: Maturity :math:`T` the expectation was taken over.
        daily_rate: Interest rate :math:`r` used for discounting.
        discount: Discount factor :math:`e^{-rT}`.
        mode: Expectation rule, or ``None`` for a matrix supplied as a
            fixture.
        initial: Initial distribution over regimes, or ``None`` for a
            fixture.
    """

    matrix: np.ndarray
    maturity_days: int
    daily_rate: float
    discount: float
    mode: Optional[ExpectationMode]
    initial: Optional[np.ndarray]

    def __init__(
        self,
        matrix: np.ndarray,
        maturity_days: int,
        daily_rate: float,
        mode: Optional[ExpectationMode] = None,
        initial: Optional[np.ndarray] = None,
    ) -> None:
        """Create an expected covariance matrix.

        Args:
            matrix: Square matrix, symmetric within ``1e-12`` relative.
            maturity_days: Maturity in trading days.
            daily_rate: Interest rate per trading day.
            mode: Expectation rule the matrix was computed with.
            initial: Initial distribution the matrix was computed with.
        """
        array = np.asarray(matrix, dtype=float)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionError(f"expected square matrix, got {array.shape}")
        if not np.all(np.isfinite(array)):
            raise DomainError("expected covariance has non-finite entries")
        tol = 1e-12 * max(1.0, float(np.max(np.abs(array), initial=0.0)))
        self.matrix = readonly(symmetrized(array, tol, "expected covariance"))
        self.maturity_days = maturity_days
        self.daily_rate = daily_rate
        self.discount = discount_factor(maturity_days, daily_rate)
        self.mode = mode
        self.initial = None if initial is None else readonly(initial)

    @classmethod
    def from_fixture(
        cls, matrix: np.ndarray, maturity_days: int, daily_rate: float
    ) -> "ExpectedCovariance":
        """Wrap a matrix of already discounted expected entries.

        Args:
            matrix: Expected covariance in variance points.
            maturity_days: Maturity the entries were computed for.
            daily_rate: Interest rate the entries were discounted at.

        Returns:
            Expected covariance without mode nor initial distribution.
        """
        return cls(matrix, maturity_days, daily_rate)

    @property
    def n_assets(self) -> int:
        """Number of assets."""
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        """Human-readable representation of the matrix."""
        mode = self.mode.value if self.mode is not None else "fixture"
        return (
            f"ExpectedCovariance(n={self.n_assets}, "
            f"T={self.maturity_days}, r={self.daily_rate}, mode={mode})"
        )


def assemble_expected_covariance(
    cov: RegimeCovariance,
    model: TransitionModel,
    gen: Optional[GeneratorModel],
    contract: "SwapContract",
    mode: ExpectationMode = ExpectationMode.ONE_STEP,
    initial: InitialState = None,
) -> ExpectedCovariance:
    r"""Assemble the expected covariance matrix of a contract.

    Entry :math:`(i, j)` is the discounted time-averaged expectation of the
    per-state vector :math:`(\Omega(s)_{ij})_s`, in variance points. All
    entries share the same mixing weights :math:`\pi_0^T M`, computed once.

    Args:
        cov: Per-regime covariances.
        model: Transition model.
        gen: Generator model, required in generator mode.
        contract: Contract providing maturity and rate.
        mode: Expectation rule.
        initial: Initial state, index or distribution. Defaults to the
            stationary distribution.

    Returns:
        Expected covariance matrix.

    Raises:
        ConsistencyError: if covariances and transition model disagree on
            the regime states.
    """
    if cov.states != model.states:
        raise ConsistencyError(
            f"covariances are given for states {list(map(str, cov.states))} "
            f"but the chain has states {list(map(str, model.states))}"
        )
    maturity = contract.maturity_days
    distribution = model.initial_distribution(initial)
    operator = time_averaged_operator(model, gen, maturity, mode)
    weights = distribution @ operator
    discount = discount_factor(maturity, contract.daily_rate)
    mixed = np.einsum("s,sij->ij", weights, cov.matrices)
    matrix = discount * VARIANCE_SCALE * mixed
    matrix = np.triu(matrix) + np.triu(matrix, 1).T
    logger.debug("Regime weights at maturity: %s", weights)
    return ExpectedCovariance(
        matrix, maturity, contract.daily_rate, mode, distribution
    )
