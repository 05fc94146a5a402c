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

r"""Finite-state Markov chain estimated from a sequence of regime labels.

Transition probabilities are maximum-likelihood estimates from the tally
:math:`n_{ij}` of consecutive label pairs:

.. math::

    \Pi_{ij} = \frac{n_{ij}}{n_i}, \qquad
    \mathrm{se}_{ij} = \sqrt{\frac{\Pi_{ij}}{n_i}}, \qquad
    n_i = \sum_j n_{ij}

where :math:`n_i` counts outgoing transitions of state :math:`i`, not its
occupancy: the last label of the sequence has no successor.
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import DimensionError, DomainError
from ..utils import VectorSpace, as_square_matrix, readonly
from .exceptions import EstimationError, ReducibleChain
from .labeling import RegimeLabeling
from .states import ALL_STATES, State

logger = logging.getLogger(__name__)

InitialState = Union[None, int, State, Sequence[float], np.ndarray]


def stationary_distribution(
    pi: np.ndarray, tol: float = 1e-9
) -> np.ndarray:
    r"""Solve :math:`p \Pi = p` with :math:`\sum_i p_i = 1`.

    The left null space of :math:`\Pi - I` is found by solving the linear
    system :math:`(\Pi - I)^T p = 0` stacked with the normalization row
    :math:`\mathbb{1}^T p = 1`.

    Args:
        pi: Row-stochastic transition matrix.
        tol: Tolerance on row sums of the transition matrix.

    Returns:
        Stationary probability vector.

    Raises:
        DomainError: if the input is not row-stochastic.
        ReducibleChain: if the stationary vector is not unique.
    """
    pi = as_square_matrix(pi, "transition matrix")
    m = pi.shape[0]
    if np.any(pi < -tol) or np.any(np.abs(pi.sum(axis=1) - 1.0) > tol):
        raise DomainError("transition matrix is not row-stochastic")
    space = VectorSpace(m)
    balance = (pi - space.eye).T
    if np.linalg.matrix_rank(balance, tol=1e-10) < m - 1:
        raise ReducibleChain(
            "reducible chain: stationary distribution is not unique"
        )
    system = np.vstack([balance, space.ones])
    rhs = np.hstack([space.zeros, 1.0])
    p, *_ = np.linalg.lstsq(system, rhs, rcond=None)
    if np.any(p < -1e-12):
        logger.warning("Clipping negative stationary entries %s", p)
    p = np.clip(p, 0.0, None)
    return p / p.sum()


class TransitionModel:
    r"""Estimated Markov chain on the regime states.

    Attributes:
        states: Ordered states indexing rows and columns.
        counts: Transition counts :math:`n_{ij}`.
        pi: Row-stochastic transition matrix :math:`\Pi`.
        std_err: Standard errors of the entries of :math:`\Pi`.
        stationary: Stationary distribution :math:`p` with :math:`p \Pi = p`.
    """

    states: Tuple[State, ...]
    counts: np.ndarray
    pi: np.ndarray
    std_err: np.ndarray
    stationary: np.ndarray

    def __init__(
        self, counts: np.ndarray, states: Sequence[State] = ALL_STATES
    ) -> None:
        """Create a transition model from transition counts.

        Args:
            counts: Square matrix of nonnegative integer transition counts.
            states: States indexing the count matrix, in order.

        Raises:
            EstimationError: if a state has no outgoing transition.
            ReducibleChain: if the stationary distribution is not unique.
        """
        counts = np.asarray(counts)
        if counts.ndim != 2 or counts.shape[0] != counts.shape[1]:
            raise DimensionError("transition counts should be square")
        if counts.shape[0] != len(states):
            raise DimensionError("there should be one state per count row")
        if np.any(counts < 0):
            raise DomainError("transition counts should be nonnegative")
        row_totals = counts.sum(axis=1)
        for state, total in zip(states, row_totals):
            if total <= 0:
                raise EstimationError(str(state), "no outgoing transition")
        pi = counts / row_totals[:, np.newaxis]
        std_err = np.sqrt(pi / row_totals[:, np.newaxis])
        stationary = stationary_distribution(pi)
        residual = np.max(np.abs(stationary @ pi - stationary))
        if residual >= 1e-10:
            raise ReducibleChain(
                f"stationary residual {residual:.2e} is too large"
            )
        int_counts = np.asarray(counts, dtype=np.int64)
        int_counts.setflags(write=False)
        self.states = tuple(states)
        self.counts = int_counts
        self.pi = readonly(pi)
        self.std_err = readonly(std_err)
        self.stationary = readonly(stationary)

    @classmethod
    def from_probabilities(
        cls,
        pi: np.ndarray,
        row_totals: Sequence[int],
        states: Sequence[State] = ALL_STATES,
    ) -> "TransitionModel":
        r"""Rebuild a model from published probabilities and row totals.

        Counts are recovered as :math:`\mathrm{rint}(\Pi_{ij} n_i)`, which is
        exact when the probabilities are printed with enough digits.

        Args:
            pi: Transition matrix, rows summing to one.
            row_totals: Number :math:`n_i` of outgoing transitions per state.
            states: States indexing the matrix.

        Returns:
            Transition model.
        """
        pi = as_square_matrix(pi, "transition matrix")
        totals = np.asarray(row_totals, dtype=float)
        counts = np.rint(pi * totals[:, np.newaxis]).astype(np.int64)
        return cls(counts, states)

    @property
    def n_states(self) -> int:
        """Number of states of the chain."""
        return len(self.states)

    def index(self, state: Union[int, State]) -> int:
        """Row index of a state.

        Args:
            state: Regime state, or an integer row index.

        Returns:
            Row index in the model's matrices.
        """
        if isinstance(state, State):
            try:
                return self.states.index(state)
            except ValueError as value_error:
                raise DomainError(
                    f"State {state} is not in the chain {self.states}"
                ) from value_error
        index = int(state)
        if not 0 <= index < self.n_states:
            raise DomainError(f"State index {index} is out of range")
        return index

    def initial_distribution(self, initial: InitialState = None) -> np.ndarray:
        """Resolve an initial-state description to a distribution.

        Args:
            initial: ``None`` for the stationary distribution, a state (or
                its index) for a point mass, or a probability vector.

        Returns:
            Probability vector over the model's states.

        Raises:
            DomainError: if a vector is not a probability distribution.
        """
        if initial is None:
            return np.array(self.stationary)
        if isinstance(initial, (int, np.integer, State)):
            distribution = np.zeros(self.n_states)
            distribution[self.index(initial)] = 1.0
            return distribution
        distribution = np.asarray(initial, dtype=float)
        if distribution.shape != (self.n_states,):
            raise DimensionError(
                f"initial distribution should have {self.n_states} entries"
            )
        if np.any(distribution < 0.0) or abs(distribution.sum() - 1.0) > 1e-9:
            raise DomainError("initial distribution should sum to one")
        return distribution

    def __repr__(self) -> str:
        """Human-readable representation of the model."""
        names = ", ".join(str(state) for state in self.states)
        return f"TransitionModel(states=[{names}])"


def __tally(sequence: np.ndarray) -> Tuple[Tuple[State, ...], np.ndarray]:
    occurring = tuple(s for s in ALL_STATES if np.any(sequence == s))
    position = {state: i for i, state in enumerate(occurring)}
    counts = np.zeros((len(occurring), len(occurring)), dtype=np.int64)
    for prev, curr in zip(sequence[:-1], sequence[1:]):
        counts[position[State(prev)], position[State(curr)]] += 1
    return occurring, counts


def estimate_transition(
    labeling: Union[RegimeLabeling, Sequence[State], np.ndarray],
    states: Optional[Sequence[State]] = None,
) -> TransitionModel:
    """Estimate the transition model from combined regime labels.

    The state space is restricted to the states occurring in the labels, in
    the canonical order down, middle, up.

    Args:
        labeling: Regime labeling, or directly a sequence of combined labels.
        states: If set, keep exactly these states instead of the occurring
            ones.

    Returns:
        Transition model with counts, probabilities, standard errors and
        stationary distribution.

    Raises:
        EstimationError: if there are fewer than two labels or a state has no
            outgoing transition.
        ReducibleChain: if the stationary distribution is not unique.
    """
    if isinstance(labeling, RegimeLabeling):
        sequence = np.asarray(labeling.combined_states, dtype=int)
    else:
        sequence = np.asarray([int(s) for s in labeling], dtype=int)
    if sequence.shape[0] < 2:
        raise EstimationError("any", "need at least two labels")
    occurring, counts = __tally(sequence)
    if states is not None and tuple(states) != occurring:
        full = np.zeros((len(states), len(states)), dtype=np.int64)
        position = [tuple(states).index(s) for s in occurring]
        full[np.ix_(position, position)] = counts
        occurring, counts = tuple(states), full
    logger.debug("Transition counts over %s:\n%s", occurring, counts)
    return TransitionModel(counts, occurring)
