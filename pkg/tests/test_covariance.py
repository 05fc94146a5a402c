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

"""Test per-regime covariances and expected covariance matrices."""

import unittest

import numpy as np

from genvar.covariance import (
    Centering,
    ExpectedCovariance,
    RegimeCovariance,
    assemble_expected_covariance,
    estimate_regime_covariance,
)
from genvar.exceptions import (
    ConsistencyError,
    DomainError,
    NotPositiveSemidefinite,
)
from genvar.expectation import ExpectationMode
from genvar.generator import derive_generator
from genvar.regimes import (
    ALL_STATES,
    EstimationError,
    RegimeLabeling,
    ReturnSeries,
    State,
    TransitionModel,
)
from genvar.swaps import SwapContract

from . import published

TRUE_COVARIANCES = {
    State.DOWN: np.array(
        [[4.0, 1.0, 0.5], [1.0, 3.0, 0.2], [0.5, 0.2, 2.0]]
    ),
    State.MIDDLE: np.array(
        [[1.0, 0.3, 0.1], [0.3, 1.5, 0.4], [0.1, 0.4, 1.2]]
    ),
    State.UP: np.array(
        [[2.0, -0.5, 0.3], [-0.5, 2.5, 0.6], [0.3, 0.6, 3.0]]
    ),
}

PER_ASSET_LABELS = {
    State.DOWN: [State.DOWN] * 3,
    State.MIDDLE: [State.UP, State.DOWN, State.DOWN],
    State.UP: [State.UP] * 3,
}


def synthetic_sample(count: int, seed: int = 42):
    """Returns drawn from known covariances, with their regime labels."""
    rng = np.random.default_rng(seed)
    sequence = np.repeat(np.array(ALL_STATES), count)
    rng.shuffle(sequence)
    returns = np.empty((sequence.shape[0], 3))
    for state, omega in TRUE_COVARIANCES.items():
        mask = sequence == state
        factor = np.linalg.cholesky(omega)
        returns[mask] = rng.standard_normal((mask.sum(), 3)) @ factor.T
    labels = np.array([PER_ASSET_LABELS[State(s)] for s in sequence])
    return ReturnSeries(1e-2 * returns), RegimeLabeling(labels)


class TestRegimeCovariance(unittest.TestCase):
    """Test fixture for per-regime covariances."""

    def test_estimation_recovers_truth(self):
        """Estimates are within four standard errors of the truth."""
        count = 10000
        series, labeling = synthetic_sample(count)
        cov = estimate_regime_covariance(series, labeling)
        self.assertEqual(cov.states, ALL_STATES)
        for state, truth in TRUE_COVARIANCES.items():
            truth = 1e-4 * truth
            variances = np.diag(truth)
            std_err = np.sqrt(
                (np.outer(variances, variances) + truth**2) / count
            )
            self.assertTrue(np.all(np.abs(cov[state] - truth) < 4 * std_err))

    def test_centering(self):
        """Grand-mean centering differs from per-regime centering."""
        series, labeling = synthetic_sample(50)
        is_up = labeling.combined_states == State.UP
        shifted = ReturnSeries(series.returns + 0.01 * is_up[:, np.newaxis])
        per_state = estimate_regime_covariance(shifted, labeling)
        grand = estimate_regime_covariance(
            shifted, labeling, Centering.GRAND
        )
        self.assertTrue(
            np.all(grand[State.UP].diagonal() > per_state[State.UP].diagonal())
        )

    def test_too_few_observations(self):
        """Regimes need at least two observations."""
        returns = ReturnSeries(
            np.array([[1.0, 1.0], [-1.0, -1.0], [-2.0, -2.0], [0.5, 0.5]])
        )
        labels = np.array([[2, 2], [0, 0], [0, 0], [2, 0]])
        with self.assertRaises(EstimationError):
            estimate_regime_covariance(returns, RegimeLabeling(labels))

    def test_not_symmetric(self):
        """Asymmetric matrices are rejected."""
        with self.assertRaises(DomainError):
            RegimeCovariance(
                (State.DOWN,), np.array([[[1.0, 0.2], [0.3, 1.0]]])
            )

    def test_not_positive_semidefinite(self):
        """Indefinite matrices are rejected."""
        with self.assertRaises(NotPositiveSemidefinite) as context:
            RegimeCovariance(
                (State.DOWN,), np.array([[[1.0, 2.0], [2.0, 1.0]]])
            )
        self.assertEqual(context.exception.label, "Down")

    def test_volatility_and_correlation(self):
        """Covariances factor into volatilities and correlations."""
        cov = RegimeCovariance.from_matrices(TRUE_COVARIANCES)
        sigma = cov.volatilities(State.UP)
        rho = cov.correlation(State.UP)
        self.assertTrue(np.allclose(sigma, np.sqrt([2.0, 2.5, 3.0])))
        self.assertTrue(np.allclose(np.diag(rho), 1.0))
        self.assertTrue(
            np.allclose(rho * np.outer(sigma, sigma), cov[State.UP])
        )


class TestExpectedCovariance(unittest.TestCase):
    """Test fixture for expected covariance assembly."""

    def setUp(self):
        """Published chain with the synthetic covariances."""
        self.model = TransitionModel.from_probabilities(
            published.PI, published.ROW_TOTALS
        )
        self.cov = RegimeCovariance.from_matrices(
            {s: 1e-4 * m for s, m in TRUE_COVARIANCES.items()}
        )
        self.contract = SwapContract(
            published.MATURITY, published.RATE, published.TRACE_STRIKE
        )

    def test_one_step_stationary_closed_form(self):
        """One step from the stationary law is the stationary mixture."""
        expected = assemble_expected_covariance(
            self.cov, self.model, None, self.contract
        )
        p = self.model.stationary
        closed_form = (
            np.exp(-published.RATE * published.MATURITY)
            * 1e6
            * np.einsum("s,sij->ij", p, self.cov.matrices)
        )
        self.assertTrue(
            np.allclose(expected.matrix, closed_form, rtol=1e-12, atol=0.0)
        )
        self.assertAlmostEqual(expected.discount, published.DISCOUNT, 7)

    def test_exactly_symmetric(self):
        """Expected matrices are bit-identically symmetric."""
        gen = derive_generator(self.model)
        for mode in ExpectationMode:
            expected = assemble_expected_covariance(
                self.cov, self.model, gen, self.contract, mode, State.DOWN
            )
            self.assertTrue(np.array_equal(expected.matrix, expected.matrix.T))

    def test_point_mass_one_step(self):
        """From a known state, one step mixes with that row of the chain."""
        expected = assemble_expected_covariance(
            self.cov, self.model, None, self.contract, initial=State.UP
        )
        weights = self.model.pi[2]
        mixed = np.einsum("s,sij->ij", weights, self.cov.matrices)
        scale = 1e6 * np.exp(-published.RATE * published.MATURITY)
        self.assertTrue(np.allclose(expected.matrix, scale * mixed))

    def test_linear_in_covariances(self):
        """Scaling every regime covariance scales the expected matrix."""
        gen = derive_generator(self.model)
        for mode in ExpectationMode:
            base = assemble_expected_covariance(
                self.cov, self.model, gen, self.contract, mode, State.DOWN
            )
            for factor in (0.5, 3.0):
                scaled = RegimeCovariance.from_matrices(
                    {
                        s: factor * 1e-4 * m
                        for s, m in TRUE_COVARIANCES.items()
                    }
                )
                expected = assemble_expected_covariance(
                    scaled, self.model, gen, self.contract, mode, State.DOWN
                )
                self.assertTrue(
                    np.allclose(
                        expected.matrix, factor * base.matrix, rtol=1e-12
                    )
                )

    def test_one_step_positive_semidefinite(self):
        """One-step matrices mix positive semidefinite regime matrices."""
        rng = np.random.default_rng(8)
        for _ in range(20):
            matrices = {}
            for state in ALL_STATES:
                g = rng.standard_normal((3, 3))
                matrices[state] = 1e-4 * g @ g.T
            cov = RegimeCovariance.from_matrices(matrices)
            initial = rng.dirichlet(np.ones(3))
            expected = assemble_expected_covariance(
                cov, self.model, None, self.contract, initial=initial
            )
            scale = np.max(np.abs(expected.matrix))
            smallest = np.linalg.eigvalsh(expected.matrix)[0]
            self.assertGreaterEqual(smallest, -1e-9 * scale)

    def test_state_mismatch(self):
        """Covariances and chain must share their states."""
        cov = RegimeCovariance(
            (State.DOWN, State.UP), self.cov.matrices[[0, 2]]
        )
        with self.assertRaises(ConsistencyError):
            assemble_expected_covariance(
                cov, self.model, None, self.contract
            )

    def test_fixture(self):
        """Fixtures are wrapped without a mode."""
        expected = ExpectedCovariance.from_fixture(
            published.OMEGA, published.MATURITY, published.RATE
        )
        self.assertIsNone(expected.mode)
        self.assertEqual(expected.n_assets, 3)
        with self.assertRaises(DomainError):
            ExpectedCovariance.from_fixture(
                np.array([[1.0, 2.0], [3.0, 1.0]]), 63, 0.0
            )
