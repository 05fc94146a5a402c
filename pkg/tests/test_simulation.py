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

"""Test the Monte Carlo oracle."""

import unittest

import numpy as np

from genvar.covariance import RegimeCovariance, assemble_expected_covariance
from genvar.exceptions import (
    ConfigurationError,
    ConsistencyError,
    DimensionError,
    DomainError,
    NotPositiveSemidefinite,
)
from genvar.expectation import ExpectationMode
from genvar.frontier import Sense
from genvar.generator import derive_generator
from genvar.regimes import State, TransitionModel
from genvar.simulation import (
    SimulationConfig,
    SimulationMode,
    path_generator,
    mc_expected_covariance,
    mc_swap_price,
    simulate_regime_paths,
    simulate_return_paths,
    symmetric_factor,
)
from genvar.swaps import Measure, SwapContract, price_eigen, price_trace

from . import published
from .test_covariance import TRUE_COVARIANCES
from .test_generator import Q_TRUE, model_from_generator

MIDDLE_OMEGA = 1e-4 * TRUE_COVARIANCES[State.MIDDLE]


def single_state_market(omega=MIDDLE_OMEGA):
    """One-state chain with a fixed covariance."""
    model = TransitionModel(np.array([[10]]), states=(State.MIDDLE,))
    cov = RegimeCovariance((State.MIDDLE,), omega[np.newaxis])
    return model, cov


def published_market():
    """Published chain with covariances averaging to the published matrix.

    Regime covariances are multiples of the published matrix, normalized so
    that their stationary mixture is exactly that matrix once discounted
    and scaled to variance points.
    """
    model = TransitionModel.from_probabilities(
        published.PI, published.ROW_TOTALS
    )
    levels = np.array([0.8, 1.0, 1.2])
    levels /= model.stationary @ levels
    base = published.OMEGA / (1e6 * published.DISCOUNT)
    cov = RegimeCovariance.from_matrices(
        {state: level * base for state, level in zip(model.states, levels)}
    )
    return model, cov


class TestRegimePaths(unittest.TestCase):
    """Test fixture for simulated regime chains."""

    def test_absorbing_state(self):
        """A chain started in an absorbing state never leaves it."""
        model = TransitionModel(
            np.array([[10, 0], [5, 5]]), states=(State.DOWN, State.UP)
        )
        config = SimulationConfig(
            n_paths=500, horizon_days=30, initial=State.DOWN
        )
        paths = simulate_regime_paths(model, config)
        self.assertEqual(paths.shape, (500, 31))
        self.assertTrue(np.all(paths == 0))

    def test_deterministic(self):
        """Paths depend on the configuration only."""
        model = TransitionModel(published.COUNTS)
        config = SimulationConfig(n_paths=1000, horizon_days=20, base_seed=3)
        first = simulate_regime_paths(model, config)
        second = simulate_regime_paths(model, config)
        self.assertTrue(np.array_equal(first, second))

    def test_workers(self):
        """The number of workers does not change the paths."""
        model = TransitionModel(published.COUNTS)
        sequential = SimulationConfig(
            n_paths=1000, horizon_days=20, base_seed=3, block_size=100
        )
        threaded = SimulationConfig(
            n_paths=1000,
            horizon_days=20,
            base_seed=3,
            block_size=100,
            n_workers=3,
        )
        self.assertTrue(
            np.array_equal(
                simulate_regime_paths(model, sequential),
                simulate_regime_paths(model, threaded),
            )
        )

    def test_seeds(self):
        """Distinct seeds give distinct paths."""
        model = TransitionModel(published.COUNTS)
        paths = [
            simulate_regime_paths(
                model, SimulationConfig(200, 20, base_seed=seed)
            )
            for seed in (0, 1)
        ]
        self.assertFalse(np.array_equal(paths[0], paths[1]))

    def test_path_generator(self):
        """Substreams are reproducible and independent of each other."""
        first = path_generator(7, 2, 0).random(4)
        again = path_generator(7, 2, 0).random(4)
        other_stream = path_generator(7, 2, 1).random(4)
        other_path = path_generator(7, 3, 0).random(4)
        self.assertTrue(np.array_equal(first, again))
        self.assertFalse(np.array_equal(first, other_stream))
        self.assertFalse(np.array_equal(first, other_path))

    def test_path_independent_of_batching(self):
        """A path does not depend on the number of paths or the blocks."""
        model = TransitionModel(published.COUNTS)
        reference = simulate_regime_paths(
            model, SimulationConfig(n_paths=10, horizon_days=30, base_seed=4)
        )
        for n_paths, block_size in ((11, 4096), (10, 5), (23, 3)):
            config = SimulationConfig(
                n_paths=n_paths,
                horizon_days=30,
                base_seed=4,
                block_size=block_size,
            )
            paths = simulate_regime_paths(model, config)
            self.assertTrue(np.array_equal(paths[:10], reference))

    def test_marginals(self):
        """Day-T frequencies match the propagated initial distribution."""
        model = TransitionModel(published.COUNTS)
        n_paths = 100_000
        config = SimulationConfig(
            n_paths=n_paths, horizon_days=63, base_seed=11, initial=State.DOWN
        )
        paths = simulate_regime_paths(model, config)
        expected = np.linalg.matrix_power(np.array(model.pi), 63)[0]
        observed = np.bincount(paths[:, -1], minlength=3) / n_paths
        std_err = np.sqrt(expected * (1.0 - expected) / n_paths)
        self.assertTrue(np.all(np.abs(observed - expected) <= 4.0 * std_err))

    def test_invalid_config(self):
        """Settings are checked."""
        with self.assertRaises(DomainError):
            SimulationConfig(n_paths=0, horizon_days=5)
        with self.assertRaises(DomainError):
            SimulationConfig(n_paths=10, horizon_days=0)
        with self.assertRaises(DomainError):
            SimulationConfig(n_paths=10, horizon_days=5, base_seed=-1)
        with self.assertRaises(DomainError):
            SimulationConfig(n_paths=10, horizon_days=5, n_workers=0)

    def test_blocks(self):
        """Blocks partition the paths."""
        config = SimulationConfig(n_paths=10, horizon_days=1, block_size=4)
        self.assertEqual(config.blocks, [(0, 0, 4), (1, 4, 8), (2, 8, 10)])


class TestReturnPaths(unittest.TestCase):
    """Test fixture for simulated returns."""

    def test_zero_covariance(self):
        """Without volatility, returns are the means."""
        model, cov = single_state_market(np.zeros((3, 3)))
        config = SimulationConfig(n_paths=50, horizon_days=4)
        means = np.array([0.001, -0.002, 0.0005])
        paths = simulate_regime_paths(model, config)
        returns = simulate_return_paths(cov, means, paths, config)
        self.assertEqual(returns.shape, (50, 4, 3))
        self.assertTrue(np.all(returns == means))

    def test_covariance(self):
        """Simulated returns have the regime covariance."""
        model, cov = single_state_market()
        n_paths = 100_000
        config = SimulationConfig(n_paths=n_paths, horizon_days=1, base_seed=5)
        paths = simulate_regime_paths(model, config)
        returns = simulate_return_paths(cov, np.zeros(3), paths, config)
        sample = np.cov(returns[:, 0, :], rowvar=False)
        variances = np.diag(MIDDLE_OMEGA)
        std_err = np.sqrt(
            (np.outer(variances, variances) + MIDDLE_OMEGA**2) / n_paths
        )
        self.assertTrue(
            np.all(np.abs(sample - MIDDLE_OMEGA) <= 4.0 * std_err)
        )

    def test_perfect_correlation(self):
        """Perfectly correlated assets move together."""
        omega = 1e-4 * np.ones((2, 2))
        model, cov = single_state_market(omega)
        config = SimulationConfig(n_paths=100, horizon_days=10)
        paths = simulate_regime_paths(model, config)
        returns = simulate_return_paths(
            cov, np.array([0.001, 0.001]), paths, config
        )
        spread = returns[..., 0] - returns[..., 1]
        self.assertLess(np.max(np.abs(spread)), 1e-12)

    def test_wrong_means(self):
        """There is one mean per asset."""
        model, cov = single_state_market()
        config = SimulationConfig(n_paths=10, horizon_days=2)
        paths = simulate_regime_paths(model, config)
        with self.assertRaises(DimensionError):
            simulate_return_paths(cov, np.zeros(2), paths, config)

    def test_returns_independent_of_batching(self):
        """Returns of a path do not depend on the blocks."""
        model, cov = single_state_market()
        returns = []
        for n_paths, block_size in ((8, 4096), (9, 2)):
            config = SimulationConfig(
                n_paths=n_paths,
                horizon_days=5,
                base_seed=2,
                block_size=block_size,
            )
            paths = simulate_regime_paths(model, config)
            returns.append(
                simulate_return_paths(cov, np.zeros(3), paths, config)
            )
        self.assertTrue(np.array_equal(returns[1][:8], returns[0]))

    def test_symmetric_factor(self):
        """Factors square to the matrix and reject indefinite ones."""
        factor = symmetric_factor(MIDDLE_OMEGA)
        self.assertTrue(np.allclose(factor, factor.T))
        self.assertTrue(np.allclose(factor @ factor, MIDDLE_OMEGA))
        with self.assertRaises(NotPositiveSemidefinite):
            symmetric_factor(np.diag([1.0, -1.0]), "indefinite")


class TestMonteCarloOracle(unittest.TestCase):
    """Test fixture for Monte Carlo expected covariances and prices."""

    def test_single_state(self):
        """A one-state chain has a deterministic expected covariance."""
        model, cov = single_state_market()
        contract = SwapContract(10, published.RATE, 0.0)
        config = SimulationConfig(n_paths=100, horizon_days=10)
        estimate = mc_expected_covariance(cov, model, contract, config)
        analytic = assemble_expected_covariance(cov, model, None, contract)
        self.assertTrue(
            np.allclose(estimate.mean, analytic.matrix, rtol=1e-12, atol=0.0)
        )
        self.assertEqual(estimate.n_paths, 100)

    def test_full_returns(self):
        """Realized covariances average to the regime covariance."""
        model, cov = single_state_market()
        contract = SwapContract(5, published.RATE, 0.0)
        config = SimulationConfig(
            n_paths=20_000,
            horizon_days=5,
            base_seed=2,
            mode=SimulationMode.FULL_RETURNS,
        )
        estimate = mc_expected_covariance(cov, model, contract, config)
        analytic = assemble_expected_covariance(cov, model, None, contract)
        self.assertTrue(
            np.all(
                np.abs(estimate.mean - analytic.matrix)
                <= 4.0 * estimate.std_err
            )
        )

    def test_generator_mode(self):
        """Simulated chains agree with the generator expectation."""
        model = model_from_generator(Q_TRUE)
        gen = derive_generator(model)
        cov = RegimeCovariance.from_matrices(
            {s: 1e-6 * omega for s, omega in TRUE_COVARIANCES.items()}
        )
        contract = SwapContract(63, published.RATE, 0.0)
        config = SimulationConfig(
            n_paths=100_000, horizon_days=63, base_seed=1, initial=State.DOWN
        )
        estimate = mc_expected_covariance(cov, model, contract, config)
        analytic = assemble_expected_covariance(
            cov,
            model,
            gen,
            contract,
            ExpectationMode.GENERATOR,
            initial=State.DOWN,
        ).matrix
        # daily trapezoid sums carry a small discretization bias
        tolerance = 4.0 * estimate.std_err + 1e-3 * np.abs(analytic)
        self.assertTrue(np.all(np.abs(estimate.mean - analytic) <= tolerance))

    def test_published_prices(self):
        """Monte Carlo prices bracket the closed-form prices."""
        model, cov = published_market()
        config = SimulationConfig(n_paths=20_000, horizon_days=63, base_seed=9)
        analytic = assemble_expected_covariance(
            cov,
            model,
            None,
            SwapContract(63, published.RATE, published.TRACE_STRIKE),
        )
        self.assertTrue(np.allclose(analytic.matrix, published.OMEGA, 1e-6))

        trace_contract = SwapContract(
            63, published.RATE, published.TRACE_STRIKE
        )
        trace = mc_swap_price(
            Measure.TRACE, cov, model, trace_contract, config
        )
        reference = price_trace(analytic, trace_contract).price
        self.assertLess(abs(trace.price - reference), 4.0 * trace.std_err)
        self.assertIsNone(trace.jensen_gap)

        eigen_contract = SwapContract(
            63,
            published.RATE,
            published.EIGEN_STRIKE,
            measure=Measure.MAX_EIGEN,
        )
        eigen = mc_swap_price(
            Measure.MAX_EIGEN,
            cov,
            model,
            eigen_contract,
            config,
            means=published.MEANS,
            k=published.K,
        )
        reference = price_eigen(
            analytic, published.MEANS, published.K, eigen_contract
        ).price
        self.assertLess(abs(eigen.price - reference), 4.0 * eigen.std_err)
        self.assertIsNotNone(eigen.jensen_gap)
        self.assertLess(max(eigen.weights.residuals()), 1e-8)

    def test_standard_error_rate(self):
        """Standard errors shrink as the square root of the paths."""
        model, cov = published_market()
        contract = SwapContract(63, published.RATE, 0.0)
        errors = [
            mc_swap_price(
                Measure.TRACE,
                cov,
                model,
                contract,
                SimulationConfig(n_paths=n_paths, horizon_days=63),
            ).std_err
            for n_paths in (4000, 16000)
        ]
        self.assertTrue(0.4 <= errors[1] / errors[0] <= 0.6)

    def test_missing_portfolio_inputs(self):
        """Max-eigen prices need means and a target return."""
        model, cov = published_market()
        contract = SwapContract(
            63, published.RATE, 0.0, measure=Measure.MAX_EIGEN
        )
        config = SimulationConfig(n_paths=10, horizon_days=63)
        with self.assertRaises(ConfigurationError):
            mc_swap_price(
                Measure.MAX_EIGEN, cov, model, contract, config,
                sense=Sense.MINIMIZE,
            )

    def test_horizon_mismatch(self):
        """The simulation horizon is the contract maturity."""
        model, cov = published_market()
        contract = SwapContract(63, published.RATE, 0.0)
        config = SimulationConfig(n_paths=10, horizon_days=21)
        with self.assertRaises(ConsistencyError):
            mc_expected_covariance(cov, model, contract, config)
