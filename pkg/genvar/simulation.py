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

r"""Monte Carlo simulation of Markov-modulated asset returns.

The market is simulated exactly in its daily discretization: the regime
chain moves by :math:`\Pi` every day, and the return vector of a day in
regime :math:`s` is drawn from :math:`\mathcal{N}(\mu, \Omega(s))`.

Path :math:`i` draws from its own random substream keyed by
``(base_seed, i, stream)``, where the position in the substream is the day.
Blocks only batch paths into units of work, so a path is the same whatever
the number of paths, the block size or the number of workers.
"""

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, TypeVar

import numpy as np

from .covariance import VARIANCE_SCALE, RegimeCovariance
from .exceptions import (
    ConfigurationError,
    ConsistencyError,
    DimensionError,
    DomainError,
    NotPositiveSemidefinite,
)
from .frontier import EfficientWeights, Sense, constrained_max_variance
from .regimes import TransitionModel
from .regimes.transition import InitialState
from .swaps import Measure, SwapContract

logger = logging.getLogger(__name__)

T = TypeVar("T")

CHAIN_STREAM: int = 0
RETURNS_STREAM: int = 1


class SimulationMode(enum.Enum):
    """What is simulated along each path."""

    CHAIN_ONLY = "chain-only"
    FULL_RETURNS = "full-returns"


@dataclass(frozen=True)
class SimulationConfig:
    """Monte Carlo settings.

    Attributes:
        n_paths: Number of simulated paths.
        horizon_days: Number of simulated days :math:`T`.
        base_seed: Nonnegative seed all random substreams derive from.
        mode: Whether covariances are read from the regime path or estimated
            from simulated returns.
        initial: Initial state, index or distribution. Defaults to the
            stationary distribution.
        block_size: Number of paths simulated per unit of work.
        n_workers: Number of threads simulating blocks.
    """

    n_paths: int
    horizon_days: int
    base_seed: int = 0
    mode: SimulationMode = SimulationMode.CHAIN_ONLY
    initial: InitialState = None
    block_size: int = 4096
    n_workers: int = 1

    def __post_init__(self) -> None:
        """Check settings."""
        if self.n_paths < 1:
            raise DomainError(f"need at least one path, got {self.n_paths}")
        if self.horizon_days < 1:
            raise DomainError("horizon should be at least one day")
        if self.base_seed < 0:
            raise DomainError("base seed should be nonnegative")
        if self.block_size < 1 or self.n_workers < 1:
            raise DomainError("block size and workers should be positive")

    @property
    def blocks(self) -> List[Tuple[int, int, int]]:
        """Triplets ``(block, start, stop)`` of path indices per block."""
        return [
            (block, start, min(start + self.block_size, self.n_paths))
            for block, start in enumerate(
                range(0, self.n_paths, self.block_size)
            )
        ]


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Monte Carlo estimate of the expected covariance matrix.

    Attributes:
        mean: Estimated matrix, in variance points.
        std_err: Standard error of each entry.
        n_paths: Number of paths averaged.
    """

    mean: np.ndarray
    std_err: np.ndarray
    n_paths: int


@dataclass(frozen=True)
class MonteCarloPrice:
    """Monte Carlo estimate of a swap price.

    Attributes:
        price: Estimated price.
        std_err: Standard error of the price.
        gross_leg: Estimated gross leg.
        discounted_strike: Present value of the strike leg.
        n_paths: Number of paths averaged.
        jensen_gap: For max-eigen swaps, mean per-path extremal variance minus
            the gross leg.
        weights: For max-eigen swaps, weights on the estimated matrix.
    """

    price: float
    std_err: float
    gross_leg: float
    discounted_strike: float
    n_paths: int
    jensen_gap: Optional[float] = None
    weights: Optional[EfficientWeights] = None


def path_generator(
    base_seed: int, path: int, stream: int
) -> np.random.Generator:
    """Random generator of a path substream.

    Args:
        base_seed: Seed of the simulation.
        path: Path index.
        stream: Stream index, one per kind of random draw.

    Returns:
        Generator seeded from ``(base_seed, path, stream)``.
    """
    sequence = np.random.SeedSequence(
        entropy=base_seed, spawn_key=(path, stream)
    )
    return np.random.default_rng(sequence)


def symmetric_factor(omega: np.ndarray, label: str = "matrix") -> np.ndarray:
    r"""Symmetric square root :math:`F` with :math:`F F = \Omega`.

    Args:
        omega: Symmetric positive semidefinite matrix.
        label: Name used in error messages.

    Returns:
        Symmetric factor.

    Raises:
        NotPositiveSemidefinite: if the matrix has a negative eigenvalue.
    """
    eigvals, eigvecs = np.linalg.eigh(omega)
    if eigvals[0] < -1e-10:
        raise NotPositiveSemidefinite(label, float(eigvals[0]))
    roots = np.sqrt(np.clip(eigvals, 0.0, None))
    return (eigvecs * roots) @ eigvecs.T


def __map_blocks(
    func: Callable[[Tuple[int, int, int]], T], config: SimulationConfig
) -> List[T]:
    if config.n_workers == 1:
        return [func(block) for block in config.blocks]
    with ThreadPoolExecutor(max_workers=config.n_workers) as executor:
        return list(executor.map(func, config.blocks))


def __draw(cumulative: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    indices = np.sum(uniforms[:, np.newaxis] >= cumulative, axis=1)
    return np.minimum(indices, cumulative.shape[-1] - 1)


def __cumulative(probabilities: np.ndarray) -> np.ndarray:
    cumulative = np.cumsum(probabilities, axis=-1)
    cumulative[..., -1] = 1.0
    return cumulative


def __chain_block(
    pi_cumulative: np.ndarray,
    initial_cumulative: np.ndarray,
    horizon: int,
    block: Tuple[int, int, int],
    base_seed: int,
) -> np.ndarray:
    _, start, stop = block
    uniforms = np.stack(
        [
            path_generator(base_seed, path, CHAIN_STREAM).random(horizon + 1)
            for path in range(start, stop)
        ]
    )
    states = np.empty((stop - start, horizon + 1), dtype=np.int64)
    states[:, 0] = __draw(initial_cumulative[np.newaxis, :], uniforms[:, 0])
    for day in range(1, horizon + 1):
        previous = states[:, day - 1]
        states[:, day] = __draw(pi_cumulative[previous], uniforms[:, day])
    return states


def __noise_block(
    factors: np.ndarray,
    states: np.ndarray,
    start: int,
    base_seed: int,
) -> np.ndarray:
    count, horizon = states.shape
    shape = (horizon, factors.shape[1])
    z = np.stack(
        [
            path_generator(base_seed, path, RETURNS_STREAM).standard_normal(
                shape
            )
            for path in range(start, start + count)
        ]
    )
    noise = np.zeros_like(z)
    for index, factor in enumerate(factors):
        mask = states == index
        noise[mask] = z[mask] @ factor
    return noise


def __factors(cov: RegimeCovariance) -> np.ndarray:
    return np.stack(
        [
            symmetric_factor(cov.matrices[i], str(state))
            for i, state in enumerate(cov.states)
        ]
    )


def simulate_regime_paths(
    model: TransitionModel, config: SimulationConfig
) -> np.ndarray:
    """Simulate the regime chain day by day.

    Args:
        model: Transition model.
        config: Simulation settings.

    Returns:
        Integer matrix of shape ``(n_paths, horizon_days + 1)`` of state
        indices in ``model.states``, day zero included.
    """
    initial = model.initial_distribution(config.initial)
    pi_cumulative = __cumulative(np.array(model.pi))
    initial_cumulative = __cumulative(initial)

    def simulate(block: Tuple[int, int, int]) -> np.ndarray:
        return __chain_block(
            pi_cumulative,
            initial_cumulative,
            config.horizon_days,
            block,
            config.base_seed,
        )

    paths = np.concatenate(__map_blocks(simulate, config))
    logger.debug("Simulated %d regime paths", paths.shape[0])
    return paths


def simulate_return_paths(
    cov: RegimeCovariance,
    means: np.ndarray,
    paths: np.ndarray,
    config: SimulationConfig,
) -> np.ndarray:
    r"""Simulate daily returns along regime paths.

    The return of day :math:`t \geq 1` is :math:`\mu + F(s_t) z_t` where
    :math:`F(s)` is the symmetric square root of :math:`\Omega(s)` and
    :math:`z_t` is standard normal.

    Args:
        cov: Per-regime covariances.
        means: Mean daily return of each asset.
        paths: Regime paths from :func:`simulate_regime_paths`.
        config: Simulation settings.

    Returns:
        Array of shape ``(n_paths, horizon_days, n)`` of simulated returns.

    Raises:
        NotPositiveSemidefinite: if a regime covariance is not positive
            semidefinite.
    """
    means = np.asarray(means, dtype=float)
    if means.shape != (cov.n_assets,):
        raise DimensionError(f"expected {cov.n_assets} mean returns")
    if paths.shape != (config.n_paths, config.horizon_days + 1):
        raise DimensionError(f"regime paths have shape {paths.shape}")
    factors = __factors(cov)

    def simulate(block: Tuple[int, int, int]) -> np.ndarray:
        _, start, stop = block
        return __noise_block(
            factors, paths[start:stop, 1:], start, config.base_seed
        )

    noise = np.concatenate(__map_blocks(simulate, config))
    return means + noise


def __path_covariances(
    cov: RegimeCovariance,
    model: TransitionModel,
    contract: SwapContract,
    config: SimulationConfig,
) -> np.ndarray:
    """Discounted time-averaged covariance along each path.

    In chain-only mode, regime covariances are averaged with trapezoid
    weights over days ``0..T``. In full-returns mode, outer products of
    simulated return deviations are averaged over days ``1..T``.
    """
    if cov.states != model.states:
        raise ConsistencyError(
            "covariances and transition model have different states"
        )
    if config.horizon_days != contract.maturity_days:
        raise ConsistencyError(
            f"simulation horizon {config.horizon_days} differs from "
            f"maturity {contract.maturity_days}"
        )
    horizon = config.horizon_days
    time_weights = np.full(horizon + 1, 1.0 / horizon)
    time_weights[[0, -1]] = 0.5 / horizon
    scale = contract.discount_factor * VARIANCE_SCALE
    paths = simulate_regime_paths(model, config)
    factors = __factors(cov)

    def average(block: Tuple[int, int, int]) -> np.ndarray:
        _, start, stop = block
        states = paths[start:stop]
        if config.mode is SimulationMode.CHAIN_ONLY:
            occupancy = np.stack(
                [
                    (states == i) @ time_weights
                    for i in range(len(cov.states))
                ],
                axis=1,
            )
            return scale * np.einsum("pj,jab->pab", occupancy, cov.matrices)
        noise = __noise_block(factors, states[:, 1:], start, config.base_seed)
        return (scale / horizon) * np.einsum("pta,ptb->pab", noise, noise)

    return np.concatenate(__map_blocks(average, config))


def __mean_and_error(samples: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    mean = samples.mean(axis=0)
    if samples.shape[0] < 2:
        return mean, np.full_like(mean, np.nan)
    std_err = samples.std(axis=0, ddof=1) / np.sqrt(samples.shape[0])
    return mean, std_err


def mc_expected_covariance(
    cov: RegimeCovariance,
    model: TransitionModel,
    contract: SwapContract,
    config: SimulationConfig,
) -> MonteCarloEstimate:
    r"""Monte Carlo estimate of the expected covariance matrix.

    Each path contributes :math:`e^{-rT} \cdot 10^6 \cdot \frac{1}{T}
    \sum_t \Omega(s_t)`, or its realized counterpart in full-returns mode.

    Args:
        cov: Per-regime covariances.
        model: Transition model.
        contract: Contract providing maturity and rate.
        config: Simulation settings, with horizon the contract maturity.

    Returns:
        Estimated matrix with per-entry standard errors.
    """
    samples = __path_covariances(cov, model, contract, config)
    mean, std_err = __mean_and_error(samples)
    return MonteCarloEstimate(
        mean=mean, std_err=std_err, n_paths=samples.shape[0]
    )


def mc_swap_price(
    measure: Measure,
    cov: RegimeCovariance,
    model: TransitionModel,
    contract: SwapContract,
    config: SimulationConfig,
    means: Optional[np.ndarray] = None,
    k: Optional[float] = None,
    sense: Sense = Sense.MAXIMIZE,
    jensen_paths: int = 256,
) -> MonteCarloPrice:
    """Monte Carlo estimate of a swap price.

    The gross leg applies the measure to the estimated expected covariance
    matrix. Its standard error is that of the per-path legs, with weights
    held fixed for max-eigen swaps. For max-eigen swaps, weights are also
    re-optimized on the first ``jensen_paths`` per-path matrices to report
    the Jensen gap.

    Args:
        measure: Generalized variance of the swap.
        cov: Per-regime covariances.
        model: Transition model.
        contract: Contract terms.
        config: Simulation settings, with horizon the contract maturity.
        means: Mean return of each asset, for max-eigen swaps.
        k: Target mean return, for max-eigen swaps.
        sense: Whether the portfolio maximizes or minimizes variance.
        jensen_paths: Number of paths re-optimized for the Jensen gap.

    Returns:
        Estimated price with its standard error.

    Raises:
        ConfigurationError: if a max-eigen price is requested without means
            or target.
    """
    samples = __path_covariances(cov, model, contract, config)
    mean = samples.mean(axis=0)
    jensen_gap = None
    weights = None
    if measure is Measure.TRACE:
        legs = np.einsum("paa->p", samples)
        gross_leg = float(np.trace(mean))
    else:
        if means is None or k is None:
            raise ConfigurationError(
                "max-eigen swaps need mean returns and a target return"
            )
        weights = constrained_max_variance(mean, means, k, sense)
        w = weights.w
        legs = np.einsum("a,pab,b->p", w, samples, w)
        gross_leg = float(w @ mean @ w)
        per_path = [
            constrained_max_variance(sample, means, k, sense).objective
            for sample in samples[:jensen_paths]
        ]
        jensen_gap = float(np.mean(per_path)) - gross_leg
    _, leg_error = __mean_and_error(legs)
    notional = contract.notional_scale
    gross_leg *= notional
    discounted_strike = notional * contract.discounted_strike
    logger.debug(
        "Monte Carlo %s leg %.6f +/- %.6f",
        measure.value,
        gross_leg,
        notional * float(leg_error),
    )
    return MonteCarloPrice(
        price=gross_leg - discounted_strike,
        std_err=notional * float(leg_error),
        gross_leg=gross_leg,
        discounted_strike=discounted_strike,
        n_paths=samples.shape[0],
        jensen_gap=jensen_gap,
        weights=weights,
    )
