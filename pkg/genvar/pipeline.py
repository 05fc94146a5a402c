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

"""Full pricing pipeline, from prices or a matrix fixture to a report."""

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Tuple, Union

import numpy as np

from .config import RunConfig
from .covariance import (
    ExpectedCovariance,
    RegimeCovariance,
    assemble_expected_covariance,
    estimate_regime_covariance,
)
from .exceptions import GenvarError, StageError
from .expectation import ExpectationMode
from .generator import GeneratorModel, derive_generator
from .regimes import (
    IngestionConfig,
    ParseError,
    TransitionModel,
    classify_states,
    compute_returns,
    estimate_transition,
    load_price_csv,
)
from .report import emit_report
from .simulation import MonteCarloPrice, SimulationConfig, mc_swap_price
from .swaps import (
    Measure,
    PricingResult,
    SwapContract,
    price_eigen,
    price_trace,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarketEstimate:
    """Regime model estimated from a price file.

    Attributes:
        asset_names: Labels of the assets.
        model: Transition model of the combined regimes.
        cov: Per-regime covariances.
        gen: Generator model, in generator mode only.
        means: Mean daily return of each asset.
    """

    asset_names: Tuple[str, ...]
    model: TransitionModel
    cov: RegimeCovariance
    gen: Optional[GeneratorModel]
    means: np.ndarray


@dataclass
class PipelineResult:
    """Outcome of a pipeline run.

    Attributes:
        report: Report values, with an ``error`` entry on failure.
        exit_code: Zero on success, one if a stage failed.
    """

    report: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0


@contextmanager
def stage(module: str) -> Iterator[None]:
    """Attribute errors raised in a block to a module of the pipeline.

    Args:
        module: Name of the module, e.g. ``"regime_inference"``.

    Raises:
        StageError: wrapping any genvar error raised in the block.
    """
    try:
        yield
    except StageError:
        raise
    except GenvarError as error:
        raise StageError(module, error) from error


def load_matrix_fixture(path: Union[str, Path]) -> np.ndarray:
    """Read a square matrix from a plain text file.

    Args:
        path: File with one row per line and whitespace-separated decimals.

    Returns:
        Square matrix.

    Raises:
        ParseError: if the file is unreadable or the matrix is not square.
    """
    try:
        matrix = np.loadtxt(path, dtype=float, ndmin=2)
    except (OSError, ValueError) as error:
        raise ParseError(str(path), None, str(error)) from error
    if matrix.shape[0] != matrix.shape[1]:
        raise ParseError(
            str(path), None, f"matrix should be square, got {matrix.shape}"
        )
    return matrix


def contract_for(config: RunConfig, measure: Measure) -> SwapContract:
    """Swap contract on a measure with the terms of a configuration."""
    strike = (
        config.trace_strike
        if measure is Measure.TRACE
        else config.eigen_strike
    )
    return SwapContract(
        maturity_days=config.maturity_days,
        daily_rate=config.daily_rate,
        strike=strike,
        notional_units=config.notional,
        measure=measure,
    )


def estimate_market(config: RunConfig) -> MarketEstimate:
    """Estimate the regime model from the input price file.

    Args:
        config: Run configuration with an input path.

    Returns:
        Estimated market.

    Raises:
        StageError: if a stage fails.
    """
    with stage("regime_inference"):
        panel = load_price_csv(
            config.input_path,
            IngestionConfig(config.date_column, config.assets),
        )
        series = compute_returns(panel, config.return_kind)
        labeling = classify_states(series)
        model = estimate_transition(labeling)
    gen = None
    if config.mode is ExpectationMode.GENERATOR:
        with stage("markov_engine"):
            gen = derive_generator(model, config.dt)
    with stage("regime_covariance"):
        cov = estimate_regime_covariance(series, labeling, config.centering)
    means = (
        np.array(config.means, dtype=float)
        if config.means is not None
        else np.array(series.means)
    )
    logger.info(
        "Estimated %d regimes over %d periods",
        model.n_states,
        series.n_periods,
    )
    return MarketEstimate(panel.asset_names, model, cov, gen, means)


def prepare_inputs(
    config: RunConfig,
) -> Tuple[
    Optional[MarketEstimate], ExpectedCovariance, Optional[np.ndarray]
]:
    """Get the expected covariance and mean returns of a run.

    Args:
        config: Validated run configuration.

    Returns:
        Estimated market, or ``None`` with a fixture, expected covariance
        matrix and mean returns, ``None`` for a fixture run without them.

    Raises:
        StageError: if a stage fails.
    """
    if config.fixture_path is not None:
        with stage("regime_covariance"):
            expected = ExpectedCovariance.from_fixture(
                load_matrix_fixture(config.fixture_path),
                config.maturity_days,
                config.daily_rate,
            )
        means = (
            np.array(config.means, dtype=float)
            if config.means is not None
            else None
        )
        return None, expected, means
    market = estimate_market(config)
    with stage("regime_covariance"):
        expected = assemble_expected_covariance(
            market.cov,
            market.model,
            market.gen,
            contract_for(config, Measure.TRACE),
            config.mode,
            config.initial_state,
        )
    return market, expected, market.means


def simulate_prices(
    config: RunConfig, market: MarketEstimate
) -> Tuple[MonteCarloPrice, MonteCarloPrice]:
    """Monte Carlo prices of both swaps.

    Args:
        config: Run configuration with a number of paths.
        market: Estimated market.

    Returns:
        Trace and max-eigen price estimates.

    Raises:
        StageError: if the simulation fails.
    """
    with stage("mc_oracle"):
        sim_config = SimulationConfig(
            n_paths=config.n_paths,
            horizon_days=config.maturity_days,
            base_seed=config.seed,
            mode=config.simulation_mode,
            initial=config.initial_state,
            block_size=config.block_size,
            n_workers=config.n_workers,
        )
        trace = mc_swap_price(
            Measure.TRACE,
            market.cov,
            market.model,
            contract_for(config, Measure.TRACE),
            sim_config,
        )
        eigen = mc_swap_price(
            Measure.MAX_EIGEN,
            market.cov,
            market.model,
            contract_for(config, Measure.MAX_EIGEN),
            sim_config,
            means=market.means,
            k=config.k,
            sense=config.sense,
        )
    return trace, eigen


def market_sections(market: MarketEstimate) -> Dict[str, Any]:
    """Report sections describing an estimated market."""
    sections: Dict[str, Any] = {
        "transition_matrix": market.model.pi,
        "transition_std_err": market.model.std_err,
        "stationary": market.model.stationary,
        "regime_covariance": {
            str(state): matrix
            for state, matrix in market.cov.per_state.items()
        },
        "asset_names": list(market.asset_names),
        "states": [str(state) for state in market.model.states],
    }
    if market.gen is not None:
        sections["generator"] = {
            "matrix": market.gen.q,
            "source": market.gen.source,
            "fallback_reason": market.gen.fallback_reason,
        }
    return sections


def __diagnostics(
    trace: PricingResult, eigen: PricingResult
) -> Dict[str, Any]:
    return {
        "trace": {
            "gross_leg": trace.gross_leg,
            "discounted_strike": trace.discounted_strike,
            **trace.diagnostics,
        },
        "eigen": {
            "gross_leg": eigen.gross_leg,
            "discounted_strike": eigen.discounted_strike,
            "q": eigen.weights.q,
            "r": eigen.weights.r_vec,
            "residuals": list(eigen.weights.residuals()),
            **eigen.diagnostics,
        },
    }


def run_pipeline(
    config: RunConfig, timestamp: Optional[str] = None
) -> PipelineResult:
    """Estimate, price and optionally simulate, then write the report.

    With a fixture, the expected covariance is read from a matrix file and
    the estimation sections of the report are ``null``.

    Args:
        config: Run configuration.
        timestamp: Timestamp written to the report, defaults to now.

    Returns:
        Report and exit code. Errors are recorded in the report under
        ``error`` with the module that raised them.
    """
    report: Dict[str, Any] = {}
    try:
        with stage("cli"):
            config.validate()
        report["seed"] = config.seed
        market, expected, means = prepare_inputs(config)
        if market is not None:
            report.update(market_sections(market))
        report["mode"] = config.mode if market is not None else "fixture"
        report["expected_covariance"] = expected.matrix
        report["discount_factor"] = expected.discount

        with stage("trace_swap"):
            trace = price_trace(expected, contract_for(config, Measure.TRACE))
        report["trace_price"] = trace.price

        with stage("eigen_swap"):
            eigen = price_eigen(
                expected,
                means,
                config.k,
                contract_for(config, Measure.MAX_EIGEN),
                config.sense,
            )
        report["eigen_price"] = eigen.price
        report["weights"] = eigen.weights.w
        report["objective"] = eigen.weights.objective
        report["contract"] = {
            "maturity_days": config.maturity_days,
            "daily_rate": config.daily_rate,
            "trace_strike": config.trace_strike,
            "eigen_strike": config.eigen_strike,
            "notional": config.notional,
            "k": config.k,
            "means": means,
            "sense": config.sense,
        }
        report["diagnostics"] = __diagnostics(trace, eigen)

        if config.n_paths is not None:
            if market is None:
                logger.warning("Fixture runs are not simulated")
            else:
                mc_trace, mc_eigen = simulate_prices(config, market)
                report["monte_carlo"] = {
                    "n_paths": mc_trace.n_paths,
                    "simulation_mode": config.simulation_mode,
                    "trace_price": mc_trace.price,
                    "trace_std_err": mc_trace.std_err,
                    "eigen_price": mc_eigen.price,
                    "eigen_std_err": mc_eigen.std_err,
                    "jensen_gap": mc_eigen.jensen_gap,
                }

        if config.output_path is not None:
            with stage("cli"):
                emit_report(report, config.output_path, timestamp)
    except StageError as error:
        logger.error("%s failed: %s", error.module, error.message)
        report["error"] = {"module": error.module, "message": error.message}
        if config.output_path is not None:
            try:
                emit_report(report, config.output_path, timestamp)
            except GenvarError as report_error:
                logger.error("Cannot write error report: %s", report_error)
        return PipelineResult(report=report, exit_code=1)
    return PipelineResult(report=report, exit_code=0)
