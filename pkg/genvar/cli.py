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

"""Command-line interface: ``genvar estimate | price | simulate | pipeline``.

Flags override the values of the ``--config`` file, which override the
defaults. The Monte Carlo seed defaults to the ``GENVAR_SEED`` environment
variable.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, NoReturn, Optional, Tuple

import typer

from .config import RunConfig
from .covariance import Centering
from .exceptions import ConfigurationError, GenvarError
from .expectation import ExpectationMode
from .frontier import Sense
from .pipeline import (
    contract_for,
    estimate_market,
    market_sections,
    prepare_inputs,
    run_pipeline,
    simulate_prices,
    stage,
)
from .regimes import ReturnKind
from .report import render_report, to_plain
from .simulation import SimulationMode
from .swaps import Measure, PricingResult, price_eigen, price_trace

logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Price generalized-variance swaps under regime-switching volatility.",
    no_args_is_help=True,
)
price_app = typer.Typer(
    help="Price a single swap.",
    no_args_is_help=True,
)
app.add_typer(price_app, name="price")


@dataclass
class CLIContext:
    """State shared by subcommands.

    Attributes:
        config: Configuration from defaults, config file and global flags.
    """

    config: RunConfig


def _setup_logging(level: str, verbose: bool, quiet: bool) -> None:
    log_level = level.upper()
    if verbose:
        log_level = "DEBUG"
    if quiet:
        log_level = "ERROR"
    logging.basicConfig(
        level=getattr(logging, log_level, logging.INFO),
        format="%(levelname)s | %(message)s",
    )


def _parse_names(spec: Optional[str]) -> Optional[Tuple[str, ...]]:
    if spec is None or spec.strip() == "":
        return None
    return tuple(name.strip() for name in spec.split(",") if name.strip())


def _parse_numbers(spec: Optional[str]) -> Optional[Tuple[float, ...]]:
    names = _parse_names(spec)
    if names is None:
        return None
    try:
        return tuple(float(x) for x in names)
    except ValueError as value_error:
        raise typer.BadParameter(
            f"expected comma-separated numbers, got {spec!r}"
        ) from value_error


def _fail(error: GenvarError, code: int = 1) -> NoReturn:
    typer.echo(f"error: {error}", err=True)
    raise typer.Exit(code=code)


def _resolve(
    ctx: typer.Context, require_means: bool = True, **changes: Any
) -> RunConfig:
    obj: CLIContext = ctx.obj
    try:
        return obj.config.override(**changes).validate(require_means)
    except ConfigurationError as error:
        _fail(error, code=2)


def _echo_json(values: Dict[str, Any]) -> None:
    typer.echo(json.dumps(to_plain(values), indent=2, allow_nan=False))


def _pricing_summary(result: PricingResult) -> Dict[str, Any]:
    summary: Dict[str, Any] = {
        "price": result.price,
        "gross_leg": result.gross_leg,
        "discounted_strike": result.discounted_strike,
        "diagnostics": result.diagnostics,
    }
    if result.weights is not None:
        summary["weights"] = result.weights.w
        summary["objective"] = result.weights.objective
    return summary


@app.callback()
def _global_options(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(
        None, "--config", "-c", help="JSON file of default settings."
    ),
    seed: Optional[int] = typer.Option(
        None, help="Base seed, overrides GENVAR_SEED."
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Verbose logging."
    ),
    quiet: bool = typer.Option(False, "--quiet", help="Quiet logging."),
    log_level: str = typer.Option(
        "WARNING", help="Log level (DEBUG, INFO, WARNING, ERROR)."
    ),
) -> None:
    _setup_logging(log_level, verbose, quiet)
    try:
        base = RunConfig.from_file(config) if config else RunConfig()
    except ConfigurationError as error:
        _fail(error, code=2)
    ctx.obj = CLIContext(config=base.override(seed=seed))


@app.command()
def estimate(
    ctx: typer.Context,
    input_path: Path = typer.Option(
        ..., "--input", "-i", help="CSV file of daily closing prices."
    ),
    assets: Optional[str] = typer.Option(
        None, help="Comma-separated asset columns, all by default."
    ),
    date_column: Optional[str] = typer.Option(
        None, help="Name of the date column."
    ),
    return_kind: Optional[ReturnKind] = typer.Option(
        None, help="Simple or log returns."
    ),
    centering: Optional[Centering] = typer.Option(
        None, help="Mean that regime deviations are taken from."
    ),
    mode: Optional[ExpectationMode] = typer.Option(
        None, help="Expectation rule, generator mode also derives Q."
    ),
    dt: Optional[float] = typer.Option(
        None, help="Period length of one transition, in trading days."
    ),
) -> None:
    """Estimate transition probabilities and regime covariances."""
    config = _resolve(
        ctx,
        input_path=input_path,
        assets=_parse_names(assets),
        date_column=date_column,
        return_kind=return_kind,
        centering=centering,
        mode=mode,
        dt=dt,
    )
    try:
        market = estimate_market(config)
    except GenvarError as error:
        _fail(error)
    _echo_json(market_sections(market))


@price_app.command("trace")
def price_trace_command(
    ctx: typer.Context,
    input_path: Optional[Path] = typer.Option(
        None, "--input", "-i", help="CSV file of daily closing prices."
    ),
    fixture: Optional[Path] = typer.Option(
        None, help="Expected covariance matrix file, bypasses estimation."
    ),
    assets: Optional[str] = typer.Option(
        None, help="Comma-separated asset columns, all by default."
    ),
    maturity: Optional[int] = typer.Option(
        None, help="Maturity T in trading days."
    ),
    rate: Optional[float] = typer.Option(
        None, help="Interest rate per trading day."
    ),
    strike: Optional[float] = typer.Option(
        None, help="Strike in variance points."
    ),
    notional: Optional[float] = typer.Option(None, help="Notional."),
    mode: Optional[ExpectationMode] = typer.Option(
        None, help="Expectation rule."
    ),
    initial: Optional[str] = typer.Option(
        None, help="'stationary', 'state:<name>' or probabilities."
    ),
    dt: Optional[float] = typer.Option(
        None, help="Period length of one transition, in trading days."
    ),
) -> None:
    """Price a trace swap."""
    config = _resolve(
        ctx,
        require_means=False,
        input_path=input_path,
        fixture_path=fixture,
        assets=_parse_names(assets),
        maturity_days=maturity,
        daily_rate=rate,
        trace_strike=strike,
        notional=notional,
        mode=mode,
        initial=initial,
        dt=dt,
    )
    try:
        _, expected, _ = prepare_inputs(config)
        with stage("trace_swap"):
            result = price_trace(expected, contract_for(config, Measure.TRACE))
    except GenvarError as error:
        _fail(error)
    _echo_json(_pricing_summary(result))


@price_app.command("eigen")
def price_eigen_command(
    ctx: typer.Context,
    input_path: Optional[Path] = typer.Option(
        None, "--input", "-i", help="CSV file of daily closing prices."
    ),
    fixture: Optional[Path] = typer.Option(
        None, help="Expected covariance matrix file, bypasses estimation."
    ),
    assets: Optional[str] = typer.Option(
        None, help="Comma-separated asset columns, all by default."
    ),
    means: Optional[str] = typer.Option(
        None, help="Comma-separated mean daily returns."
    ),
    k: Optional[float] = typer.Option(
        None, help="Target mean daily return of the portfolio."
    ),
    sense: Optional[Sense] = typer.Option(
        None, help="Maximize or minimize the portfolio variance."
    ),
    maturity: Optional[int] = typer.Option(
        None, help="Maturity T in trading days."
    ),
    rate: Optional[float] = typer.Option(
        None, help="Interest rate per trading day."
    ),
    strike: Optional[float] = typer.Option(
        None, help="Strike in variance points."
    ),
    notional: Optional[float] = typer.Option(None, help="Notional."),
    mode: Optional[ExpectationMode] = typer.Option(
        None, help="Expectation rule."
    ),
    initial: Optional[str] = typer.Option(
        None, help="'stationary', 'state:<name>' or probabilities."
    ),
    dt: Optional[float] = typer.Option(
        None, help="Period length of one transition, in trading days."
    ),
) -> None:
    """Price a maximum-eigenvalue swap."""
    config = _resolve(
        ctx,
        input_path=input_path,
        fixture_path=fixture,
        assets=_parse_names(assets),
        means=_parse_numbers(means),
        k=k,
        sense=sense,
        maturity_days=maturity,
        daily_rate=rate,
        eigen_strike=strike,
        notional=notional,
        mode=mode,
        initial=initial,
        dt=dt,
    )
    try:
        _, expected, mean_returns = prepare_inputs(config)
        with stage("eigen_swap"):
            result = price_eigen(
                expected,
                mean_returns,
                config.k,
                contract_for(config, Measure.MAX_EIGEN),
                config.sense,
            )
    except GenvarError as error:
        _fail(error)
    _echo_json(_pricing_summary(result))


@app.command()
def simulate(
    ctx: typer.Context,
    input_path: Path = typer.Option(
        ..., "--input", "-i", help="CSV file of daily closing prices."
    ),
    assets: Optional[str] = typer.Option(
        None, help="Comma-separated asset columns, all by default."
    ),
    means: Optional[str] = typer.Option(
        None, help="Comma-separated mean daily returns."
    ),
    paths: int = typer.Option(10000, help="Number of simulated paths."),
    seed: Optional[int] = typer.Option(None, help="Base seed."),
    simulation_mode: Optional[SimulationMode] = typer.Option(
        None, help="Simulate the regime chain only, or returns too."
    ),
    maturity: Optional[int] = typer.Option(
        None, help="Maturity T in trading days."
    ),
    rate: Optional[float] = typer.Option(
        None, help="Interest rate per trading day."
    ),
    trace_strike: Optional[float] = typer.Option(
        None, help="Strike of the trace swap."
    ),
    eigen_strike: Optional[float] = typer.Option(
        None, help="Strike of the max-eigen swap."
    ),
    k: Optional[float] = typer.Option(
        None, help="Target mean daily return of the portfolio."
    ),
    initial: Optional[str] = typer.Option(
        None, help="'stationary', 'state:<name>' or probabilities."
    ),
    block_size: Optional[int] = typer.Option(
        None, help="Paths simulated per unit of work."
    ),
    workers: Optional[int] = typer.Option(
        None, help="Number of simulation threads."
    ),
) -> None:
    """Monte Carlo prices of both swaps with standard errors."""
    config = _resolve(
        ctx,
        input_path=input_path,
        assets=_parse_names(assets),
        means=_parse_numbers(means),
        n_paths=paths,
        seed=seed,
        simulation_mode=simulation_mode,
        maturity_days=maturity,
        daily_rate=rate,
        trace_strike=trace_strike,
        eigen_strike=eigen_strike,
        k=k,
        initial=initial,
        block_size=block_size,
        n_workers=workers,
    )
    try:
        market = estimate_market(config)
        trace, eigen = simulate_prices(config, market)
    except GenvarError as error:
        _fail(error)
    _echo_json(
        {
            "n_paths": trace.n_paths,
            "seed": config.seed,
            "trace": {
                "price": trace.price,
                "std_err": trace.std_err,
                "gross_leg": trace.gross_leg,
            },
            "eigen": {
                "price": eigen.price,
                "std_err": eigen.std_err,
                "gross_leg": eigen.gross_leg,
                "jensen_gap": eigen.jensen_gap,
            },
        }
    )


@app.command()
def pipeline(
    ctx: typer.Context,
    input_path: Optional[Path] = typer.Option(
        None, "--input", "-i", help="CSV file of daily closing prices."
    ),
    fixture: Optional[Path] = typer.Option(
        None, help="Expected covariance matrix file, bypasses estimation."
    ),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Report file, printed if unset."
    ),
    assets: Optional[str] = typer.Option(
        None, help="Comma-separated asset columns, all by default."
    ),
    means: Optional[str] = typer.Option(
        None, help="Comma-separated mean daily returns."
    ),
    k: Optional[float] = typer.Option(
        None, help="Target mean daily return of the portfolio."
    ),
    maturity: Optional[int] = typer.Option(
        None, help="Maturity T in trading days."
    ),
    rate: Optional[float] = typer.Option(
        None, help="Interest rate per trading day."
    ),
    trace_strike: Optional[float] = typer.Option(
        None, help="Strike of the trace swap."
    ),
    eigen_strike: Optional[float] = typer.Option(
        None, help="Strike of the max-eigen swap."
    ),
    notional: Optional[float] = typer.Option(None, help="Notional."),
    mode: Optional[ExpectationMode] = typer.Option(
        None, help="Expectation rule."
    ),
    initial: Optional[str] = typer.Option(
        None, help="'stationary', 'state:<name>' or probabilities."
    ),
    paths: Optional[int] = typer.Option(
        None, help="Number of Monte Carlo paths, no simulation if unset."
    ),
    seed: Optional[int] = typer.Option(None, help="Base seed."),
) -> None:
    """Run estimation, pricing and simulation, and write the report."""
    obj: CLIContext = ctx.obj
    config = obj.config.override(
        input_path=input_path,
        fixture_path=fixture,
        output_path=output,
        assets=_parse_names(assets),
        means=_parse_numbers(means),
        k=k,
        maturity_days=maturity,
        daily_rate=rate,
        trace_strike=trace_strike,
        eigen_strike=eigen_strike,
        notional=notional,
        mode=mode,
        initial=initial,
        n_paths=paths,
        seed=seed,
    )
    result = run_pipeline(config)
    if config.output_path is None:
        typer.echo(render_report(result.report), nl=False)
    if result.exit_code != 0:
        error = result.report["error"]
        typer.echo(f"error in {error['module']}: {error['message']}", err=True)
    raise typer.Exit(code=result.exit_code)


def main() -> None:
    """Entry point of the ``genvar`` console script."""
    app(prog_name="genvar")
