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

"""Run configuration of the pricing pipeline."""

import json
import os
import re
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np

from .covariance import Centering
from .exceptions import ConfigurationError
from .expectation import ExpectationMode
from .frontier import Sense
from .regimes import ReturnKind, State
from .regimes.transition import InitialState
from .simulation import SimulationMode

SEED_VARIABLE: str = "GENVAR_SEED"

_ENUM_FIELDS = {
    "mode": ExpectationMode,
    "return_kind": ReturnKind,
    "centering": Centering,
    "sense": Sense,
    "simulation_mode": SimulationMode,
}

_PATH_FIELDS = ("input_path", "output_path", "fixture_path")


def default_seed() -> int:
    """Seed from the environment, or zero.

    Returns:
        Value of the ``GENVAR_SEED`` environment variable if set, else 0.

    Raises:
        ConfigurationError: if the variable is not an integer.
    """
    value = os.environ.get(SEED_VARIABLE)
    if value is None or value.strip() == "":
        return 0
    try:
        return int(value)
    except ValueError as value_error:
        raise ConfigurationError(
            f"{SEED_VARIABLE}={value!r} is not an integer"
        ) from value_error


def parse_initial(text: str) -> InitialState:
    """Parse an initial-distribution choice.

    Args:
        text: ``"stationary"``, ``"state:<name>"`` such as ``"state:Down"``,
            or probabilities separated by commas or spaces.

    Returns:
        ``None`` for the stationary distribution, a state, or a vector.

    Raises:
        ConfigurationError: if the text matches none of these forms.
    """
    choice = text.strip()
    if choice.lower() == "stationary":
        return None
    if choice.lower().startswith("state:"):
        try:
            return State.parse(choice.split(":", 1)[1])
        except ValueError as value_error:
            raise ConfigurationError(str(value_error)) from value_error
    try:
        vector = np.array(
            [float(x) for x in re.split(r"[,\s]+", choice) if x], dtype=float
        )
    except ValueError as value_error:
        raise ConfigurationError(
            f"initial distribution {text!r} should be 'stationary', "
            "'state:<name>' or a probability vector"
        ) from value_error
    if vector.size == 0 or np.any(vector < 0.0):
        raise ConfigurationError(f"invalid initial distribution {text!r}")
    if abs(vector.sum() - 1.0) > 1e-9:
        raise ConfigurationError(
            f"initial distribution {text!r} sums to {vector.sum()}"
        )
    return vector


@dataclass(frozen=True)
class RunConfig:
    """Parameters of a pipeline run.

    Defaults price a 63-day contract at a daily rate of 0.0004 with strikes
    of 90 for the trace swap and 30 for the max-eigen swap.

    Attributes:
        input_path: CSV file of daily closing prices.
        assets: Asset columns to use, all of them by default.
        date_column: Name of the date column of the input file.
        maturity_days: Maturity :math:`T` in trading days.
        daily_rate: Interest rate :math:`r` per trading day.
        trace_strike: Strike of the trace swap, in variance points.
        eigen_strike: Strike of the max-eigen swap, in variance points.
        notional: Notional of both swaps.
        k: Target mean daily return of the max-eigen portfolio.
        mode: Expectation rule.
        initial: Initial-distribution choice, see :func:`parse_initial`.
        seed: Base seed of the Monte Carlo oracle.
        output_path: Report file, or ``None`` to skip writing.
        fixture_path: Expected-covariance matrix file bypassing estimation.
        means: Mean daily returns, required with a fixture.
        return_kind: Simple or log returns.
        centering: Mean that per-regime deviations are taken from.
        sense: Whether the eigen portfolio maximizes or minimizes variance.
        n_paths: Number of Monte Carlo paths, ``None`` to skip simulation.
        simulation_mode: What is simulated along each path.
        block_size: Number of paths simulated per unit of work.
        n_workers: Number of simulation threads.
        dt: Period length of one transition step, in trading days.
    """

    input_path: Optional[Path] = None
    assets: Optional[Tuple[str, ...]] = None
    date_column: str = "date"
    maturity_days: int = 63
    daily_rate: float = 0.0004
    trace_strike: float = 90.0
    eigen_strike: float = 30.0
    notional: float = 1e6
    k: float = 0.0007
    mode: ExpectationMode = ExpectationMode.ONE_STEP
    initial: str = "stationary"
    seed: int = field(default_factory=default_seed)
    output_path: Optional[Path] = None
    fixture_path: Optional[Path] = None
    means: Optional[Tuple[float, ...]] = None
    return_kind: ReturnKind = ReturnKind.SIMPLE
    centering: Centering = Centering.STATE
    sense: Sense = Sense.MAXIMIZE
    n_paths: Optional[int] = None
    simulation_mode: SimulationMode = SimulationMode.CHAIN_ONLY
    block_size: int = 4096
    n_workers: int = 1
    dt: float = 1.0

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> "RunConfig":
        """Create a configuration from plain values.

        Enumerations are given by value, paths and asset names as strings.

        Args:
            values: Field values, missing ones take their default.

        Returns:
            Configuration.

        Raises:
            ConfigurationError: if a key or value is invalid.
        """
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ConfigurationError(f"unknown settings {sorted(unknown)}")
        converted: Dict[str, Any] = {}
        for key, value in values.items():
            if value is None:
                converted[key] = None
            elif key in _ENUM_FIELDS:
                try:
                    converted[key] = _ENUM_FIELDS[key](value)
                except ValueError as value_error:
                    raise ConfigurationError(
                        f"invalid {key} {value!r}"
                    ) from value_error
            elif key in _PATH_FIELDS:
                converted[key] = Path(value)
            elif key == "assets":
                converted[key] = tuple(str(name) for name in value)
            elif key == "means":
                converted[key] = tuple(float(x) for x in value)
            else:
                converted[key] = value
        return cls(**converted)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "RunConfig":
        """Load a configuration from a JSON file.

        Args:
            path: JSON object of settings.

        Returns:
            Configuration.

        Raises:
            ConfigurationError: if the file cannot be read or parsed.
        """
        try:
            values = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as error:
            raise ConfigurationError(
                f"cannot load configuration {path}: {error}"
            ) from error
        if not isinstance(values, dict):
            raise ConfigurationError(f"{path} should hold a JSON object")
        return cls.from_dict(values)

    def override(self, **changes: Any) -> "RunConfig":
        """Copy of the configuration with non-``None`` changes applied."""
        return replace(
            self, **{k: v for k, v in changes.items() if v is not None}
        )

    @property
    def initial_state(self) -> InitialState:
        """Parsed initial-distribution choice."""
        return parse_initial(self.initial)

    def validate(self, require_means: bool = True) -> "RunConfig":
        """Check the configuration.

        Args:
            require_means: Whether a fixture run needs mean returns, as is
                the case when pricing the max-eigen swap.

        Returns:
            The configuration itself.

        Raises:
            ConfigurationError: if a setting is invalid or inputs are
                missing.
        """
        if not isinstance(self.mode, ExpectationMode):
            raise ConfigurationError(f"unknown expectation mode {self.mode}")
        parse_initial(self.initial)
        if self.maturity_days < 1:
            raise ConfigurationError("maturity should be at least one day")
        if not np.isfinite(self.daily_rate):
            raise ConfigurationError("daily rate should be finite")
        if self.notional <= 0.0:
            raise ConfigurationError("notional should be positive")
        if self.trace_strike < 0.0 or self.eigen_strike < 0.0:
            raise ConfigurationError("strikes should be nonnegative")
        if self.n_paths is not None and self.n_paths < 2:
            raise ConfigurationError("simulation needs at least two paths")
        if self.block_size < 1 or self.n_workers < 1:
            raise ConfigurationError("block size and workers should be >= 1")
        if self.seed < 0:
            raise ConfigurationError("seed should be nonnegative")
        if self.dt <= 0.0:
            raise ConfigurationError("dt should be positive")
        if self.input_path is None and self.fixture_path is None:
            raise ConfigurationError("need an input file or a fixture")
        if (
            require_means
            and self.fixture_path is not None
            and self.means is None
        ):
            raise ConfigurationError("a fixture run needs mean returns")
        return self

    def to_dict(self) -> Dict[str, Any]:
        """Plain values of the configuration, as accepted by from_dict."""
        values = asdict(self)
        for key, value in values.items():
            if key in _ENUM_FIELDS and value is not None:
                values[key] = value.value
            elif key in _PATH_FIELDS and value is not None:
                values[key] = str(value)
            elif isinstance(value, tuple):
                values[key] = list(value)
        return values
