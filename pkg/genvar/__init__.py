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

"""Generalized-variance swaps under Markov-modulated volatility."""

from .config import RunConfig
from .covariance import (
    ExpectedCovariance,
    RegimeCovariance,
    assemble_expected_covariance,
    estimate_regime_covariance,
)
from .expectation import ExpectationMode, time_averaged_discounted_expectation
from .frontier import Sense, constrained_max_variance
from .generator import GeneratorModel, derive_generator, matrix_exponential
from .pipeline import run_pipeline
from .regimes import State, TransitionModel, estimate_transition
from .report import emit_report
from .simulation import SimulationConfig, mc_expected_covariance, mc_swap_price
from .swaps import Measure, SwapContract, price_eigen, price_trace

__version__ = "0.1.0"

__all__ = [
    "ExpectationMode",
    "ExpectedCovariance",
    "GeneratorModel",
    "Measure",
    "RegimeCovariance",
    "RunConfig",
    "Sense",
    "SimulationConfig",
    "State",
    "SwapContract",
    "TransitionModel",
    "assemble_expected_covariance",
    "constrained_max_variance",
    "derive_generator",
    "emit_report",
    "estimate_regime_covariance",
    "estimate_transition",
    "matrix_exponential",
    "mc_expected_covariance",
    "mc_swap_price",
    "price_eigen",
    "price_trace",
    "run_pipeline",
    "time_averaged_discounted_expectation",
]
