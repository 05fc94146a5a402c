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

"""Regime inference from daily prices."""

from .exceptions import (
    DuplicateDate,
    EstimationError,
    NonPositivePrice,
    ParseError,
    ReducibleChain,
)
from .labeling import RegimeLabeling, classify_states
from .prices import IngestionConfig, PricePanel, load_price_csv
from .returns import ReturnKind, ReturnSeries, compute_returns
from .states import ALL_STATES, State
from .transition import (
    TransitionModel,
    estimate_transition,
    stationary_distribution,
)

__all__ = [
    "ALL_STATES",
    "DuplicateDate",
    "EstimationError",
    "IngestionConfig",
    "NonPositivePrice",
    "ParseError",
    "PricePanel",
    "ReducibleChain",
    "RegimeLabeling",
    "ReturnKind",
    "ReturnSeries",
    "State",
    "TransitionModel",
    "classify_states",
    "compute_returns",
    "estimate_transition",
    "load_price_csv",
    "stationary_distribution",
]
