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

"""Generalized-variance swaps."""

from .contract import REFERENCE_NOTIONAL, Measure, SwapContract
from .eigen_swap import EigenSwap, price_eigen
from .exceptions import MeasureMismatch
from .swap import PricingResult, Swap
from .trace_swap import TraceSwap, price_trace, trace_of

__all__ = [
    "EigenSwap",
    "Measure",
    "MeasureMismatch",
    "PricingResult",
    "REFERENCE_NOTIONAL",
    "Swap",
    "SwapContract",
    "TraceSwap",
    "price_eigen",
    "price_trace",
    "trace_of",
]
