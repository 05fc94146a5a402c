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

"""Portfolio of extremal variance under norm and return constraints."""

from .constraints import ConstraintSystem, build_constraints
from .exceptions import (
    ConditioningError,
    InfeasibleTarget,
    RankError,
    SolverError,
)
from .reduction import QRReduction, ReducedProblem, qr_reduce, reduce_problem
from .secular import (
    Branch,
    SecularSolution,
    Sense,
    secular_function,
    solve_secular,
)
from .solve import (
    EfficientWeights,
    constrained_max_variance,
    weights_from_reduction,
)

__all__ = [
    "Branch",
    "ConditioningError",
    "ConstraintSystem",
    "EfficientWeights",
    "InfeasibleTarget",
    "QRReduction",
    "RankError",
    "ReducedProblem",
    "SecularSolution",
    "Sense",
    "SolverError",
    "build_constraints",
    "constrained_max_variance",
    "qr_reduce",
    "reduce_problem",
    "secular_function",
    "solve_secular",
    "weights_from_reduction",
]
