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

"""Exceptions raised while solving the constrained max-variance problem."""

from ..exceptions import GenvarError


class RankError(GenvarError):
    """Exception raised when the constraint matrix is rank deficient."""


class InfeasibleTarget(GenvarError):
    """Exception raised when no unit-norm portfolio reaches the target.

    Attributes:
        s2: Squared radius :math:`1 - q^T q` of the feasible circle, negative
            when the target is unreachable.
    """

    s2: float

    def __init__(self, s2: float) -> None:
        """Create exception.

        Args:
            s2: Squared radius of the feasible set.
        """
        self.s2 = s2
        self.message = (
            f"target return unreachable on the unit sphere (s^2 = {s2:.3e})"
        )
        super().__init__(self.message)


class ConditioningError(GenvarError):
    """Exception raised when the triangular factor is numerically singular."""


class SolverError(GenvarError):
    """Exception raised when the secular equation yields no solution."""
