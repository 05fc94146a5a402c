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

"""Exceptions specific to genvar."""


class GenvarError(Exception):
    """Base class for genvar exceptions."""


class DomainError(GenvarError):
    """Exception raised when a value lies outside its mathematical domain."""


class DimensionError(GenvarError):
    """Exception raised when array shapes do not match."""


class ConfigurationError(GenvarError):
    """Exception raised when a computation is requested with missing inputs."""


class ConsistencyError(GenvarError):
    """Exception raised when two inputs disagree on a shared parameter."""


class SingularTransition(DomainError):
    """Exception raised when a transition matrix is numerically singular."""


class NotPositiveSemidefinite(DomainError):
    """Exception raised when a covariance matrix has a negative eigenvalue.

    Attributes:
        label: Name of the offending matrix, e.g. its regime state.
        eigenvalue: Smallest eigenvalue found.
    """

    label: str
    eigenvalue: float

    def __init__(self, label: str, eigenvalue: float) -> None:
        """Create exception.

        Args:
            label: Name of the offending matrix, e.g. its regime state.
            eigenvalue: Smallest eigenvalue found.
        """
        self.label = label
        self.eigenvalue = eigenvalue
        self.message = (
            f"Matrix {label} is not positive semidefinite "
            f"(smallest eigenvalue {eigenvalue:.3e})"
        )
        super().__init__(self.message)


class ReportError(GenvarError):
    """Exception raised when a report cannot be written or read back."""


class StageError(GenvarError):
    """Exception raised when a stage of the pricing pipeline fails.

    Attributes:
        module: Name of the module the failing stage belongs to.
        cause: Original exception.
    """

    module: str
    cause: GenvarError

    def __init__(self, module: str, cause: GenvarError) -> None:
        """Create exception.

        Args:
            module: Name of the module the failing stage belongs to.
            cause: Original exception.
        """
        self.module = module
        self.cause = cause
        self.message = str(cause)
        super().__init__(f"{module}: {self.message}")
