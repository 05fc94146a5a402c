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

"""Exceptions raised while ingesting prices and estimating regimes."""

from datetime import date
from typing import Optional

from ..exceptions import DomainError, GenvarError


class ParseError(GenvarError):
    """Exception raised when a price file cannot be parsed.

    Attributes:
        path: Path to the price file.
        line: One-based line number in the file, header included, if known.
        reason: What went wrong on that line.
    """

    path: str
    line: Optional[int]
    reason: str

    def __init__(self, path: str, line: Optional[int], reason: str) -> None:
        """Create exception.

        Args:
            path: Path to the price file.
            line: One-based line number in the file, header included.
            reason: What went wrong on that line.
        """
        self.path = path
        self.line = line
        self.reason = reason
        where = f"{path}:{line}" if line is not None else path
        self.message = f"{where}: {reason}"
        super().__init__(self.message)


class NonPositivePrice(DomainError):
    """Exception raised when a closing price is zero or negative.

    Attributes:
        row: One-based data row, header excluded.
        column: Asset column name.
        value: Offending price.
    """

    row: int
    column: str
    value: float

    def __init__(self, row: int, column: str, value: float) -> None:
        """Create exception.

        Args:
            row: One-based data row, header excluded.
            column: Asset column name.
            value: Offending price.
        """
        self.row = row
        self.column = column
        self.value = value
        self.message = (
            f"Price {value} of {column} in row {row} is not positive"
        )
        super().__init__(self.message)


class DuplicateDate(DomainError):
    """Exception raised when two rows share the same date.

    Attributes:
        date: Repeated date.
        row: One-based data row of the second occurrence, header excluded.
    """

    date: date
    row: int

    def __init__(self, date: date, row: int) -> None:
        """Create exception.

        Args:
            date: Repeated date.
            row: One-based data row of the second occurrence.
        """
        self.date = date
        self.row = row
        self.message = f"Date {date} appears more than once (row {row})"
        super().__init__(self.message)


class EstimationError(GenvarError):
    """Exception raised when a regime has too little data to estimate from.

    Attributes:
        state: Name of the regime state.
        reason: What is missing.
    """

    state: str
    reason: str

    def __init__(self, state: str, reason: str) -> None:
        """Create exception.

        Args:
            state: Name of the regime state.
            reason: What is missing.
        """
        self.state = state
        self.reason = reason
        self.message = f"Cannot estimate state {state}: {reason}"
        super().__init__(self.message)


class ReducibleChain(GenvarError):
    """Exception raised when a chain has no unique stationary distribution."""
