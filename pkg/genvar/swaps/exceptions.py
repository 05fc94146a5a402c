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

"""Exceptions raised when pricing swaps."""

from ..exceptions import ConsistencyError


class MeasureMismatch(ConsistencyError):
    """Exception raised when a contract is priced with the wrong swap.

    Attributes:
        expected: Measure the swap prices.
        actual: Measure written in the contract.
    """

    expected: str
    actual: str

    def __init__(self, expected: str, actual: str) -> None:
        """Create exception.

        Args:
            expected: Measure the swap prices.
            actual: Measure written in the contract.
        """
        self.expected = expected
        self.actual = actual
        self.message = (
            f"Contract on the {actual} measure cannot be priced "
            f"as a {expected} swap"
        )
        super().__init__(self.message)
