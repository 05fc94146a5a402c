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

"""Regime states of the market."""

import enum
from typing import Tuple, Union


class State(enum.IntEnum):
    """Regime state.

    Per-asset labels only take the values ``DOWN`` and ``UP``. Combined labels
    take all three values. Matrices indexed by state always follow the order
    of the integer values.
    """

    DOWN = 0
    MIDDLE = 1
    UP = 2

    @classmethod
    def parse(cls, name: Union[str, int, "State"]) -> "State":
        """Get a state from its name, case insensitive, or its index.

        Args:
            name: State name such as ``"Down"``, or integer value.

        Returns:
            Corresponding state.

        Raises:
            ValueError: if the name is not a state.
        """
        if isinstance(name, State):
            return name
        if isinstance(name, int):
            return cls(name)
        try:
            return cls[name.strip().upper()]
        except KeyError as key_error:
            raise ValueError(f"Unknown regime state {name!r}") from key_error

    def __str__(self) -> str:
        """Capitalized state name."""
        return self.name.capitalize()


ALL_STATES: Tuple[State, ...] = (State.DOWN, State.MIDDLE, State.UP)
