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

"""Utility classes and functions."""

import numpy as np

from .exceptions import DimensionError, DomainError


def readonly(array) -> np.ndarray:
    """Return a float copy of an array that cannot be written to.

    Args:
        array: Array-like input.

    Returns:
        Read-only copy of the input.
    """
    copy = np.array(array, dtype=float)
    copy.setflags(write=False)
    return copy


def as_square_matrix(matrix, name: str = "matrix") -> np.ndarray:
    """Check that an input is a finite square matrix.

    Args:
        matrix: Array-like input.
        name: Name used in error messages.

    Returns:
        Input as a float array.

    Raises:
        DimensionError: if the input is not a square matrix.
        DomainError: if the input has non-finite entries.
    """
    array = np.asarray(matrix, dtype=float)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionError(f"{name} should be square, got {array.shape}")
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} has non-finite entries")
    return array


def symmetrized(matrix: np.ndarray, tol: float, name: str) -> np.ndarray:
    """Copy the upper triangle of a nearly symmetric matrix to its lower one.

    The result is bit-identically symmetric: entries :math:`(i, j)` and
    :math:`(j, i)` come from the same floating-point number.

    Args:
        matrix: Square matrix.
        tol: Largest asymmetry :math:`|M_{ij} - M_{ji}|` accepted.
        name: Name used in error messages.

    Returns:
        Symmetric matrix.

    Raises:
        DomainError: if the input is further than ``tol`` from symmetric.
    """
    asymmetry = np.max(np.abs(matrix - matrix.T), initial=0.0)
    if asymmetry > tol:
        raise DomainError(f"{name} is not symmetric (asymmetry {asymmetry})")
    upper = np.triu(matrix)
    return upper + np.triu(matrix, 1).T


class VectorSpace:
    """Wrapper to refer to a vector space and its characteristic matrices.

    Used for the state space of a Markov chain, where :attr:`ones` is the
    normalization row, and for asset spaces, where it is the full-investment
    vector.
    """

    __eye: np.ndarray
    __ones: np.ndarray
    __zeros: np.ndarray

    def __init__(self, dim: int):
        """Create new vector space description.

        Args:
            dim: Dimension.
        """
        self.__eye = readonly(np.eye(dim))
        self.__ones = readonly(np.ones(dim))
        self.__zeros = readonly(np.zeros(dim))

    @property
    def dim(self) -> int:
        """Dimension of the space."""
        return self.__ones.shape[0]

    @property
    def eye(self) -> np.ndarray:
        """Identity matrix from and to the vector space."""
        return self.__eye

    @property
    def ones(self) -> np.ndarray:
        """Vector full of ones, dimension of the space."""
        return self.__ones

    @property
    def zeros(self) -> np.ndarray:
        """Zero vector of the space."""
        return self.__zeros
