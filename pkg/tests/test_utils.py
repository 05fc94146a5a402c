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

"""Test fixture for other library features."""

import unittest

import numpy as np

from genvar.exceptions import DimensionError, DomainError
from genvar.utils import VectorSpace, as_square_matrix, readonly, symmetrized


class TestUtils(unittest.TestCase):
    """Test utility classes and functions."""

    def test_readonly(self):
        source = np.arange(3)
        array = readonly(source)
        self.assertEqual(array.dtype, np.float64)
        with self.assertRaises(ValueError):
            array[0] = 1.0
        source[0] = 5
        self.assertEqual(array[0], 0.0)

    def test_as_square_matrix(self):
        self.assertEqual(as_square_matrix([[1, 2], [3, 4]]).dtype, float)
        with self.assertRaises(DimensionError):
            as_square_matrix(np.ones(3))
        with self.assertRaises(DomainError):
            as_square_matrix([[1.0, np.inf], [0.0, 1.0]])

    def test_symmetrized(self):
        """Symmetrized matrices are bit-identically symmetric."""
        matrix = np.array([[1.0, 0.1 + 1e-15], [0.1, 2.0]])
        result = symmetrized(matrix, 1e-12, "matrix")
        self.assertTrue(np.array_equal(result, result.T))
        self.assertEqual(result[1, 0], matrix[0, 1])
        with self.assertRaises(DomainError):
            symmetrized(np.array([[1.0, 0.2], [0.1, 1.0]]), 1e-12, "matrix")

    def test_vector_space(self):
        """Check dimensions of an asset space."""
        space = VectorSpace(4)
        self.assertEqual(space.dim, 4)
        self.assertEqual(space.eye.shape, (4, 4))
        self.assertTrue(np.all(space.ones == 1.0))
        self.assertTrue(np.all(space.zeros == 0.0))
