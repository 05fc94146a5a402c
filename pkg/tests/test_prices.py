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

"""Test price file ingestion."""

import tempfile
import unittest
from pathlib import Path

import numpy as np

from genvar.regimes import (
    DuplicateDate,
    IngestionConfig,
    NonPositivePrice,
    ParseError,
    load_price_csv,
)


class TestPrices(unittest.TestCase):
    """Test fixture for price panels."""

    def setUp(self):
        """Create a temporary directory for price files."""
        self.tmpdir = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmpdir.name)

    def tearDown(self):
        """Remove temporary files."""
        self.tmpdir.cleanup()

    def write(self, text: str) -> Path:
        """Write a price file and return its path."""
        path = self.dir / "prices.csv"
        path.write_text(text, encoding="utf-8")
        return path

    def test_load(self):
        """Rows are parsed in order with asset names from the header."""
        path = self.write(
            "date,A,B,C\n"
            "2020-01-02,10,20,30\n"
            "2020-01-03,11,19,30.5\n"
            "2020-01-06,12,21,31\n"
        )
        panel = load_price_csv(path)
        self.assertEqual(panel.asset_names, ("A", "B", "C"))
        self.assertEqual(panel.n_periods, 3)
        self.assertEqual(panel.n_assets, 3)
        self.assertAlmostEqual(panel.prices[1, 2], 30.5)
        self.assertFalse(panel.prices.flags.writeable)

    def test_sorted_by_date(self):
        """Rows out of date order are sorted."""
        path = self.write(
            "date,A,B\n"
            "2020-01-03,11,19\n"
            "2020-01-02,10,20\n"
            "2020-01-06,12,21\n"
        )
        panel = load_price_csv(path)
        self.assertTrue(np.all(np.diff(panel.dates).astype(int) > 0))
        self.assertAlmostEqual(panel.prices[0, 0], 10.0)

    def test_asset_selection(self):
        """Selected assets are kept in the requested order."""
        path = self.write(
            "date,A,B,C\n"
            "2020-01-02,10,20,30\n"
            "2020-01-03,11,19,31\n"
            "2020-01-06,12,21,32\n"
        )
        panel = load_price_csv(path, IngestionConfig(assets=("C", "A")))
        self.assertEqual(panel.asset_names, ("C", "A"))
        self.assertAlmostEqual(panel.prices[0, 0], 30.0)

    def test_missing_asset(self):
        """Selecting an asset absent from the header is a parse error."""
        path = self.write(
            "date,A,B\n"
            "2020-01-02,10,20\n"
            "2020-01-03,11,19\n"
            "2020-01-06,12,21\n"
        )
        with self.assertRaises(ParseError) as context:
            load_price_csv(path, IngestionConfig(assets=("A", "Z")))
        self.assertEqual(context.exception.line, 1)

    def test_invalid_date_line(self):
        """Parse errors report the one-based line, header included."""
        path = self.write(
            "date,A,B\n"
            "2020-01-02,10,20\n"
            "yesterday,11,19\n"
            "2020-01-06,12,21\n"
        )
        with self.assertRaises(ParseError) as context:
            load_price_csv(path)
        self.assertEqual(context.exception.line, 3)

    def test_invalid_price(self):
        """A non-numeric price is a parse error on its line."""
        path = self.write(
            "date,A,B\n"
            "2020-01-02,10,20\n"
            "2020-01-03,11,19\n"
            "2020-01-06,twelve,21\n"
        )
        with self.assertRaises(ParseError) as context:
            load_price_csv(path)
        self.assertEqual(context.exception.line, 4)

    def test_missing_cell(self):
        """An empty cell is a parse error."""
        path = self.write(
            "date,A,B\n"
            "2020-01-02,10,20\n"
            "2020-01-03,,19\n"
            "2020-01-06,12,21\n"
        )
        with self.assertRaises(ParseError):
            load_price_csv(path)

    def test_non_positive_price(self):
        """Zero prices are rejected with their row and column."""
        path = self.write(
            "date,A,B\n"
            "2020-01-02,10,20\n"
            "2020-01-03,11,0\n"
            "2020-01-06,12,21\n"
        )
        with self.assertRaises(NonPositivePrice) as context:
            load_price_csv(path)
        self.assertEqual(context.exception.row, 2)
        self.assertEqual(context.exception.column, "B")

    def test_duplicate_date(self):
        """Repeated dates are rejected."""
        path = self.write(
            "date,A,B\n"
            "2020-01-02,10,20\n"
            "2020-01-02,11,19\n"
            "2020-01-06,12,21\n"
        )
        with self.assertRaises(DuplicateDate) as context:
            load_price_csv(path)
        self.assertEqual(context.exception.row, 2)

    def test_too_few_assets(self):
        """A single asset column is not enough."""
        path = self.write(
            "date,A\n2020-01-02,10\n2020-01-03,11\n2020-01-06,12\n"
        )
        with self.assertRaises(ParseError):
            load_price_csv(path)

    def test_too_few_rows(self):
        """Files need at least three data rows."""
        path = self.write("date,A,B\n2020-01-02,10,20\n2020-01-03,11,19\n")
        with self.assertRaises(ParseError):
            load_price_csv(path)

    def test_missing_file(self):
        """A file that does not exist is a parse error on its path."""
        path = self.dir / "absent.csv"
        with self.assertRaises(ParseError) as context:
            load_price_csv(path)
        self.assertEqual(context.exception.path, str(path))
        self.assertIsNone(context.exception.line)
