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

"""Test the end-to-end pricing pipeline."""

import tempfile
import unittest
from pathlib import Path

import numpy as np

from genvar.config import RunConfig
from genvar.expectation import ExpectationMode
from genvar.pipeline import load_matrix_fixture, run_pipeline
from genvar.regimes import ParseError
from genvar.report import expected_covariance_from_report, load_report
from genvar.swaps import SwapContract, price_trace

from . import published
from .synthetic import ASSETS, write_matrix_file, write_price_file

TIMESTAMP = "2024-01-02T03:04:05+00:00"


class TestPipeline(unittest.TestCase):
    """Test fixture for pipeline runs."""

    def setUp(self):
        """Published matrix as a fixture file."""
        self.tempdir = tempfile.TemporaryDirectory()
        self.directory = Path(self.tempdir.name)
        self.fixture = write_matrix_file(
            self.directory / "omega.txt", published.OMEGA
        )
        self.config = RunConfig(
            fixture_path=self.fixture,
            means=tuple(published.MEANS),
            seed=0,
        )

    def tearDown(self):
        self.tempdir.cleanup()

    def test_fixture_prices(self):
        """Published example priced from its expected covariance."""
        result = run_pipeline(self.config, TIMESTAMP)
        self.assertEqual(result.exit_code, 0)
        report = result.report
        self.assertAlmostEqual(
            report["trace_price"], published.TRACE_PRICE, delta=1e-3
        )
        self.assertAlmostEqual(
            report["eigen_price"], published.EIGEN_PRICE, delta=0.02
        )
        self.assertTrue(
            np.allclose(report["weights"], published.WEIGHTS, atol=2e-3)
        )
        self.assertAlmostEqual(
            report["discount_factor"], published.DISCOUNT, places=6
        )
        self.assertEqual(report["mode"], "fixture")
        self.assertNotIn("transition_matrix", report)
        self.assertNotIn("error", report)

    def test_zero_strikes(self):
        """Without strikes, prices are the gross legs."""
        config = self.config.override(trace_strike=0.0, eigen_strike=0.0)
        report = run_pipeline(config).report
        diagnostics = report["diagnostics"]
        self.assertEqual(
            report["trace_price"], diagnostics["trace"]["gross_leg"]
        )
        self.assertEqual(
            report["eigen_price"], diagnostics["eigen"]["gross_leg"]
        )
        self.assertAlmostEqual(report["objective"], report["eigen_price"])

    def test_reproducible_report(self):
        """Two runs with the same settings write identical reports."""
        paths = [self.directory / name for name in ("a.json", "b.json")]
        for path in paths:
            config = self.config.override(output_path=path)
            self.assertEqual(run_pipeline(config, TIMESTAMP).exit_code, 0)
        self.assertEqual(paths[0].read_bytes(), paths[1].read_bytes())

    def test_reprice_from_report(self):
        """The written expected covariance reproduces the trace price."""
        path = self.directory / "report.json"
        run_pipeline(self.config.override(output_path=path), TIMESTAMP)
        report = load_report(path)
        expected = expected_covariance_from_report(report)
        contract = SwapContract(
            report["contract"]["maturity_days"],
            report["contract"]["daily_rate"],
            report["contract"]["trace_strike"],
        )
        self.assertAlmostEqual(
            price_trace(expected, contract).price,
            report["trace_price"],
            delta=1e-12,
        )

    def test_missing_fixture(self):
        """A failing stage is reported with its module."""
        path = self.directory / "report.json"
        config = self.config.override(
            fixture_path=self.directory / "missing.txt", output_path=path
        )
        result = run_pipeline(config, TIMESTAMP)
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(result.report["error"]["module"], "regime_covariance")
        written = load_report(path)
        self.assertEqual(written["error"]["module"], "regime_covariance")
        self.assertIsNone(written["trace_price"])

    def test_invalid_config(self):
        """Invalid settings fail before pricing, with an error report."""
        path = self.directory / "report.json"
        config = self.config.override(maturity_days=0, output_path=path)
        result = run_pipeline(config, TIMESTAMP)
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(result.report["error"]["module"], "cli")
        written = load_report(path)
        self.assertEqual(written["error"]["module"], "cli")
        self.assertIsNone(written["trace_price"])

    def test_missing_price_file(self):
        """A price file that does not exist fails regime inference."""
        path = self.directory / "report.json"
        config = RunConfig(
            input_path=self.directory / "absent.csv",
            output_path=path,
            seed=0,
        )
        result = run_pipeline(config, TIMESTAMP)
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(result.report["error"]["module"], "regime_inference")
        self.assertIn("absent.csv", result.report["error"]["message"])
        written = load_report(path)
        self.assertEqual(written["error"]["module"], "regime_inference")

    def test_fixture_not_square(self):
        path = write_matrix_file(self.directory / "bad.txt", np.ones((2, 3)))
        with self.assertRaises(ParseError):
            load_matrix_fixture(path)

    def test_price_file(self):
        """Prices go through estimation, pricing and simulation."""
        prices = write_price_file(self.directory / "prices.csv")
        config = RunConfig(
            input_path=prices,
            means=(0.0005, 0.0009, 0.0007),
            mode=ExpectationMode.GENERATOR,
            n_paths=200,
            seed=1,
        )
        result = run_pipeline(config, TIMESTAMP)
        self.assertEqual(result.exit_code, 0, result.report.get("error"))
        report = result.report
        self.assertEqual(report["asset_names"], list(ASSETS))
        pi = np.array(report["transition_matrix"])
        self.assertTrue(np.allclose(pi.sum(axis=1), 1.0))
        self.assertIn("generator", report)
        self.assertEqual(report["mode"], ExpectationMode.GENERATOR)
        monte_carlo = report["monte_carlo"]
        self.assertEqual(monte_carlo["n_paths"], 200)
        self.assertGreater(monte_carlo["trace_std_err"], 0.0)
        trace_gross = report["diagnostics"]["trace"]["gross_leg"]
        self.assertGreater(trace_gross, 0.0)
