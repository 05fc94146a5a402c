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

"""Machine-readable pricing reports.

A report is a JSON document whose leading keys always come in the same
order, so that two reports of the same run differ only by their timestamp.
"""

import enum
import json
import logging
import math
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np

from .covariance import ExpectedCovariance
from .exceptions import DomainError, ReportError

logger = logging.getLogger(__name__)

REPORT_FIELDS = (
    "transition_matrix",
    "transition_std_err",
    "stationary",
    "regime_covariance",
    "expected_covariance",
    "trace_price",
    "eigen_price",
    "weights",
    "objective",
    "mode",
    "discount_factor",
    "seed",
    "timestamp",
)


def to_plain(value: Any) -> Any:
    """Convert arrays, scalars and enumerations to JSON values.

    Args:
        value: Nested mappings, sequences, numpy objects or enumerations.

    Returns:
        Same structure made of dictionaries, lists, numbers, strings and
        ``None``.
    """
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Path):
        return str(value)
    return value


def __check_finite(value: Any, where: str) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            __check_finite(item, f"{where}.{key}")
    elif isinstance(value, list):
        for index, item in enumerate(value):
            __check_finite(item, f"{where}[{index}]")
    elif isinstance(value, float) and not math.isfinite(value):
        raise DomainError(f"report value {where} is not finite: {value}")


def render_report(
    report: Dict[str, Any], timestamp: Optional[str] = None
) -> str:
    """Serialize a report with its fields in canonical order.

    Args:
        report: Report values. Missing canonical fields are written as
            ``null``, other keys follow in insertion order.
        timestamp: ISO 8601 time of the report, defaults to now in UTC.

    Returns:
        JSON text ending with a newline.

    Raises:
        DomainError: if the report contains a non-finite number.
    """
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    plain = to_plain(report)
    plain["timestamp"] = timestamp
    ordered = {key: plain.get(key) for key in REPORT_FIELDS}
    ordered.update(
        (key, item) for key, item in plain.items() if key not in ordered
    )
    __check_finite(ordered, "report")
    return json.dumps(ordered, indent=2, allow_nan=False) + "\n"


def emit_report(
    report: Dict[str, Any],
    path: Union[str, Path],
    timestamp: Optional[str] = None,
) -> Path:
    """Write a report to a file.

    Args:
        report: Report values.
        path: Destination file.
        timestamp: ISO 8601 time of the report, defaults to now in UTC.

    Returns:
        Path of the written file.

    Raises:
        ReportError: if the file cannot be written.
    """
    text = render_report(report, timestamp)
    path = Path(path)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as os_error:
        raise ReportError(
            f"cannot write report to {path}: {os_error}"
        ) from os_error
    logger.info("Report written to %s", path)
    return path


def load_report(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a report back.

    Args:
        path: Report file.

    Returns:
        Report values.

    Raises:
        ReportError: if the file cannot be read or is not a report.
    """
    try:
        report = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as error:
        raise ReportError(f"cannot read report {path}: {error}") from error
    if not isinstance(report, dict) or any(
        key not in report for key in REPORT_FIELDS
    ):
        raise ReportError(f"{path} is not a pricing report")
    return report


def expected_covariance_from_report(
    report: Dict[str, Any]
) -> ExpectedCovariance:
    """Rebuild the expected covariance matrix of a report.

    Args:
        report: Report values, with its ``contract`` section.

    Returns:
        Expected covariance for the maturity and rate of the report.

    Raises:
        ReportError: if the report has no expected covariance.
    """
    matrix = report.get("expected_covariance")
    contract = report.get("contract")
    if matrix is None or contract is None:
        raise ReportError("report has no expected covariance")
    return ExpectedCovariance.from_fixture(
        np.array(matrix, dtype=float),
        int(contract["maturity_days"]),
        float(contract["daily_rate"]),
    )
