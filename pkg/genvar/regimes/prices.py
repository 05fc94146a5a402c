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

"""Daily closing prices of a basket of assets.

Price files are CSV documents with a header ``date,<asset1>,<asset2>,...``,
ISO-8601 dates and decimal prices. They are read with pandas, then checked
cell by cell so that errors point to a line of the file.
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..exceptions import DimensionError, DomainError
from ..utils import readonly
from .exceptions import DuplicateDate, NonPositivePrice, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IngestionConfig:
    """Options to read a price file.

    Attributes:
        date_column: Name of the date column.
        assets: Asset columns to keep, in this order. Defaults to all columns
            but the date one, in file order.
        min_rows: Minimum number of data rows.
    """

    date_column: str = "date"
    assets: Optional[Tuple[str, ...]] = None
    min_rows: int = 3


class PricePanel:
    """Validated panel of positive closing prices.

    Attributes:
        dates: Strictly increasing calendar dates, as ``datetime64[D]``.
        prices: Matrix of shape ``(T, n)`` of positive closing prices.
        asset_names: Labels of the ``n`` asset columns.
    """

    dates: np.ndarray
    prices: np.ndarray
    asset_names: Tuple[str, ...]

    def __init__(
        self,
        dates: Sequence,
        prices: np.ndarray,
        asset_names: Sequence[str],
    ) -> None:
        """Create a price panel.

        Args:
            dates: Calendar dates, one per row of prices.
            prices: Matrix of shape ``(T, n)`` of closing prices.
            asset_names: One label per column of prices.

        Raises:
            DimensionError: if shapes are inconsistent.
            DomainError: if dates are not strictly increasing or a price is
                missing or not positive.
        """
        day_array = np.asarray(dates, dtype="datetime64[D]")
        price_array = np.asarray(prices, dtype=float)
        if price_array.ndim != 2:
            raise DimensionError("prices should be a T x n matrix")
        if day_array.shape != (price_array.shape[0],):
            raise DimensionError("there should be one date per price row")
        if len(asset_names) != price_array.shape[1]:
            raise DimensionError("there should be one name per asset column")
        if np.any(np.diff(day_array) <= np.timedelta64(0, "D")):
            raise DomainError("dates should be strictly increasing")
        if not np.all(np.isfinite(price_array)):
            raise DomainError("price panel has missing cells")
        if np.any(price_array <= 0.0):
            row, col = np.argwhere(price_array <= 0.0)[0]
            raise NonPositivePrice(
                int(row) + 1, asset_names[col], float(price_array[row, col])
            )
        day_array.setflags(write=False)
        self.dates = day_array
        self.prices = readonly(price_array)
        self.asset_names = tuple(asset_names)

    @property
    def n_periods(self) -> int:
        """Number of price rows :math:`T`."""
        return self.prices.shape[0]

    @property
    def n_assets(self) -> int:
        """Number of assets :math:`n`."""
        return self.prices.shape[1]

    def to_frame(self) -> pd.DataFrame:
        """Panel as a data frame indexed by date."""
        frame = pd.DataFrame(
            np.array(self.prices), columns=list(self.asset_names)
        )
        frame.index = pd.DatetimeIndex(self.dates, name="date")
        return frame

    def __repr__(self) -> str:
        """Human-readable representation of the panel."""
        return (
            f"PricePanel(T={self.n_periods}, "
            f"assets={list(self.asset_names)})"
        )


def __read_frame(path: Path) -> pd.DataFrame:
    try:
        return pd.read_csv(
            path,
            sep=",",
            dtype=str,
            encoding="utf-8",
            keep_default_na=False,
            skipinitialspace=True,
        )
    except pd.errors.EmptyDataError as empty_error:
        raise ParseError(str(path), 1, "file is empty") from empty_error
    except pd.errors.ParserError as parser_error:
        match = re.search(r"line (\d+)", str(parser_error))
        line = int(match.group(1)) if match else None
        raise ParseError(
            str(path), line, "unexpected number of fields"
        ) from parser_error
    except UnicodeDecodeError as decode_error:
        raise ParseError(str(path), None, "not UTF-8") from decode_error
    except OSError as os_error:
        reason = os_error.strerror or str(os_error)
        raise ParseError(
            str(path), None, f"cannot read file ({reason})"
        ) from os_error


def __select_assets(
    path: Path, frame: pd.DataFrame, config: IngestionConfig
) -> Tuple[str, ...]:
    columns = [str(column) for column in frame.columns]
    if config.date_column not in columns:
        raise ParseError(
            str(path), 1, f"no date column {config.date_column!r} in header"
        )
    if config.assets is None:
        assets = tuple(c for c in columns if c != config.date_column)
    else:
        assets = tuple(config.assets)
        missing = [asset for asset in assets if asset not in columns]
        if missing:
            raise ParseError(
                str(path), 1, f"asset columns {missing} not in header"
            )
    if len(assets) < 2:
        raise ParseError(str(path), 1, "header should name at least 2 assets")
    return assets


def __is_missing(cell) -> bool:
    return not isinstance(cell, str) or cell.strip() == ""


def load_price_csv(
    path: Union[str, Path], config: Optional[IngestionConfig] = None
) -> PricePanel:
    """Load and validate a price file.

    Args:
        path: Path to the CSV file.
        config: Ingestion options. Defaults to :class:`IngestionConfig`.

    Returns:
        Price panel in file order after a stable sort by date.

    Raises:
        ParseError: if a row is malformed, with its line number.
        NonPositivePrice: if a price is zero or negative.
        DuplicateDate: if two rows share the same date.
    """
    config = config if config is not None else IngestionConfig()
    path = Path(path)
    frame = __read_frame(path)
    assets = __select_assets(path, frame, config)
    if len(frame) < config.min_rows:
        raise ParseError(
            str(path),
            None,
            f"need at least {config.min_rows} data rows, got {len(frame)}",
        )

    raw_dates = frame[config.date_column]
    dates = pd.to_datetime(raw_dates, format="%Y-%m-%d", errors="coerce")
    prices = np.empty((len(frame), len(assets)))
    for col, asset in enumerate(assets):
        prices[:, col] = pd.to_numeric(frame[asset], errors="coerce")

    for row in range(len(frame)):
        line = row + 2  # one-based, after the header
        if pd.isna(dates.iloc[row]):
            raise ParseError(
                str(path), line, f"invalid date {raw_dates.iloc[row]!r}"
            )
        for col, asset in enumerate(assets):
            cell = frame[asset].iloc[row]
            if __is_missing(cell):
                raise ParseError(str(path), line, f"missing price for {asset}")
            if not np.isfinite(prices[row, col]):
                raise ParseError(
                    str(path), line, f"invalid price {cell!r} for {asset}"
                )
            if prices[row, col] <= 0.0:
                raise NonPositivePrice(row + 1, asset, prices[row, col])

    duplicated = dates.duplicated(keep="first").to_numpy()
    if duplicated.any():
        row = int(np.argmax(duplicated))
        raise DuplicateDate(dates.iloc[row].date(), row + 1)

    days = dates.to_numpy().astype("datetime64[D]")
    order = np.argsort(days, kind="stable")
    logger.debug(
        "Loaded %d rows of %s from %s", len(frame), list(assets), path
    )
    return PricePanel(days[order], prices[order], assets)
