"""Daily time-series container and CSV ingestion.

Two file layouts are supported: the "wide" layout used by aggregated
repositories (metadata columns followed by one column per date, headers in
M/D/YY or M/D/YYYY form) and a minimal "long" layout (``date,value`` rows
with ISO dates). All downstream math assumes uniform 1 sample/day, so gaps
and duplicate dates are errors, never silently filled.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from .errors import DataFormatError

TextSource = Union[str, TextIO, Iterable[str]]


@dataclass(frozen=True, eq=False)
class DailySeries:
    """Ordered daily observations: ``values[i]`` occurred on ``start_date + i``."""

    start_date: dt.date
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size < 1:
            raise DataFormatError("series invariant violated: length >= 1 required")
        if not np.all(np.isfinite(values)):
            raise DataFormatError("series values must be finite")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.values.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, DailySeries):
            return NotImplemented
        return (
            self.start_date == other.start_date
            and self.label == other.label
            and np.array_equal(self.values, other.values)
        )

    @property
    def end_date(self) -> dt.date:
        return self.start_date + dt.timedelta(days=len(self) - 1)

    def dates(self) -> list[dt.date]:
        return [self.start_date + dt.timedelta(days=i) for i in range(len(self))]

    def with_values(self, values, start_offset_days: int = 0) -> "DailySeries":
        """New series with the same label, values replaced, dates shifted."""
        return DailySeries(
            self.start_date + dt.timedelta(days=start_offset_days),
            np.asarray(values, dtype=float),
            self.label,
        )

    def restrict(self, first: Optional[dt.date], last: Optional[dt.date]) -> "DailySeries":
        """Slice to [first, last]; both bounds must lie within the series span."""
        first = self.start_date if first is None else first
        last = self.end_date if last is None else last
        if first < self.start_date or last > self.end_date or first > last:
            raise DataFormatError(
                f"date range [{first}, {last}] outside series span "
                f"[{self.start_date}, {self.end_date}]"
            )
        i = (first - self.start_date).days
        j = (last - self.start_date).days + 1
        return DailySeries(first, self.values[i:j], self.label)


@dataclass(frozen=True)
class IngestOptions:
    """How to interpret an input file.

    ``mode='cumulative'`` differences the parsed values into daily counts.
    The optional date range is applied after that conversion and must lie
    within the file's date span.
    """

    mode: str = "daily"  # "daily" | "cumulative"
    selector: str = ""  # row label for the wide layout
    first: Optional[dt.date] = None
    last: Optional[dt.date] = None


def _rows(text: TextSource) -> list[list[str]]:
    if isinstance(text, str):
        handle: Iterable[str] = io.StringIO(text)
    else:
        handle = text
    rows = [row for row in csv.reader(handle) if any(cell.strip() for cell in row)]
    return rows


def _parse_iso_date(cell: str) -> dt.date:
    return dt.date.fromisoformat(cell.strip())


def _parse_mdy(cell: str) -> Optional[dt.date]:
    cell = cell.strip()
    for fmt in ("%m/%d/%y", "%m/%d/%Y"):
        try:
            return dt.datetime.strptime(cell, fmt).date()
        except ValueError:
            continue
    return None


def _check_consecutive(dates: list[dt.date], what: str) -> None:
    for i, d in enumerate(dates):
        expected = dates[0] + dt.timedelta(days=i)
        if d != expected:
            raise DataFormatError(
                f"{what} not consecutive: expected {expected}, found {d}"
            )


def parse_long_csv(text: TextSource, label: str = "") -> DailySeries:
    """Parse ``date,value`` rows (ISO dates, strictly ascending by one day).

    A leading ``date,value`` header row is optional.
    """
    rows = _rows(text)
    if rows and rows[0] and rows[0][0].strip().lower() == "date":
        rows = rows[1:]
    if not rows:
        raise DataFormatError("empty input: series invariant length >= 1 violated")
    dates: list[dt.date] = []
    values: list[float] = []
    for lineno, row in enumerate(rows, start=1):
        if len(row) != 2:
            raise DataFormatError(f"row {lineno}: expected 2 columns, found {len(row)}")
        try:
            day = _parse_iso_date(row[0])
        except ValueError as exc:
            raise DataFormatError(f"row {lineno}: bad date {row[0]!r}") from exc
        try:
            value = float(row[1])
        except ValueError as exc:
            raise DataFormatError(f"row {lineno}: non-numeric value {row[1]!r}") from exc
        if dates:
            step = (day - dates[-1]).days
            if step == 0:
                raise DataFormatError(f"row {lineno}: duplicate date {day}")
            if step != 1:
                raise DataFormatError(
                    f"row {lineno}: dates not consecutive ({dates[-1]} -> {day})"
                )
        dates.append(day)
        values.append(value)
    return DailySeries(dates[0], np.array(values), label)


def parse_wide_csv(text: TextSource, selector: str) -> DailySeries:
    """Parse one location out of a wide repository file.

    Date-like header cells must form a contiguous suffix of the header row;
    everything before them is metadata. All rows whose country/region field
    matches ``selector`` (case-insensitive) are summed, so a country split
    across province rows aggregates correctly.
    """
    if not selector:
        raise DataFormatError("wide layout requires a row selector")
    rows = _rows(text)
    if len(rows) < 2:
        raise DataFormatError("wide file needs a header row and at least one data row")
    header = rows[0]

    first_date_col = len(header)
    dates: list[dt.date] = []
    for idx in range(len(header) - 1, -1, -1):
        day = _parse_mdy(header[idx])
        if day is None:
            break
        first_date_col = idx
        dates.insert(0, day)
    if not dates:
        raise DataFormatError("unparseable date header: no M/D/YY columns found")
    _check_consecutive(dates, "header dates")

    meta_names = [name.strip().lower() for name in header[:first_date_col]]
    country_col = next(
        (i for i, name in enumerate(meta_names) if "country" in name), None
    )

    want = selector.strip().lower()
    totals = np.zeros(len(dates))
    matched = 0
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise DataFormatError(
                f"row {lineno}: expected {len(header)} cells, found {len(row)}"
            )
        meta = [cell.strip().lower() for cell in row[:first_date_col]]
        if country_col is not None:
            hit = meta[country_col] == want
        else:
            hit = want in meta
        if not hit:
            continue
        matched += 1
        for j, cell in enumerate(row[first_date_col:]):
            try:
                totals[j] += float(cell)
            except ValueError as exc:
                raise DataFormatError(
                    f"row {lineno}: non-numeric cell {cell!r} under {header[first_date_col + j]}"
                ) from exc
    if matched == 0:
        raise DataFormatError(f"no row matches selector {selector!r}")
    return DailySeries(dates[0], totals, selector)


def to_daily(series: DailySeries) -> DailySeries:
    """Difference a cumulative series into daily counts.

    ``out[0] = in[0]``; revisions that decrease the cumulative total yield
    negative dailies, which are kept as-is.
    """
    out = np.empty(len(series))
    out[0] = series.values[0]
    out[1:] = np.diff(series.values)
    return series.with_values(out)


def ingest(text: TextSource, layout: str, options: IngestOptions) -> DailySeries:
    """Parse, optionally difference, and optionally date-restrict a file."""
    if layout == "wide":
        series = parse_wide_csv(text, options.selector)
    elif layout == "long":
        series = parse_long_csv(text, options.selector)
    else:
        raise DataFormatError(f"unknown layout {layout!r}")
    if options.mode == "cumulative":
        series = to_daily(series)
    elif options.mode != "daily":
        raise DataFormatError(f"unknown mode {options.mode!r}")
    if options.first is not None or options.last is not None:
        series = series.restrict(options.first, options.last)
    return series


def serialize_long_csv(series: DailySeries, float_format: Optional[str] = None) -> str:
    """Render a series in the long layout.

    With ``float_format=None`` values use ``repr`` (exact round-trip);
    pass e.g. ``"%.9g"`` for fixed significant digits.
    """
    out = ["date,value"]
    for day, value in zip(series.dates(), series.values):
        text = repr(float(value)) if float_format is None else float_format % value
        out.append(f"{day.isoformat()},{text}")
    return "\n".join(out) + "\n"
