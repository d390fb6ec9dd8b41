"""Synthetic end-padding for daily series.

Before any filtering, 28 days of synthetic data are attached to both ends of
the series and removed again afterwards. Each synthetic point d days past an
end is linearly extrapolated through the two nearest interior points that
share its weekday, at distances 7m and 7(m+1) with m = ceil(d/7); values
extrapolating below zero are clamped to zero. Anchoring on same-weekday
points preserves the phase of the 7-day oscillation across the pad.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataFormatError
from .series import DailySeries

DEFAULT_PAD_DAYS = 28

# Two same-weekday anchors must exist for every offset: the deeper anchor
# for d ≡ 1 (mod 7) sits 14 points inside the series.
MIN_SERIES_LEN = 14


@dataclass(frozen=True, eq=False)
class PaddedSeries:
    """A series together with its synthetic end pads."""

    core: DailySeries
    pad_len: int
    padded_values: np.ndarray

    def __post_init__(self):
        padded = np.asarray(self.padded_values, dtype=float)
        n = len(self.core)
        if padded.shape != (n + 2 * self.pad_len,):
            raise DataFormatError(
                f"padded length {padded.shape} inconsistent with core {n} + 2*{self.pad_len}"
            )
        if not np.array_equal(padded[self.pad_len:self.pad_len + n], self.core.values):
            raise DataFormatError("central slice of padded values must equal the core")
        pads = np.concatenate([padded[:self.pad_len], padded[self.pad_len + n:]])
        if np.any(pads < 0):
            raise DataFormatError("pad values must be non-negative")
        padded = padded.copy()
        padded.setflags(write=False)
        object.__setattr__(self, "padded_values", padded)


def extend_weekly(values, pad_len: int = DEFAULT_PAD_DAYS) -> np.ndarray:
    """Return ``values`` with ``pad_len`` extrapolated points on each side."""
    values = np.asarray(values, dtype=float)
    n = values.size
    if n < MIN_SERIES_LEN:
        raise DataFormatError(
            f"padding requires at least {MIN_SERIES_LEN} days, got {n}"
        )
    if pad_len < 0:
        raise ValueError("pad_len must be non-negative")
    before = np.empty(pad_len)
    after = np.empty(pad_len)
    for d in range(1, pad_len + 1):
        m = -(-d // 7)  # ceil(d/7): smallest m placing both anchors inside the data
        pos = n - 1 + d - 7 * m
        a1, a2 = values[pos], values[pos - 7]
        after[d - 1] = max(a1 + m * (a1 - a2), 0.0)
        pos = -d + 7 * m
        b1, b2 = values[pos], values[pos + 7]
        before[pad_len - d] = max(b1 + m * (b1 - b2), 0.0)
    return np.concatenate([before, values, after])


def pad(series: DailySeries, pad_len: int = DEFAULT_PAD_DAYS) -> PaddedSeries:
    """Attach weekday-anchored synthetic pads to both ends of ``series``."""
    return PaddedSeries(series, pad_len, extend_weekly(series.values, pad_len))


def unpad(processed, padded: PaddedSeries) -> DailySeries:
    """Drop the sections of a processed sequence that correspond to the pads."""
    processed = np.asarray(processed, dtype=float)
    if processed.shape != padded.padded_values.shape:
        raise DataFormatError(
            f"length mismatch: processed has {processed.shape[0]} samples, "
            f"padded series has {padded.padded_values.size}"
        )
    k = padded.pad_len
    core = processed[k:k + len(padded.core)]
    return padded.core.with_values(core)
