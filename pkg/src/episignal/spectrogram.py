"""Normalized spectra of series derivatives, single-window and sliding.

Each window is differentiated in the frequency domain (on the window itself,
so long-term trends drop out), tapered with a Hann window, and transformed.
Magnitudes are normalized to the largest value inside a reference band so
that frames are comparable; low-frequency bins that would exceed unity are
clipped.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

import numpy as np

from . import fourier
from .derivatives import frequency_domain_derivative
from .errors import DataFormatError
from .series import DailySeries

SPECTRUM_WINDOW_DAYS = 193
SPECTRUM_BAND = (0.1, 0.475)
SLIDING_WINDOW_DAYS = 25
SLIDING_FLOOR_FREQ = 0.1


@dataclass(frozen=True, eq=False)
class SpectrogramFrame:
    """One window's normalized magnitude spectrum (k = 0 .. N//2)."""

    window_start: dt.date
    frequencies: np.ndarray  # cycles/day
    magnitudes: np.ndarray  # in [0, 1] when normalized
    normalized: bool  # False when the reference band carried no energy


def _derivative_frame(values: np.ndarray, window_start: dt.date,
                      band_lo: float, band_hi: float) -> SpectrogramFrame:
    n = values.size
    tapered = frequency_domain_derivative(values) * fourier.hann_window(n)
    spectrum = fourier.dft(tapered)
    half = n // 2
    freqs = np.arange(half + 1) / n
    mags = np.abs(spectrum.bins[: half + 1])
    band = (freqs >= band_lo) & (freqs <= band_hi)
    peak = float(np.max(mags[band])) if np.any(band) else 0.0
    # a flat window differentiates to pure rounding noise; don't normalize by it
    noise_floor = 1e-12 * n * (1.0 + float(np.max(np.abs(values))))
    if peak <= noise_floor:
        return SpectrogramFrame(window_start, freqs, mags, normalized=False)
    return SpectrogramFrame(
        window_start, freqs, np.minimum(mags / peak, 1.0), normalized=True
    )


def windowed_derivative_spectrum(
    series: DailySeries,
    window_days: int = SPECTRUM_WINDOW_DAYS,
    normalize_band: tuple[float, float] = SPECTRUM_BAND,
) -> SpectrogramFrame:
    """Normalized derivative spectrum of the most recent ``window_days`` points."""
    if len(series) < window_days:
        raise DataFormatError(
            f"series has {len(series)} days, need at least {window_days} for the window"
        )
    lo, hi = normalize_band
    start = series.end_date - dt.timedelta(days=window_days - 1)
    return _derivative_frame(series.values[-window_days:], start, lo, hi)


def sliding_spectrogram(
    series: DailySeries,
    window_days: int = SLIDING_WINDOW_DAYS,
    hop_days: int = 1,
    floor_freq: float = SLIDING_FLOOR_FREQ,
) -> list[SpectrogramFrame]:
    """Per-window normalized spectra, ordered by window start date.

    Each frame normalizes to its own peak above ``floor_freq``; bins below
    the floor are clipped to at most 1.
    """
    if hop_days < 1:
        raise DataFormatError("hop must be at least 1 day")
    if len(series) < window_days:
        raise DataFormatError(
            f"series has {len(series)} days, need at least {window_days} for the window"
        )
    frames = []
    for start in range(0, len(series) - window_days + 1, hop_days):
        frames.append(
            _derivative_frame(
                series.values[start:start + window_days],
                series.start_date + dt.timedelta(days=start),
                floor_freq,
                0.5,
            )
        )
    return frames
