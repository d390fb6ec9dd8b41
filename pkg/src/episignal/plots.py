"""Matplotlib rendering of the analysis products.

Every CLI subcommand can drop a figure next to its delimited output; these
helpers draw straight from the library types. Period markers at 7, 3.5, and
2.33 days (the weekly oscillation and its harmonics) are dotted onto the
frequency-axis plots.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.dates as mdates
import matplotlib.pyplot as plt
import numpy as np

from .resynth import ResynthWaveform
from .series import DailySeries
from .spectrogram import SpectrogramFrame

PERIOD_MARKS_DAYS = (7.0, 3.5, 7.0 / 3.0)
_DPI = 150


def _mark_periods(ax):
    for period in PERIOD_MARKS_DAYS:
        ax.axvline(1.0 / period, color="gray", linestyle=":", linewidth=0.8)


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def save_series_plot(layers: list[tuple[str, DailySeries]], path, title=""):
    """Overlay one or more daily series (e.g. raw data and its smoothed version)."""
    fig, ax = plt.subplots(figsize=(8, 4))
    for label, series in layers:
        ax.plot(series.dates(), series.values, linewidth=1.0, label=label)
    ax.set_xlabel("date")
    ax.set_ylabel("counts/day")
    if title:
        ax.set_title(title)
    if len(layers) > 1:
        ax.legend()
    ax.xaxis.set_major_formatter(mdates.DateFormatter("%Y-%m-%d"))
    fig.autofmt_xdate()
    _finish(fig, path)


def save_response_plot(freqs, magnitude_db, phase, path, title=""):
    """Magnitude (dB) and phase panels over cycles/day."""
    fig, (ax_mag, ax_ph) = plt.subplots(2, 1, figsize=(7, 5), sharex=True)
    ax_mag.plot(freqs, magnitude_db, linewidth=1.0)
    ax_mag.set_ylabel("magnitude (dB)")
    ax_mag.set_ylim(bottom=max(np.min(magnitude_db), -120.0) - 5.0)
    _mark_periods(ax_mag)
    ax_ph.plot(freqs, phase, linewidth=1.0)
    ax_ph.set_ylabel("phase (rad)")
    ax_ph.set_xlabel("frequency (cycles/day)")
    _mark_periods(ax_ph)
    if title:
        ax_mag.set_title(title)
    _finish(fig, path)


def save_spectrum_plot(frame: SpectrogramFrame, path, title=""):
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(frame.frequencies, frame.magnitudes, linewidth=1.0)
    ax.set_xlabel("frequency (cycles/day)")
    ax.set_ylabel("normalized magnitude")
    _mark_periods(ax)
    if title:
        ax.set_title(title)
    _finish(fig, path)


def save_spectrogram_plot(frames: list[SpectrogramFrame], path, title=""):
    fig, ax = plt.subplots(figsize=(8, 4))
    grid = np.column_stack([f.magnitudes for f in frames])
    starts = mdates.date2num([f.window_start for f in frames])
    mesh = ax.pcolormesh(
        starts, frames[0].frequencies, grid, shading="nearest", cmap="viridis"
    )
    ax.set_xlabel("window start")
    ax.set_ylabel("frequency (cycles/day)")
    ax.xaxis_date()
    fig.colorbar(mesh, ax=ax, label="normalized magnitude")
    if title:
        ax.set_title(title)
    fig.autofmt_xdate()
    _finish(fig, path)


def save_waveform_plot(waveform: ResynthWaveform, path, title=""):
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(waveform.timestamps(), waveform.samples, linewidth=0.8)
    ax.set_xlabel("time")
    ax.set_ylabel("counts/day")
    if title:
        ax.set_title(title)
    fig.autofmt_xdate()
    _finish(fig, path)
