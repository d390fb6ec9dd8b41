"""Sinusoidal resynthesis of the weekly oscillations.

The most recent analysis window is differentiated in the frequency domain,
its spectrum is reduced to amplitude/phase, and the cosine-sum reconstruction
is integrated symbolically term by term:

    integral of a cos(2pi n k/N + theta) dn = (a N / (2pi k)) sin(2pi n k/N + theta)

Summing the integrated terms over just the bins nearest the 7, 3.5, and
2.33-day periods yields a waveform holding only those oscillations. Each
daily datum is treated as occurring at 12 noon, and the waveform is sampled
at minute resolution from the first datum's noon instant.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

import numpy as np

from . import fourier
from .derivatives import frequency_domain_derivative
from .errors import DataFormatError, NumericError
from .series import DailySeries

DEFAULT_WINDOW_DAYS = 183
DEFAULT_PERIODS = (7.0, 3.5, 7.0 / 3.0)
MINUTES_PER_DAY = 1440


@dataclass(frozen=True)
class ResynthComponent:
    """One integrated sinusoid: amplitude * sin(2pi t k/N + phase), t in days."""

    bin_index: int
    period_days: float
    amplitude: float
    phase: float


@dataclass(frozen=True, eq=False)
class ResynthWaveform:
    """Minute-resolution sum of the selected oscillation components.

    Samples run from the first window day's noon for (window_points - 1)
    days, end instant excluded.
    """

    start_instant: dt.datetime
    step_minutes: int
    samples: np.ndarray
    components: tuple[ResynthComponent, ...]
    window_points: int

    def timestamps(self) -> list[dt.datetime]:
        step = dt.timedelta(minutes=self.step_minutes)
        return [self.start_instant + i * step for i in range(self.samples.size)]

    def evaluate(self, t_days) -> np.ndarray:
        """Waveform value at day offsets from the start instant (t may be fractional)."""
        t = np.atleast_1d(np.asarray(t_days, dtype=float))
        out = np.zeros_like(t)
        n = self.window_points
        for comp in self.components:
            out += comp.amplitude * np.sin(
                2.0 * np.pi * t * comp.bin_index / n + comp.phase
            )
        return out


def resynthesize(
    series: DailySeries,
    window_days: int = DEFAULT_WINDOW_DAYS,
    periods=DEFAULT_PERIODS,
    step_minutes: int = 1,
) -> ResynthWaveform:
    """Rebuild the selected oscillations from the most recent analysis window."""
    if len(series) < window_days:
        raise DataFormatError(
            f"series has {len(series)} days, need at least {window_days} for the window"
        )
    if window_days < 2:
        raise DataFormatError("analysis window must cover at least 2 days")
    if step_minutes < 1 or MINUTES_PER_DAY % step_minutes != 0:
        raise DataFormatError("step_minutes must divide a day evenly")

    segment = series.values[-window_days:]
    n = window_days
    bank = fourier.magnitude_phase(fourier.dft(frequency_domain_derivative(segment)))

    chosen: dict[int, float] = {}
    for period in periods:
        if period <= 0:
            raise DataFormatError(f"period {period} must be positive days")
        k = int(round(n / period))
        if k < 1 or k > n // 2:
            raise NumericError(
                f"period {period} maps to bin {k}, outside 1..{n // 2}"
            )
        if k in chosen:
            raise NumericError(
                f"periods {chosen[k]} and {period} both map to bin {k} "
                f"for a {n}-day window"
            )
        chosen[k] = period

    components = tuple(
        ResynthComponent(
            bin_index=k,
            period_days=period,
            amplitude=bank.amplitudes[k] * n / (2.0 * np.pi * k),
            phase=bank.phases[k],
        )
        for k, period in chosen.items()
    )

    window_start = series.end_date - dt.timedelta(days=window_days - 1)
    start_instant = dt.datetime.combine(window_start, dt.time(12, 0))
    n_samples = (window_days - 1) * (MINUTES_PER_DAY // step_minutes)
    t = np.arange(n_samples) * (step_minutes / MINUTES_PER_DAY)
    samples = np.zeros(n_samples)
    for comp in components:
        samples += comp.amplitude * np.sin(
            2.0 * np.pi * t * comp.bin_index / n + comp.phase
        )

    return ResynthWaveform(
        start_instant=start_instant,
        step_minutes=step_minutes,
        samples=samples,
        components=components,
        window_points=n,
    )


def export_waveform(waveform: ResynthWaveform, float_format: str = "%.9g") -> str:
    """Long CSV with ISO timestamps at the waveform's step resolution."""
    lines = ["timestamp,value"]
    step = dt.timedelta(minutes=waveform.step_minutes)
    instant = waveform.start_instant
    for value in waveform.samples:
        lines.append(f"{instant.isoformat()},{float_format % value}")
        instant += step
    return "\n".join(lines) + "\n"
