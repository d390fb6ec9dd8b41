"""Applying filters to padded series.

Three routes, all run between pad() and unpad():

* the centered moving average (single pass, no delay);
* two-pass zero-phase IIR filtering, backwards first and then forwards,
  each pass a causal recursion from zero state -- the pads absorb the
  start-up transients and the phase shifts of the passes cancel;
* frequency-domain processing, multiplying the spectrum bin-wise by the
  squared magnitude of a single-pass filter (or an ideal brick wall).
"""

from __future__ import annotations

import numpy as np
from scipy import signal

from .errors import DataFormatError, DesignError, NumericError
from .filters import (
    DigitalFilter,
    FilterKind,
    preset_filter,
    squared_magnitude_spectrum,
    PRESET_NAMES,
    PRESET_SPECS,
)
from .padding import DEFAULT_PAD_DAYS, pad, unpad
from .series import DailySeries

METHOD_NAMES = ("ma", "iir", "fd")


def apply_fir_centered(filt: DigitalFilter, x) -> np.ndarray:
    """Single pass of a time-centered FIR; output aligned with the input.

    The first/last (window-1)/2 samples of the output lean on zero extension
    and are only meaningful when they fall inside pads that will be removed.
    """
    if filt.kind is not FilterKind.FIR_MOVING_AVERAGE:
        raise DesignError("apply_fir_centered needs an FIR filter")
    x = np.asarray(x, dtype=float)
    taps = filt.taps
    if x.size < taps.size:
        raise DataFormatError(
            f"insufficient padding: need at least {taps.size} samples, got {x.size}"
        )
    # correlate applies taps without flipping, matching the centered sum.
    return np.correlate(x, taps, mode="same") * filt.gain


def apply_zero_phase(filt: DigitalFilter, x) -> np.ndarray:
    """Two-pass zero-phase IIR filtering: backwards first, then forwards.

    Each pass runs the section cascade causally from zero initial state, so
    the composite magnitude is |H|^2 and the phase cancels exactly.
    """
    if filt.kind is not FilterKind.IIR_ELLIPTIC:
        raise DesignError("apply_zero_phase needs an IIR filter")
    x = np.asarray(x, dtype=float)
    sos = np.array(filt.sos)  # sosfilt needs a writable buffer
    backward = signal.sosfilt(sos, np.ascontiguousarray(x[::-1]))[::-1] * filt.gain
    forward = signal.sosfilt(sos, np.ascontiguousarray(backward)) * filt.gain
    return forward


def brick_wall_spectrum(n: int, f_low: float, f_high: float) -> np.ndarray:
    """Ideal unit mask over [f_low, f_high], mirrored about Nyquist."""
    if not 0.0 <= f_low < f_high <= 0.5:
        raise DesignError(f"inverted or out-of-range band [{f_low}, {f_high}]")
    k = np.arange(n)
    keep = ((n * f_low <= k) & (k <= n * f_high)) | (
        (n * (1.0 - f_high) <= k) & (k <= n * (1.0 - f_low))
    )
    return keep.astype(float)


def apply_frequency_domain(filt: DigitalFilter, x, spectrum=None) -> np.ndarray:
    """y = IDFT(H_s . DFT(x)) with H_s the squared single-pass magnitude.

    ``spectrum`` overrides H_s (e.g. with a brick wall); it must be real and
    even about Nyquist. Multiplying on the half spectrum keeps the output
    exactly real.
    """
    x = np.asarray(x, dtype=float)
    h_s = squared_magnitude_spectrum(filt, x.size) if spectrum is None else np.asarray(spectrum, dtype=float)
    if h_s.shape != x.shape:
        raise DataFormatError(
            f"spectrum length {h_s.size} does not match series length {x.size}"
        )
    n = x.size
    mirror_err = np.max(np.abs(h_s[1:] - h_s[1:][::-1]))
    if mirror_err > 1e-12 * max(np.max(np.abs(h_s)), 1e-300):
        raise NumericError("processing spectrum must be even about Nyquist")
    return np.fft.irfft(h_s[: n // 2 + 1] * np.fft.rfft(x), n=n)


def _brick_wall_band(preset) -> tuple[float, float]:
    spec = PRESET_SPECS.get(preset) if isinstance(preset, str) else None
    if spec is None:
        raise DesignError(f"brick wall needs a named elliptic preset, not {preset!r}")
    return spec.passband_intervals()[0]


def pipeline(
    series: DailySeries,
    preset: str,
    method: str,
    pad_len: int = DEFAULT_PAD_DAYS,
    brick_wall: bool = False,
) -> DailySeries:
    """Pad, filter with a named preset, and unpad; dates are preserved.

    Methods: ``ma`` (single centered pass, FIR presets), ``iir`` (two-pass
    zero-phase, elliptic presets), ``fd`` (frequency-domain squared
    spectrum; ``brick_wall`` swaps in the ideal mask of the passband).
    """
    if method not in METHOD_NAMES:
        raise DesignError(
            f"unknown method {method!r}; valid methods: {', '.join(METHOD_NAMES)}"
        )
    filt = filt_for(preset)
    padded = pad(series, pad_len)
    x = padded.padded_values
    if method == "ma":
        if filt.kind is not FilterKind.FIR_MOVING_AVERAGE:
            raise DesignError(f"method 'ma' needs an FIR preset, not {preset!r}")
        y = apply_fir_centered(filt, x)
    elif method == "iir":
        if filt.kind is not FilterKind.IIR_ELLIPTIC:
            raise DesignError(f"method 'iir' needs an elliptic preset, not {preset!r}")
        y = apply_zero_phase(filt, x)
    else:
        if brick_wall:
            lo, hi = _brick_wall_band(preset)
            y = apply_frequency_domain(filt, x, spectrum=brick_wall_spectrum(x.size, lo, hi))
        else:
            y = apply_frequency_domain(filt, x)
    return unpad(y, padded)


def filt_for(preset) -> DigitalFilter:
    """Accept a preset name or a ready-made DigitalFilter."""
    if isinstance(preset, DigitalFilter):
        return preset
    if preset not in PRESET_NAMES:
        raise DesignError(
            f"unknown preset {preset!r}; valid presets: {', '.join(PRESET_NAMES)}"
        )
    return preset_filter(preset)
