"""Discrete Fourier analysis and sinusoidal reconstruction.

The forward transform is the plain DFT sum X[k] = sum_n x[n] e^{-j2pi nk/N}
with no 1/N scaling; the inverse carries the 1/N. Series lengths are
whatever the calendar dictates (183- and 193-day windows occur in practice),
so nothing here assumes a power-of-two N.

A real length-N series is equivalently a bank of sinusoids: amplitude
a[k] = (2/N)|X[k]| and phase from the arctangent of X[k] for the interior
bins, with 1/N amplitudes at DC and (even N) Nyquist so that

    x[n] = sum_k a[k] cos(2pi n k / N + theta[k])

reproduces the series exactly at integer n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError

SYMMETRY_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Complex DFT bins of a series sampled at 1/day."""

    bins: np.ndarray
    sample_rate: float = 1.0  # samples per day

    def __post_init__(self):
        bins = np.asarray(self.bins, dtype=complex)
        if bins.ndim != 1 or bins.size < 1:
            raise NumericError("spectrum needs at least one bin")
        bins = bins.copy()
        bins.setflags(write=False)
        object.__setattr__(self, "bins", bins)

    @property
    def n_points(self) -> int:
        return self.bins.size

    def frequencies(self) -> np.ndarray:
        """Bin frequencies k/N in cycles/day (full circle, 0 <= f < 1)."""
        n = self.n_points
        return np.arange(n) / n * self.sample_rate


@dataclass(frozen=True, eq=False)
class SinusoidBank:
    """Per-bin amplitude/phase over the half spectrum k = 0 .. N//2."""

    n_points: int
    bins: np.ndarray  # integer k values
    amplitudes: np.ndarray  # >= 0, same units as the input series
    phases: np.ndarray  # radians in (-pi, pi]

    def angular_rates(self) -> np.ndarray:
        """Radians per day for each bank entry."""
        return 2.0 * np.pi * self.bins / self.n_points

    def select(self, bins) -> "SinusoidBank":
        """Sub-bank holding only the requested bin indices."""
        idx = np.asarray(bins, dtype=int)
        return SinusoidBank(
            self.n_points, self.bins[idx], self.amplitudes[idx], self.phases[idx]
        )


def dft(x) -> Spectrum:
    """Forward transform of a real series (no 1/N scaling)."""
    x = np.asarray(x, dtype=float)
    if x.size < 1:
        raise NumericError("dft requires at least one sample")
    return Spectrum(np.fft.fft(x))


def idft(spectrum: Spectrum) -> np.ndarray:
    """Inverse transform back to a real series.

    The bins must be conjugate-symmetric to within 1e-9 of the largest bin;
    the (noise-level) imaginary residue is then discarded.
    """
    bins = spectrum.bins
    n = bins.size
    mirrored = np.conj(bins[(-np.arange(n)) % n])
    scale = np.max(np.abs(bins))
    if scale > 0 and np.max(np.abs(bins - mirrored)) > SYMMETRY_RTOL * scale:
        raise NumericError("spectrum is not conjugate-symmetric: not a real series")
    return np.fft.ifft(bins).real


def magnitude_phase(spectrum: Spectrum) -> SinusoidBank:
    """Extract the sinusoid bank of a real series' spectrum.

    Interior bins carry the 2/N amplitude factor; DC and the even-N Nyquist
    bin appear once in the reconstruction sum, so they use 1/N.
    """
    bins = spectrum.bins
    n = bins.size
    half = n // 2
    k = np.arange(half + 1)
    amplitudes = 2.0 / n * np.abs(bins[k])
    amplitudes[0] = np.abs(bins[0]) / n
    if n % 2 == 0 and half >= 1:
        amplitudes[half] = np.abs(bins[half]) / n
    phases = np.arctan2(bins[k].imag, bins[k].real)
    phases = np.where(phases <= -np.pi, phases + 2.0 * np.pi, phases)
    return SinusoidBank(n, k, amplitudes, phases)


def reconstruct(bank: SinusoidBank, t) -> np.ndarray:
    """Evaluate the cosine sum of a bank at (possibly fractional) day offsets.

    With the full bank of a real series, integer t = 0..N-1 recovers the
    original samples.
    """
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    t_arr = np.atleast_1d(t_arr)
    if bank.bins.size == 0:
        out = np.zeros_like(t_arr)
    else:
        args = (
            2.0 * np.pi * np.outer(bank.bins, t_arr) / bank.n_points
            + bank.phases[:, None]
        )
        out = np.sum(bank.amplitudes[:, None] * np.cos(args), axis=0)
    return float(out[0]) if scalar else out


def hann_window(n: int) -> np.ndarray:
    """Symmetric Hann taper: w[i] = 0.5 (1 - cos(2pi i/(n-1))), zero at both ends."""
    if n < 1:
        raise ValueError("window length must be >= 1")
    if n == 1:
        return np.ones(1)
    i = np.arange(n)
    return 0.5 * (1.0 - np.cos(2.0 * np.pi * i / (n - 1)))
