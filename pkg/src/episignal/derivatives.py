"""Numerical differentiation of daily series.

Three schemes with different artifact profiles:

* first difference -- backward, half-sample delay, magnitude 2|sin(pi f)|;
* 8-point central difference -- symmetric stencil, no delay, exact for
  polynomials up to degree 8, valid only 4 points in from each end;
* frequency-domain -- multiply the spectrum by j*omega, constant pi/2 phase,
  exact on bin-frequency sinusoids.

The frequency-domain scheme is the pipeline default for spectral analyses.
"""

from __future__ import annotations

import enum

import numpy as np

from .padding import extend_weekly


class DerivativeMethod(enum.Enum):
    FIRST_DIFFERENCE = "first"
    CENTRAL_DIFFERENCE_8 = "central8"
    FREQUENCY_DOMAIN = "spectral"


# Weights on x[n+m], m = -4..4.
CENTRAL8_COEFFS = np.array(
    [1 / 280, -4 / 105, 1 / 5, -4 / 5, 0.0, 4 / 5, -1 / 5, 4 / 105, -1 / 280]
)


def first_difference(x) -> np.ndarray:
    """x'[n] = x[n] - x[n-1]; output has length N-1 (indices 1..N-1)."""
    x = np.asarray(x, dtype=float)
    if x.size < 2:
        raise ValueError("first difference needs at least 2 samples")
    return np.diff(x)


def central_difference_8(x, pad_edges: bool = False) -> np.ndarray:
    """8-point central difference.

    By default only the fully-supported interior (indices 4..N-5) is
    returned. With ``pad_edges`` the input is extended 4 days each side by
    the weekday extrapolation rule, yielding a full-length output (requires
    at least 14 samples).
    """
    x = np.asarray(x, dtype=float)
    if x.size < 9:
        raise ValueError("central difference needs at least 9 samples")
    if pad_edges:
        x = extend_weekly(x, 4)
    return np.correlate(x, CENTRAL8_COEFFS, mode="valid")


def frequency_domain_derivative(x) -> np.ndarray:
    """Differentiate by multiplying the spectrum by j*2pi*f.

    Negative-frequency bins (k > N/2) use f = k/N - 1; the even-N Nyquist
    multiplier is zero so the output of a real input stays real. Working on
    the half spectrum keeps the output exactly real by construction.
    """
    x = np.asarray(x, dtype=float)
    if x.size < 2:
        raise ValueError("frequency-domain derivative needs at least 2 samples")
    n = x.size
    k = np.arange(n // 2 + 1)
    h = 2j * np.pi * k / n
    if n % 2 == 0:
        h[n // 2] = 0.0
    return np.fft.irfft(h * np.fft.rfft(x), n=n)


def _coerce_method(method) -> DerivativeMethod:
    if isinstance(method, DerivativeMethod):
        return method
    return DerivativeMethod(method)


def _transfer(method: DerivativeMethod, f: np.ndarray) -> np.ndarray:
    if method is DerivativeMethod.FIRST_DIFFERENCE:
        return 1.0 - np.exp(-2j * np.pi * f)
    if method is DerivativeMethod.CENTRAL_DIFFERENCE_8:
        m = np.arange(-4, 5)
        return np.sum(
            CENTRAL8_COEFFS[:, None] * np.exp(2j * np.pi * np.outer(m, f)), axis=0
        )
    return 2j * np.pi * f


def method_spectral_response(method, f) -> np.ndarray:
    """|H(f)| of a differentiation scheme on a cycles/day grid in [0, 0.5]."""
    method = _coerce_method(method)
    f = np.atleast_1d(np.asarray(f, dtype=float))
    if np.any((f < 0) | (f > 0.5)):
        raise ValueError("frequencies must lie in [0, 0.5] cycles/day")
    return np.abs(_transfer(method, f))


def method_phase_response(method, f) -> np.ndarray:
    """Phase of a differentiation scheme in radians; zero-magnitude points report 0."""
    method = _coerce_method(method)
    f = np.atleast_1d(np.asarray(f, dtype=float))
    if np.any((f < 0) | (f > 0.5)):
        raise ValueError("frequencies must lie in [0, 0.5] cycles/day")
    h = _transfer(method, f)
    return np.where(np.abs(h) == 0.0, 0.0, np.angle(h))
