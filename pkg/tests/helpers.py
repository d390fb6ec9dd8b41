"""Independent oracles used across test modules.

These stay deliberately naive (direct sums, scalar loops) so they exercise
the library against a different computation path.
"""

import numpy as np


def naive_dft(x):
    """O(N^2) transform straight from the defining sum."""
    x = np.asarray(x, dtype=float)
    n = x.size
    return np.array(
        [sum(x[i] * np.exp(-2j * np.pi * i * k / n) for i in range(n)) for k in range(n)]
    )


def naive_idft(bins):
    """O(N^2) inverse with the 1/N factor, complex result."""
    bins = np.asarray(bins, dtype=complex)
    n = bins.size
    return np.array(
        [sum(bins[k] * np.exp(2j * np.pi * i * k / n) for k in range(n)) / n for i in range(n)]
    )


def ma_response_closed_form(f):
    """7-day moving average |H| via the geometric-sum identity sin(7 pi f)/(7 sin(pi f))."""
    f = np.asarray(f, dtype=float)
    num = np.sin(7 * np.pi * f)
    den = 7 * np.sin(np.pi * f)
    with np.errstate(invalid="ignore", divide="ignore"):
        h = np.where(den == 0.0, 1.0, num / den)
    return h


def lockin_amplitude(y, f):
    """Amplitude of the f-cycle component over a whole number of periods."""
    y = np.asarray(y, dtype=float)
    n = y.size
    return 2.0 * np.abs(np.sum(y * np.exp(-2j * np.pi * f * np.arange(n)))) / n
