"""Filter construction and characterization.

Two families: the 7-day moving average (an FIR comb whose time-centered form
is non-causal, with nulls at periods of 7, 3.5, and 2.33 days) and
minimum-order elliptic IIR filters realized as stable second-order sections.
Elliptic designs are verified against their dB template on a dense grid and
the order is raised until the template holds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy import signal

from .errors import DesignError

# Elliptic designs are equiripple, so a filter built exactly to the template
# touches it; this relative margin keeps the realized response strictly
# inside the template under floating-point evaluation.
_DESIGN_MARGIN = 1e-6
# Allowance above 0 dB in the passband check: float noise at the ripple tops.
_ZERO_DB_HEADROOM = 1e-9
_MAX_EXTRA_ORDER = 8
_GRID_PER_BAND = 2048


class BandType(enum.Enum):
    LOW_PASS = "lowpass"
    HIGH_PASS = "highpass"
    BAND_PASS = "bandpass"


class FilterKind(enum.Enum):
    IIR_ELLIPTIC = "iir_elliptic"
    FIR_MOVING_AVERAGE = "fir_moving_average"


@dataclass(frozen=True)
class FilterDesignSpec:
    """Band edges in cycles/day plus the dB template to meet."""

    band_type: BandType
    passband_edges: tuple[float, ...]
    stopband_edges: tuple[float, ...]
    passband_ripple_db: float = 0.01
    stopband_attenuation_db: float = 40.0

    def __post_init__(self):
        object.__setattr__(self, "passband_edges", tuple(self.passband_edges))
        object.__setattr__(self, "stopband_edges", tuple(self.stopband_edges))
        n_expected = 2 if self.band_type is BandType.BAND_PASS else 1
        if len(self.passband_edges) != n_expected or len(self.stopband_edges) != n_expected:
            raise DesignError(
                f"{self.band_type.value} needs {n_expected} edge(s) per band"
            )
        for f in self.passband_edges + self.stopband_edges:
            if not 0.0 < f < 0.5:
                raise DesignError(f"band edge {f} outside (0, 0.5) cycles/day")
        if self.passband_ripple_db <= 0 or self.stopband_attenuation_db <= 0:
            raise DesignError("ripple and attenuation must be positive dB")
        wp, ws = self.passband_edges, self.stopband_edges
        if self.band_type is BandType.LOW_PASS:
            ok = wp[0] < ws[0]
        elif self.band_type is BandType.HIGH_PASS:
            ok = ws[0] < wp[0]
        else:
            ok = ws[0] < wp[0] < wp[1] < ws[1]
        if not ok:
            raise DesignError(
                "stopband edges must lie strictly outside the passband "
                f"(pass {wp}, stop {ws})"
            )

    def passband_intervals(self) -> list[tuple[float, float]]:
        if self.band_type is BandType.LOW_PASS:
            return [(0.0, self.passband_edges[0])]
        if self.band_type is BandType.HIGH_PASS:
            return [(self.passband_edges[0], 0.5)]
        return [self.passband_edges]

    def stopband_intervals(self) -> list[tuple[float, float]]:
        if self.band_type is BandType.LOW_PASS:
            return [(self.stopband_edges[0], 0.5)]
        if self.band_type is BandType.HIGH_PASS:
            return [(0.0, self.stopband_edges[0])]
        return [(0.0, self.stopband_edges[0]), (self.stopband_edges[1], 0.5)]


@dataclass(frozen=True, eq=False)
class DigitalFilter:
    """Realized filter: cascaded biquads with a scalar gain, or centered FIR taps.

    IIR sections follow the (b0, b1, b2, 1, a1, a2) row layout; every section
    must be stable. FIR taps are odd-length and applied time-centered.
    """

    kind: FilterKind
    sos: Optional[np.ndarray] = None
    gain: float = 1.0
    taps: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind is FilterKind.IIR_ELLIPTIC:
            sos = np.atleast_2d(np.asarray(self.sos, dtype=float))
            if sos.shape[1] != 6:
                raise DesignError("sos rows must have 6 coefficients")
            if not np.all(sos[:, 3] == 1.0):
                raise DesignError("sos rows must be normalized to a0 == 1")
            for a1, a2 in sos[:, 4:6]:
                poles = np.roots([1.0, a1, a2])
                if np.any(np.abs(poles) >= 1.0):
                    raise DesignError(
                        f"unstable section: pole magnitudes {np.abs(poles)}"
                    )
            sos = sos.copy()
            sos.setflags(write=False)
            object.__setattr__(self, "sos", sos)
            object.__setattr__(self, "taps", None)
        else:
            taps = np.asarray(self.taps, dtype=float)
            if taps.ndim != 1 or taps.size % 2 != 1:
                raise DesignError("FIR taps must be a 1-D odd-length vector")
            taps = taps.copy()
            taps.setflags(write=False)
            object.__setattr__(self, "taps", taps)
            object.__setattr__(self, "sos", None)

    @classmethod
    def from_sos(cls, sos, gain: float = 1.0) -> "DigitalFilter":
        return cls(kind=FilterKind.IIR_ELLIPTIC, sos=sos, gain=gain)

    @classmethod
    def from_taps(cls, taps) -> "DigitalFilter":
        return cls(kind=FilterKind.FIR_MOVING_AVERAGE, taps=taps)

    @classmethod
    def identity(cls) -> "DigitalFilter":
        return cls.from_sos(np.array([[1.0, 0, 0, 1.0, 0, 0]]))

    def complex_response(self, f) -> np.ndarray:
        """H evaluated at z = e^{j2pi f}; f may exceed Nyquist (full circle)."""
        f = np.atleast_1d(np.asarray(f, dtype=float))
        if self.kind is FilterKind.FIR_MOVING_AVERAGE:
            taps = self.taps
            half = (taps.size - 1) // 2
            if half and np.array_equal(taps, taps[::-1]):
                # Symmetric time-centered taps: the response is exactly real,
                # so the phase comes out as exactly 0 or pi.
                m = np.arange(1, half + 1)
                h = taps[half] + 2.0 * np.sum(
                    taps[half + m][:, None] * np.cos(2.0 * np.pi * np.outer(m, f)),
                    axis=0,
                )
                return self.gain * h.astype(complex)
            m = np.arange(taps.size) - half
            z = np.exp(-2j * np.pi * np.outer(m, f))
            return self.gain * np.sum(taps[:, None] * z, axis=0)
        zinv = np.exp(-2j * np.pi * f)
        h = np.full(f.shape, self.gain, dtype=complex)
        for b0, b1, b2, _, a1, a2 in self.sos:
            h *= (b0 + b1 * zinv + b2 * zinv**2) / (1.0 + a1 * zinv + a2 * zinv**2)
        return h


@dataclass(frozen=True, eq=False)
class FrequencyResponse:
    frequencies: np.ndarray
    complex_response: np.ndarray

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.complex_response)

    @property
    def magnitude_db(self) -> np.ndarray:
        """20 log10 |H|; true nulls come out as -inf."""
        with np.errstate(divide="ignore"):
            return 20.0 * np.log10(self.magnitude)

    @property
    def phase_radians(self) -> np.ndarray:
        return np.angle(self.complex_response)


def moving_average(window: int = 7) -> DigitalFilter:
    """Time-centered moving average of odd length (default the 7-day comb)."""
    if window < 3 or window % 2 == 0:
        raise DesignError("moving-average window must be odd and >= 3")
    return DigitalFilter.from_taps(np.full(window, 1.0 / window))


def frequency_response(filt: DigitalFilter, grid) -> FrequencyResponse:
    """Evaluate H on a cycles/day grid restricted to [0, 0.5]."""
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if np.any((grid < 0) | (grid > 0.5)):
        raise ValueError("response grid must lie within [0, 0.5] cycles/day")
    return FrequencyResponse(grid, filt.complex_response(grid))


def squared_magnitude_spectrum(filt: DigitalFilter, n: int) -> np.ndarray:
    """|H|^2 sampled at all N DFT bin frequencies, mirrored exactly about Nyquist."""
    if n < 2:
        raise ValueError("need at least 2 spectrum points")
    half = n // 2
    front = np.abs(filt.complex_response(np.arange(half + 1) / n)) ** 2
    out = np.empty(n)
    out[: half + 1] = front
    out[half + 1:] = front[1: n - half][::-1]
    return out


def template_conformance(
    filt: DigitalFilter,
    spec: FilterDesignSpec,
    points_per_band: int = _GRID_PER_BAND,
    passes: int = 1,
) -> tuple[float, float]:
    """Worst passband deviation (dB, >= 0) and worst stopband magnitude (dB).

    ``passes=2`` reports the backward+forward composite, whose dB response
    is doubled.
    """
    worst_ripple = 0.0
    for lo, hi in spec.passband_intervals():
        mag = np.abs(filt.complex_response(np.linspace(lo, hi, points_per_band)))
        with np.errstate(divide="ignore"):
            db = passes * 20.0 * np.log10(mag)
        worst_ripple = max(worst_ripple, float(np.max(np.abs(db))))
    worst_stop = -np.inf
    for lo, hi in spec.stopband_intervals():
        mag = np.abs(filt.complex_response(np.linspace(lo, hi, points_per_band)))
        with np.errstate(divide="ignore"):
            db = passes * 20.0 * np.log10(mag)
        worst_stop = max(worst_stop, float(np.max(db)))
    return worst_ripple, worst_stop


def _meets_template(filt: DigitalFilter, spec: FilterDesignSpec) -> bool:
    for lo, hi in spec.passband_intervals():
        mag = np.abs(filt.complex_response(np.linspace(lo, hi, _GRID_PER_BAND)))
        with np.errstate(divide="ignore"):
            db = 20.0 * np.log10(mag)
        if np.any(db < -spec.passband_ripple_db) or np.any(db > _ZERO_DB_HEADROOM):
            return False
    for lo, hi in spec.stopband_intervals():
        mag = np.abs(filt.complex_response(np.linspace(lo, hi, _GRID_PER_BAND)))
        with np.errstate(divide="ignore"):
            db = 20.0 * np.log10(mag)
        if np.any(db > -spec.stopband_attenuation_db):
            return False
    return True


def design_elliptic(spec: FilterDesignSpec) -> DigitalFilter:
    """Minimum-order digital elliptic filter meeting ``spec``'s template.

    Designed from the analog prototype through the band transform and
    bilinear mapping with pre-warped edges (scipy's design path), then
    verified on a dense grid; the order is raised if verification fails.
    """
    wp = spec.passband_edges if spec.band_type is BandType.BAND_PASS else spec.passband_edges[0]
    ws = spec.stopband_edges if spec.band_type is BandType.BAND_PASS else spec.stopband_edges[0]
    rp = spec.passband_ripple_db * (1.0 - _DESIGN_MARGIN)
    rs = spec.stopband_attenuation_db * (1.0 + _DESIGN_MARGIN)
    order, wn = signal.ellipord(wp, ws, rp, rs, fs=1.0)
    for extra in range(_MAX_EXTRA_ORDER + 1):
        z, p, k = signal.ellip(
            order + extra, rp, rs, wn, btype=spec.band_type.value, output="zpk", fs=1.0
        )
        sos = signal.zpk2sos(z, p, 1.0)
        filt = DigitalFilter.from_sos(sos, gain=float(k))
        if _meets_template(filt, spec):
            return filt
    raise DesignError(
        f"elliptic design failed to meet template within {_MAX_EXTRA_ORDER} "
        f"extra orders (spec {spec})"
    )


# Table of elliptic presets: the five band templates plus the 7-day comb.
PRESET_SPECS: dict[str, FilterDesignSpec] = {
    "lp1": FilterDesignSpec(BandType.LOW_PASS, (1 / 9,), (1 / 8,)),
    "lp2": FilterDesignSpec(BandType.LOW_PASS, (1 / 21,), (1 / 19,)),
    "hp1": FilterDesignSpec(BandType.HIGH_PASS, (1 / 7,), (1 / 8,)),
    "bp1": FilterDesignSpec(BandType.BAND_PASS, (1 / 8, 1 / 6), (1 / 9, 1 / 5)),
    "bp2": FilterDesignSpec(BandType.BAND_PASS, (1 / 19, 1 / 9), (1 / 21, 1 / 8)),
}

PRESET_NAMES = ("lp1", "lp2", "hp1", "bp1", "bp2", "ma7")


@lru_cache(maxsize=None)
def preset_filter(name: str) -> DigitalFilter:
    """Realize a named preset (designs are deterministic, so caching is safe)."""
    if name == "ma7":
        return moving_average(7)
    try:
        spec = PRESET_SPECS[name]
    except KeyError:
        raise DesignError(
            f"unknown preset {name!r}; valid presets: {', '.join(PRESET_NAMES)}"
        ) from None
    return design_elliptic(spec)
