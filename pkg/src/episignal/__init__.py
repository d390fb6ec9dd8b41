"""Spectral analysis, smoothing, band isolation, and sinusoidal resynthesis
for daily-aggregated epidemiological time series."""

from .derivatives import (
    DerivativeMethod,
    central_difference_8,
    first_difference,
    frequency_domain_derivative,
    method_phase_response,
    method_spectral_response,
)
from .errors import DataFormatError, DesignError, EpisignalError, NumericError
from .filtering import (
    apply_fir_centered,
    apply_frequency_domain,
    apply_zero_phase,
    brick_wall_spectrum,
    pipeline,
)
from .filters import (
    BandType,
    DigitalFilter,
    FilterDesignSpec,
    FilterKind,
    FrequencyResponse,
    PRESET_NAMES,
    PRESET_SPECS,
    design_elliptic,
    frequency_response,
    moving_average,
    preset_filter,
    squared_magnitude_spectrum,
)
from .fourier import (
    SinusoidBank,
    Spectrum,
    dft,
    hann_window,
    idft,
    magnitude_phase,
    reconstruct,
)
from .padding import PaddedSeries, extend_weekly, pad, unpad
from .resynth import ResynthComponent, ResynthWaveform, export_waveform, resynthesize
from .series import (
    DailySeries,
    IngestOptions,
    ingest,
    parse_long_csv,
    parse_wide_csv,
    serialize_long_csv,
    to_daily,
)
from .spectrogram import (
    SpectrogramFrame,
    sliding_spectrogram,
    windowed_derivative_spectrum,
)

__version__ = "0.1.0"
