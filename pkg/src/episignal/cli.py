"""Command-line front end.

Subcommand grammar: ingest, smooth, response, spectrum, spectrogram,
resynth, derivative. Each reads at most one series and writes one file;
identical inputs and flags produce byte-identical outputs. Passing --plot
additionally renders a figure of the same data next to the delimited output.

Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric failure.
"""

from __future__ import annotations

import argparse
import datetime as dt
import json
import sys
from pathlib import Path

import numpy as np

from . import filtering, resynth, spectrogram
from .derivatives import (
    DerivativeMethod,
    central_difference_8,
    first_difference,
    frequency_domain_derivative,
    method_phase_response,
    method_spectral_response,
)
from .errors import DataFormatError, NumericError
from .filters import PRESET_NAMES, frequency_response, preset_filter
from .series import DailySeries, IngestOptions, ingest

FLOAT_FORMAT = "%.9g"
DB_FLOOR_MAGNITUDE = 1e-15
DB_FLOOR_VALUE = -300.0
DERIVATIVE_METHOD_NAMES = tuple(m.value for m in DerivativeMethod)


def fmt(value) -> str:
    if isinstance(value, float):
        return FLOAT_FORMAT % value
    return str(value)


def magnitude_to_db(mag: np.ndarray) -> np.ndarray:
    """Eq.-style 20 log10 with a -300 dB floor so CSV cells stay numeric."""
    out = np.full(mag.shape, DB_FLOOR_VALUE)
    keep = mag >= DB_FLOOR_MAGNITUDE
    out[keep] = 20.0 * np.log10(mag[keep])
    return out


def write_table(path: str, columns: list[str], rows, output_format: str) -> None:
    if output_format == "json":
        payload = {
            "columns": columns,
            "rows": [
                [float(FLOAT_FORMAT % v) if isinstance(v, float) else v for v in row]
                for row in rows
            ],
        }
        text = json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n"
    else:
        lines = [",".join(columns)]
        lines.extend(",".join(fmt(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def series_rows(series: DailySeries):
    return [
        (day.isoformat(), float(v)) for day, v in zip(series.dates(), series.values)
    ]


def _parse_date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise DataFormatError(f"bad ISO date {text!r}") from None


def read_series(args) -> DailySeries:
    options = IngestOptions(
        mode=args.mode,
        selector=args.select or "",
        first=_parse_date(args.first) if args.first else None,
        last=_parse_date(args.last) if args.last else None,
    )
    with open(args.input, "r", encoding="utf-8", newline="") as handle:
        return ingest(handle, args.format, options)


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="input CSV path")
    parser.add_argument("--format", choices=("long", "wide"), default="long",
                        help="input layout (default long)")
    parser.add_argument("--mode", choices=("daily", "cumulative"), default="daily",
                        help="interpret values as daily counts or cumulative totals")
    parser.add_argument("--select", default="",
                        help="row label to extract (required for wide layout)")
    parser.add_argument("--first", default="", help="restrict to dates >= this ISO date")
    parser.add_argument("--last", default="", help="restrict to dates <= this ISO date")


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", required=True, help="output file path")
    parser.add_argument("--output-format", choices=("csv", "json"), default="csv")
    parser.add_argument("--plot", default="",
                        help="also render a figure of the output to this image path")


def cmd_ingest(args) -> int:
    series = read_series(args)
    write_table(args.output, ["date", "value"], series_rows(series), args.output_format)
    if args.plot:
        from . import plots

        plots.save_series_plot(
            [(series.label or "series", series)], args.plot, title=series.label
        )
    return 0


def cmd_smooth(args) -> int:
    series = read_series(args)
    smoothed = filtering.pipeline(
        series, args.preset, args.method,
        pad_len=args.pad_days, brick_wall=args.brick_wall,
    )
    write_table(args.output, ["date", "value"], series_rows(smoothed), args.output_format)
    if args.plot:
        from . import plots

        plots.save_series_plot(
            [("input", series), (f"{args.preset}/{args.method}", smoothed)],
            args.plot,
            title=series.label,
        )
    return 0


def cmd_response(args) -> int:
    freqs = np.linspace(0.0, 0.5, args.points)
    if args.derivative_method:
        if args.passes != 1:
            print("error: --passes applies only to filter presets", file=sys.stderr)
            return 2
        mag = method_spectral_response(args.derivative_method, freqs)
        phase = method_phase_response(args.derivative_method, freqs)
        mag_db = magnitude_to_db(mag)
        title = f"derivative method {args.derivative_method}"
    else:
        response = frequency_response(preset_filter(args.preset), freqs)
        mag_db = magnitude_to_db(response.magnitude)
        if args.passes == 2:
            mag_db = np.maximum(2.0 * mag_db, DB_FLOOR_VALUE)
            phase = np.zeros_like(freqs)
        else:
            phase = response.phase_radians
        title = f"{args.preset} ({args.passes} pass{'es' if args.passes > 1 else ''})"
    rows = [
        (float(f), float(m), float(p)) for f, m, p in zip(freqs, mag_db, phase)
    ]
    write_table(args.output, ["frequency", "magnitude_db", "phase"], rows,
                args.output_format)
    if args.plot:
        from . import plots

        plots.save_response_plot(freqs, mag_db, phase, args.plot, title=title)
    return 0


def cmd_spectrum(args) -> int:
    series = read_series(args)
    frame = spectrogram.windowed_derivative_spectrum(
        series, args.window, (args.band_low, args.band_high)
    )
    if not frame.normalized:
        print("warning: normalization band carried no energy; magnitudes are raw",
              file=sys.stderr)
    rows = [
        (frame.window_start.isoformat(), float(f), float(m))
        for f, m in zip(frame.frequencies, frame.magnitudes)
    ]
    write_table(args.output, ["window_start", "frequency", "magnitude"], rows,
                args.output_format)
    if args.plot:
        from . import plots

        plots.save_spectrum_plot(frame, args.plot, title=series.label)
    return 0


def cmd_spectrogram(args) -> int:
    series = read_series(args)
    frames = spectrogram.sliding_spectrogram(
        series, args.window, args.hop, args.floor_freq
    )
    rows = [
        (frame.window_start.isoformat(), float(f), float(m))
        for frame in frames
        for f, m in zip(frame.frequencies, frame.magnitudes)
    ]
    write_table(args.output, ["window_start", "frequency", "magnitude"], rows,
                args.output_format)
    if args.plot:
        from . import plots

        plots.save_spectrogram_plot(frames, args.plot, title=series.label)
    return 0


def cmd_resynth(args) -> int:
    series = read_series(args)
    periods = tuple(float(p) for p in args.periods.split(","))
    waveform = resynth.resynthesize(series, args.window, periods, args.step_minutes)
    rows = [
        (instant.isoformat(), float(v))
        for instant, v in zip(waveform.timestamps(), waveform.samples)
    ]
    write_table(args.output, ["timestamp", "value"], rows, args.output_format)
    if args.plot:
        from . import plots

        plots.save_waveform_plot(waveform, args.plot, title=series.label)
    return 0


def cmd_derivative(args) -> int:
    series = read_series(args)
    method = DerivativeMethod(args.method)
    if method is DerivativeMethod.FIRST_DIFFERENCE:
        values, offset = first_difference(series.values), 1
    elif method is DerivativeMethod.CENTRAL_DIFFERENCE_8:
        values, offset = central_difference_8(series.values), 4
    else:
        values, offset = frequency_domain_derivative(series.values), 0
    out = series.with_values(values, start_offset_days=offset)
    write_table(args.output, ["date", "value"], series_rows(out), args.output_format)
    if args.plot:
        from . import plots

        plots.save_series_plot([(f"d/dt ({args.method})", out)], args.plot,
                               title=series.label)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="episignal",
        description="Spectral analysis, smoothing, and resynthesis of daily time series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse an input file into the long layout")
    _add_input_options(p)
    _add_output_options(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("smooth", help="pad, filter with a preset, and unpad")
    _add_input_options(p)
    _add_output_options(p)
    p.add_argument("--preset", choices=PRESET_NAMES, required=True)
    p.add_argument("--method", choices=filtering.METHOD_NAMES, required=True)
    p.add_argument("--brick-wall", action="store_true",
                   help="use the ideal passband mask instead of the squared "
                        "elliptic spectrum (fd method only)")
    p.add_argument("--pad-days", type=int, default=28)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("response", help="tabulate a frequency response")
    _add_output_options(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=PRESET_NAMES)
    group.add_argument("--derivative-method", choices=DERIVATIVE_METHOD_NAMES)
    p.add_argument("--points", type=int, default=2048,
                   help="grid size over [0, 0.5] cycles/day (endpoints included)")
    p.add_argument("--passes", type=int, choices=(1, 2), default=1,
                   help="2 reports the zero-phase composite (dB doubled)")
    p.set_defaults(func=cmd_response)

    p = sub.add_parser("spectrum", help="normalized derivative spectrum of the last window")
    _add_input_options(p)
    _add_output_options(p)
    p.add_argument("--window", type=int, default=spectrogram.SPECTRUM_WINDOW_DAYS)
    p.add_argument("--band-low", type=float, default=spectrogram.SPECTRUM_BAND[0])
    p.add_argument("--band-high", type=float, default=spectrogram.SPECTRUM_BAND[1])
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("spectrogram", help="sliding-window normalized spectra")
    _add_input_options(p)
    _add_output_options(p)
    p.add_argument("--window", type=int, default=spectrogram.SLIDING_WINDOW_DAYS)
    p.add_argument("--hop", type=int, default=1)
    p.add_argument("--floor-freq", type=float, default=spectrogram.SLIDING_FLOOR_FREQ)
    p.set_defaults(func=cmd_spectrogram)

    p = sub.add_parser("resynth", help="resynthesize the weekly oscillations")
    _add_input_options(p)
    _add_output_options(p)
    p.add_argument("--window", type=int, default=resynth.DEFAULT_WINDOW_DAYS)
    p.add_argument("--periods", default="7,3.5," + repr(7.0 / 3.0),
                   help="comma-separated target periods in days")
    p.add_argument("--step-minutes", type=int, default=1)
    p.set_defaults(func=cmd_resynth)

    p = sub.add_parser("derivative", help="differentiate a series")
    _add_input_options(p)
    _add_output_options(p)
    p.add_argument("--method", choices=DERIVATIVE_METHOD_NAMES, required=True)
    p.set_defaults(func=cmd_derivative)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "format", None) == "wide" and not args.select:
        print("error: --select is required with --format wide", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DataFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
