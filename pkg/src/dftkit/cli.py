"""Command-line front end.

Four subcommands: analyze (peaks and notes in a WAV file), equalize
(apply a gain preset or profile file), synth (generate test tones), and
bench (time the naive transform against the fast one).

Exit codes: 0 on success, 1 on runtime failures such as unreadable or
malformed files, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass

import numpy as np

from .analysis import find_peaks, identify_note, magnitude_spectrum, write_spectrum_csv
from .equalizer import PRESET_NAMES, equalize, load_profile, preset
from .synth import mix, sine
from .transform import DspError, Signal, dft_naive, fft, pad_to_pow2
from .wavio import read_wav, write_wav

__all__ = ["main", "run_bench", "BenchRow", "UsageError"]


class UsageError(Exception):
    """Bad argument values discovered after parsing."""


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"could not parse {what} {text!r} as comma-separated numbers")
    if not values:
        raise UsageError(f"{what} must contain at least one value")
    return values


def _parse_ints(text: str, what: str) -> list[int]:
    values = _parse_floats(text, what)
    result = []
    for value in values:
        if value != int(value):
            raise UsageError(f"{what} must be integers, got {value}")
        result.append(int(value))
    return result


def cmd_analyze(args: argparse.Namespace) -> int:
    signal, meta = read_wav(args.input)
    prepared = signal if args.no_pad else pad_to_pow2(signal)
    mag = magnitude_spectrum(fft(prepared))
    if args.csv:
        write_spectrum_csv(mag, args.csv)
    peaks = find_peaks(mag, args.threshold, args.separation_hz)

    print(
        f"{args.input}: {meta.sample_rate} Hz, {meta.frame_count} frames, "
        f"transform length {len(prepared)}, bin width {mag.bin_width_hz:.5g} Hz"
    )
    if not peaks:
        print("no peaks above threshold")
        return 0
    print(f"{'frequency_hz':>14} {'magnitude':>14} {'note':>6} {'cents':>8}")
    for peak in peaks:
        match = identify_note(peak.frequency_hz) if peak.frequency_hz > 0 else None
        note = match.note_name if match else "-"
        cents = f"{match.deviation_cents:+.2f}" if match else "-"
        print(
            f"{peak.frequency_hz:>14.4f} {peak.magnitude:>14.4f} {note:>6} {cents:>8}"
        )
    return 0


def cmd_equalize(args: argparse.Namespace) -> int:
    profile = preset(args.preset) if args.preset else load_profile(args.profile)
    signal, meta = read_wav(args.input)
    shaped = equalize(signal, profile)
    write_wav(shaped, args.output, bits_per_sample=meta.bits_per_sample)

    label = profile.name or "profile"
    if profile.bands:
        print(f"{label}:")
        for band in profile.bands:
            high = "top" if band.high_hz == float("inf") else f"{band.high_hz:g} Hz"
            print(f"  {band.low_hz:g} Hz .. {high}: gain {band.gain:g}")
    else:
        print(f"{label}: all gains 1")
    print(
        f"wrote {args.output}: {len(shaped)} frames at {shaped.sample_rate} Hz, "
        f"{meta.bits_per_sample}-bit"
    )
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    frequencies = _parse_floats(args.freqs, "--freqs")
    tones = [
        sine(freq, duration_s=args.duration, sample_rate=args.rate)
        for freq in frequencies
    ]
    signal = mix(tones, normalize=True)
    write_wav(signal, args.output, bits_per_sample=16)
    joined = ", ".join(f"{freq:g}" for freq in frequencies)
    print(
        f"wrote {args.output}: {joined} Hz, {len(signal)} frames at {args.rate} Hz"
    )
    return 0


@dataclass(frozen=True)
class BenchRow:
    n: int
    naive_s: float
    fft_s: float

    @property
    def ratio(self) -> float:
        return self.naive_s / self.fft_s


def run_bench(sizes: list[int], repeats: int = 5) -> list[BenchRow]:
    """Median wall-clock time of the naive transform vs the fast one.

    Both paths are run once untimed to settle caches, and checked
    against each other so the comparison cannot silently diverge.
    """
    if repeats < 1:
        raise DspError(f"repeats must be >= 1, got {repeats}")
    rng = np.random.default_rng(1234)
    rows = []
    for n in sizes:
        signal = Signal(rng.uniform(-1.0, 1.0, n), 44100)
        reference = dft_naive(signal, max_n=n).bins
        candidate = fft(signal).bins
        gap = float(np.max(np.abs(candidate - reference)))
        if gap > 1e-9 * n:
            raise DspError(
                f"transform mismatch at n={n}: naive and fast differ by {gap:.3e}"
            )
        naive_times = []
        fft_times = []
        for _ in range(repeats):
            start = time.perf_counter()
            dft_naive(signal, max_n=n)
            naive_times.append(time.perf_counter() - start)
            start = time.perf_counter()
            fft(signal)
            fft_times.append(time.perf_counter() - start)
        rows.append(
            BenchRow(
                n=n,
                naive_s=statistics.median(naive_times),
                fft_s=statistics.median(fft_times),
            )
        )
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = _parse_ints(args.sizes, "--sizes")
    for n in sizes:
        if n < 2 or n & (n - 1):
            raise UsageError(f"--sizes must be powers of two >= 2, got {n}")
    if args.repeats < 1:
        raise UsageError(f"--repeats must be >= 1, got {args.repeats}")

    rows = run_bench(sizes, repeats=args.repeats)
    print(f"{'n':>8} {'dft_naive_s':>14} {'fft_s':>14} {'ratio':>10}")
    for row in rows:
        print(
            f"{row.n:>8} {row.naive_s:>14.6f} {row.fft_s:>14.6f} {row.ratio:>10.1f}"
        )
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as handle:
            handle.write("n,dft_naive_s,fft_s,ratio\n")
            for row in rows:
                handle.write(
                    f"{row.n},{row.naive_s:.8g},{row.fft_s:.8g},{row.ratio:.8g}\n"
                )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dftkit",
        description="Transform-based audio analysis, equalization, and synthesis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser(
        "analyze", help="find spectral peaks and matching notes in a WAV file"
    )
    analyze.add_argument("input", help="input WAV file")
    analyze.add_argument(
        "--threshold",
        type=float,
        default=0.5,
        help="keep peaks at least this fraction of the largest (default 0.5)",
    )
    analyze.add_argument(
        "--separation-hz",
        type=float,
        default=20.0,
        help="minimum spacing between reported peaks (default 20)",
    )
    analyze.add_argument("--csv", help="also write the magnitude spectrum as CSV")
    analyze.add_argument(
        "--no-pad",
        action="store_true",
        help="skip zero-padding; the sample count must be a power of two",
    )
    analyze.set_defaults(func=cmd_analyze)

    eq = sub.add_parser("equalize", help="apply a band-gain profile to a WAV file")
    eq.add_argument("input", help="input WAV file")
    eq.add_argument("output", help="output WAV file")
    source = eq.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--preset", choices=PRESET_NAMES, help="built-in gain profile"
    )
    source.add_argument(
        "--profile", help="profile file with low_hz,high_hz,gain lines"
    )
    eq.set_defaults(func=cmd_equalize)

    synth = sub.add_parser("synth", help="write a WAV file of mixed sine tones")
    synth.add_argument("output", help="output WAV file")
    synth.add_argument(
        "--freqs", required=True, help="comma-separated tone frequencies in Hz"
    )
    synth.add_argument(
        "--duration", type=float, default=1.0, help="length in seconds (default 1.0)"
    )
    synth.add_argument(
        "--rate", type=int, default=44100, help="sample rate in Hz (default 44100)"
    )
    synth.set_defaults(func=cmd_synth)

    bench = sub.add_parser("bench", help="compare naive and fast transform timings")
    bench.add_argument(
        "--sizes",
        default="256,1024,4096",
        help="comma-separated transform lengths (default 256,1024,4096)",
    )
    bench.add_argument(
        "--repeats", type=int, default=5, help="timed runs per size (default 5)"
    )
    bench.add_argument("--csv", help="also write the timings as CSV")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DspError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
