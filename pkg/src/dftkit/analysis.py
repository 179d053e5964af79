"""Spectrum inspection: magnitudes, peak picking, and pitch naming.

Only the first half of the spectrum is physically meaningful for real
input, so everything here works on bins 0 through n/2 inclusive.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .transform import DspError, Signal, Spectrum, fft, pad_to_pow2

__all__ = [
    "A4_HZ",
    "NOTE_NAMES",
    "MagnitudeSpectrum",
    "Peak",
    "NoteMatch",
    "magnitude_spectrum",
    "find_peaks",
    "identify_note",
    "analyze",
    "write_spectrum_csv",
]

A4_HZ = 440.0

# Twelve-tone equal temperament, ascending from C.
NOTE_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")


@dataclass(frozen=True, eq=False)
class MagnitudeSpectrum:
    """Bin magnitudes over the non-negative frequencies of a transform.

    frequencies[k] = k * sample_rate / source_n for k = 0 .. source_n // 2.
    source_n is the full transform length the half-spectrum came from.
    """

    frequencies: np.ndarray
    magnitudes: np.ndarray
    source_n: int
    sample_rate: int

    def __len__(self) -> int:
        return int(self.magnitudes.size)

    @property
    def bin_width_hz(self) -> float:
        return self.sample_rate / self.source_n


@dataclass(frozen=True)
class Peak:
    """A local maximum of the magnitude spectrum."""

    bin_index: int
    frequency_hz: float
    magnitude: float


@dataclass(frozen=True)
class NoteMatch:
    """Nearest equal-temperament pitch to a frequency."""

    note_name: str
    reference_hz: float
    deviation_cents: float


def magnitude_spectrum(spectrum: Spectrum) -> MagnitudeSpectrum:
    """Magnitudes of bins 0 .. n//2 with their physical frequencies."""
    n = len(spectrum)
    half = n // 2 + 1
    k = np.arange(half)
    return MagnitudeSpectrum(
        frequencies=k * (spectrum.sample_rate / n),
        magnitudes=np.abs(spectrum.bins[:half]),
        source_n=n,
        sample_rate=spectrum.sample_rate,
    )


def find_peaks(
    mag: MagnitudeSpectrum,
    relative_threshold: float = 0.5,
    min_separation_hz: float = 20.0,
) -> list[Peak]:
    """Strict local maxima above a fraction of the global maximum.

    Candidates closer than min_separation_hz to an already-kept larger
    peak are dropped (ties keep the lower bin). The result is sorted by
    ascending frequency and is deterministic for a given input.
    """
    if not 0.0 < relative_threshold <= 1.0:
        raise DspError(
            f"relative threshold must be in (0, 1], got {relative_threshold}"
        )
    if min_separation_hz < 0.0:
        raise DspError(f"minimum separation must be >= 0, got {min_separation_hz}")
    values = mag.magnitudes
    count = values.size
    ceiling = float(values.max(initial=0.0))
    if ceiling <= 0.0:
        return []
    floor = relative_threshold * ceiling

    candidates: list[tuple[float, int]] = []
    for k in range(count):
        if values[k] < floor:
            continue
        left_ok = k == 0 or values[k] > values[k - 1]
        right_ok = k == count - 1 or values[k] > values[k + 1]
        if left_ok and right_ok:
            candidates.append((-float(values[k]), k))
    candidates.sort()

    kept: list[int] = []
    for _, k in candidates:
        freq = mag.frequencies[k]
        if all(
            abs(freq - mag.frequencies[other]) >= min_separation_hz for other in kept
        ):
            kept.append(k)
    kept.sort()
    return [
        Peak(
            bin_index=k,
            frequency_hz=float(mag.frequencies[k]),
            magnitude=float(mag.magnitudes[k]),
        )
        for k in kept
    ]


def identify_note(frequency_hz: float) -> NoteMatch | None:
    """Snap a frequency to the nearest equal-temperament note.

    Returns None when the frequency sits more than 50 cents from every
    note (cannot happen on the standard grid, but guards a changed one).
    """
    if not math.isfinite(frequency_hz) or frequency_hz <= 0.0:
        raise DspError(f"frequency must be positive and finite, got {frequency_hz}")
    semitones = round(12.0 * math.log2(frequency_hz / A4_HZ))
    midi = 69 + semitones
    reference = A4_HZ * 2.0 ** (semitones / 12.0)
    cents = 1200.0 * math.log2(frequency_hz / reference)
    if abs(cents) > 50.0:
        return None
    name = f"{NOTE_NAMES[midi % 12]}{midi // 12 - 1}"
    return NoteMatch(note_name=name, reference_hz=reference, deviation_cents=cents)


def analyze(
    signal: Signal,
    relative_threshold: float = 0.5,
    min_separation_hz: float = 20.0,
    *,
    pad: bool = True,
) -> list[tuple[Peak, NoteMatch | None]]:
    """Full pipeline: transform, pick peaks, and name their pitches.

    With pad=True the signal is zero-extended to a power of two first;
    with pad=False the length must already be a power of two.
    """
    prepared = pad_to_pow2(signal) if pad else signal
    mag = magnitude_spectrum(fft(prepared))
    peaks = find_peaks(mag, relative_threshold, min_separation_hz)
    return [
        (peak, identify_note(peak.frequency_hz) if peak.frequency_hz > 0.0 else None)
        for peak in peaks
    ]


def write_spectrum_csv(mag: MagnitudeSpectrum, path) -> None:
    """Dump a half-spectrum as CSV rows of bin, frequency_hz, magnitude."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["bin", "frequency_hz", "magnitude"])
        for k in range(len(mag)):
            writer.writerow(
                [k, f"{mag.frequencies[k]:.8g}", f"{mag.magnitudes[k]:.8g}"]
            )
