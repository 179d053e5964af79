"""Frequency-domain equalization.

A gain profile is a list of non-overlapping frequency bands, each with a
flat gain. Applying it diagonalizes to: transform, scale each bin by the
gain of the band containing its frequency, transform back. Mirrored bins
get mirrored gains so the output stays real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .transform import (
    EPSILON,
    DspError,
    Signal,
    fft,
    pad_to_pow2,
    _ifft_array,
)

__all__ = [
    "Band",
    "GainProfile",
    "GainVector",
    "PRESET_NAMES",
    "build_gain_vector",
    "equalize",
    "preset",
    "parse_profile",
    "load_profile",
]


@dataclass(frozen=True)
class Band:
    """Half-open frequency interval [low_hz, high_hz) with a flat gain."""

    low_hz: float
    high_hz: float
    gain: float


@dataclass(frozen=True, eq=False)
class GainProfile:
    """Ordered, non-overlapping bands; frequencies outside all bands pass through."""

    bands: tuple[Band, ...]
    name: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "bands", tuple(self.bands))
        previous_high = 0.0
        for band in self.bands:
            if not (band.low_hz >= 0.0 and band.high_hz > band.low_hz):
                raise DspError(
                    f"band [{band.low_hz}, {band.high_hz}) is not a valid interval"
                )
            if not (math.isfinite(band.gain) and band.gain >= 0.0):
                raise DspError(f"band gain must be finite and >= 0, got {band.gain}")
            if band.low_hz < previous_high:
                raise DspError(
                    f"band starting at {band.low_hz} Hz overlaps or precedes the "
                    "previous band; bands must be sorted and disjoint"
                )
            previous_high = band.high_hz

    def gain_at(self, frequency_hz: float) -> float:
        """Gain applied at a frequency: band gain inside a band, 1.0 outside."""
        for band in self.bands:
            if band.low_hz <= frequency_hz < band.high_hz:
                return band.gain
        return 1.0


@dataclass(frozen=True, eq=False)
class GainVector:
    """Per-bin gains for a transform of length n, mirror-symmetric in k and n-k."""

    values: np.ndarray
    sample_rate: int


def build_gain_vector(profile: GainProfile, n: int, sample_rate: int) -> GainVector:
    """Evaluate a profile on the bin grid of an n-point transform.

    Bins 0 .. n//2 take the gain of the band containing k * rate / n;
    bins above n//2 copy their mirror partner so that a real signal
    stays real after the round trip.
    """
    if n < 1:
        raise DspError(f"transform length must be >= 1, got {n}")
    if sample_rate < 1:
        raise DspError(f"sample rate must be >= 1, got {sample_rate}")
    half = n // 2 + 1
    gains = np.ones(n, dtype=np.float64)
    for k in range(half):
        gains[k] = profile.gain_at(k * sample_rate / n)
    if n > 2:
        gains[half:] = gains[1 : (n - 1) // 2 + 1][::-1]
    return GainVector(values=gains, sample_rate=sample_rate)


def equalize(signal: Signal, profile: GainProfile) -> Signal:
    """Apply a gain profile to a signal in the frequency domain.

    The signal is zero-padded to a power of two, transformed, scaled bin
    by bin, inverse-transformed, truncated back to the original length,
    and finally clamped to [-1, 1].
    """
    original_n = len(signal)
    padded = pad_to_pow2(signal)
    spectrum = fft(padded)
    gains = build_gain_vector(profile, len(padded), signal.sample_rate)
    shaped = spectrum.bins * gains.values

    time = _ifft_array(shaped)
    reference = float(np.max(np.abs(time.real))) if time.size else 0.0
    residue = float(np.max(np.abs(time.imag)))
    if residue > EPSILON * max(reference, 1.0):
        raise DspError(
            f"equalized spectrum lost Hermitian symmetry (residue {residue:.3e})"
        )
    samples = np.clip(time.real[:original_n], -1.0, 1.0)
    return Signal(samples, signal.sample_rate)


# Five bands covering lows through presence; the top band is open-ended.
_BAND_EDGES = (0.0, 160.0, 500.0, 800.0, 8000.0, math.inf)
_TREBLE_GAINS = (0.1, 0.25, 0.5, 1.0, 1.0)

PRESET_NAMES = ("identity", "treble", "bass-boost")


def preset(name: str) -> GainProfile:
    """A named built-in profile.

    identity passes everything through, treble steps the low bands down
    (0.1, 0.25, 0.5, 1, 1 from lowest to highest), bass-boost applies
    the same ladder with the band order reversed.
    """
    if name == "identity":
        return GainProfile(bands=(), name="identity")
    if name == "treble":
        gains = _TREBLE_GAINS
    elif name == "bass-boost":
        gains = tuple(reversed(_TREBLE_GAINS))
    else:
        raise DspError(
            f"unknown preset {name!r}; valid presets: {', '.join(PRESET_NAMES)}"
        )
    bands = tuple(
        Band(low_hz=low, high_hz=high, gain=gain)
        for low, high, gain in zip(_BAND_EDGES, _BAND_EDGES[1:], gains)
    )
    return GainProfile(bands=bands, name=name)


def parse_profile(text: str, name: str | None = None) -> GainProfile:
    """Parse a profile from lines of low_hz,high_hz,gain.

    Blank lines are skipped and # starts a comment anywhere on a line.
    """
    bands = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [part.strip() for part in line.split(",")]
        if len(parts) != 3:
            raise DspError(
                f"profile line {lineno}: expected low_hz,high_hz,gain, got {raw!r}"
            )
        try:
            low, high, gain = (float(part) for part in parts)
        except ValueError:
            raise DspError(
                f"profile line {lineno}: could not parse numbers from {raw!r}"
            ) from None
        bands.append(Band(low_hz=low, high_hz=high, gain=gain))
    bands.sort(key=lambda band: band.low_hz)
    return GainProfile(bands=tuple(bands), name=name)


def load_profile(path) -> GainProfile:
    """Read a profile file (see parse_profile for the line format)."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_profile(text, name=str(path))
