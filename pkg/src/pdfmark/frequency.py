"""DWT watermarking: overwrite part of one subband with a scaled binary mark.

The first ``floor(u * rows)`` rows of the chosen band (all columns) are
replaced by ``a * M``, with ``M`` nearest-neighbour resampled to exactly fill
that region. Detection is non-blind: it needs the same parameters and the
mark size, and thresholds the region coefficients at ``a / 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RegionTooSmall
from .raster import (
    BLUE,
    ChannelPolicy,
    as_pattern,
    as_raster,
    channel_view,
    resample_nearest,
)
from .wavelet import BANDS, WaveletSpec, dwt2, idwt2

# brightness at or above which a mark is treated as visible for channel defaults
VISIBLE_BRIGHTNESS = 100.0


@dataclass(frozen=True)
class FreqParams:
    wavelet: WaveletSpec = WaveletSpec("db", 1)
    band: str = "cD"
    fraction: float = 0.5
    brightness: float = 20.0
    channel: ChannelPolicy | None = None

    def __post_init__(self):
        object.__setattr__(self, "wavelet", WaveletSpec.parse(self.wavelet))
        if self.band not in BANDS:
            raise ValueError(f"band must be one of {BANDS}, got {self.band!r}")
        if not 0 < self.fraction <= 1:
            raise ValueError(f"fraction must be in (0, 1], got {self.fraction}")
        if not self.brightness > 0:
            raise ValueError(f"brightness must be positive, got {self.brightness}")

    @property
    def policy(self) -> ChannelPolicy:
        if self.channel is not None:
            return self.channel
        if self.brightness >= VISIBLE_BRIGHTNESS:
            return ChannelPolicy.all()
        return ChannelPolicy.single(BLUE)


@dataclass(frozen=True)
class RegionSpec:
    row_count: int
    col_count: int

    @property
    def size(self) -> int:
        return self.row_count * self.col_count


def select_region(band_dims, u: float, mark_dims=None) -> RegionSpec:
    """Top ``floor(u * rows)`` rows of the band, every column.

    ``mark_dims`` does not affect the layout; the mark is resampled to fit.
    """
    rows, cols = int(band_dims[0]), int(band_dims[1])
    if rows <= 0 or cols <= 0:
        raise RegionTooSmall(f"empty band {band_dims}")
    if not 0 < u <= 1:
        raise ValueError(f"fraction must be in (0, 1], got {u}")
    # tolerance keeps e.g. 0.29 * 100 from flooring to 28
    count = min(rows, math.floor(u * rows + 1e-9))
    if count == 0:
        raise RegionTooSmall(f"fraction {u} of {rows} band rows is less than one row")
    return RegionSpec(count, cols)


def _band_dims(shape):
    return (shape[0] + 1) // 2, (shape[1] + 1) // 2


def embed_frequency(cover, mark, p: FreqParams, quantize: bool = True) -> np.ndarray:
    """Watermark ``cover`` in the DWT domain.

    With ``quantize`` (the default) the result is clamped to [0, 255] and
    rounded to ``uint8``, as it would be when stored as an 8-bit image.
    Otherwise the real-valued inverse transform is returned.
    """
    cover = as_raster(cover)
    mark = as_pattern(mark)
    region = select_region(_band_dims(cover.shape), p.fraction, mark.shape)
    payload = p.brightness * resample_nearest(mark, (region.row_count, region.col_count))

    out = cover.astype(np.float64)
    for c in p.policy.channels(cover):
        bands = dwt2(channel_view(cover, c), p.wavelet)
        target = bands.band(p.band).copy()
        target[: region.row_count, :] = payload
        channel_view(out, c)[...] = idwt2(bands.replace(**{p.band: target}), p.wavelet)
    if not quantize:
        return out
    return np.rint(np.clip(out, 0, 255)).astype(np.uint8)


def region_coefficients(stego, p: FreqParams) -> np.ndarray:
    """Band coefficients inside the marked region, averaged over the marked channels."""
    stego = np.asarray(stego, dtype=np.float64)
    region = select_region(_band_dims(stego.shape), p.fraction)
    chans = p.policy.channels(stego)
    acc = np.zeros((region.row_count, region.col_count))
    for c in chans:
        bands = dwt2(channel_view(stego, c), p.wavelet)
        acc += bands.band(p.band)[: region.row_count, :]
    return acc / len(chans)


def detect_frequency(stego, p: FreqParams, mark_dims) -> np.ndarray:
    """Recover the mark: coefficients ``>= a / 2`` read as 1."""
    coeffs = region_coefficients(stego, p)
    bits = (coeffs >= p.brightness / 2).astype(np.uint8)
    return resample_nearest(bits, mark_dims)
