"""Bit-plane watermarking with a duplicated plane.

A significant plane ``V`` of the cover is copied into a low plane ``U``.
The mark is XOR-ed into plane ``V``; because plane ``U`` keeps the original
copy, detection is blind (``plane V xor plane U``) and a visible mark can be
removed by copying plane ``U`` back into plane ``V``. Plane numbering is
1 (least significant) to 8.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import PlaneOutOfRange
from .raster import (
    BLUE,
    ChannelPolicy,
    as_pattern,
    as_raster,
    channel_view,
    majority,
    resample_nearest,
)

logger = logging.getLogger(__name__)

VISIBLE_PLANE = 7


def _check_plane(plane):
    if not isinstance(plane, (int, np.integer)) or not 1 <= plane <= 8:
        raise PlaneOutOfRange(f"bit plane must be in 1..8, got {plane!r}")


@dataclass(frozen=True)
class SpatialParams:
    v: int = 3
    u: int = 1
    channel: ChannelPolicy | None = field(default=None)

    def __post_init__(self):
        _check_plane(self.v)
        _check_plane(self.u)
        if not self.v > self.u:
            raise PlaneOutOfRange(f"embedding plane V={self.v} must be above copy plane U={self.u}")

    @classmethod
    def invisible(cls, channel=None):
        return cls(3, 1, channel)

    @classmethod
    def visible(cls, channel=None):
        return cls(7, 2, channel)

    @property
    def policy(self) -> ChannelPolicy:
        # visible marks go in every channel so they read as gray
        if self.channel is not None:
            return self.channel
        if self.v >= VISIBLE_PLANE:
            return ChannelPolicy.all()
        return ChannelPolicy.single(BLUE)


def bitplane_get(img, plane: int, channel: int | None = None) -> np.ndarray:
    """Bit ``plane - 1`` of every sample as a 0/1 array."""
    _check_plane(plane)
    arr = as_raster(img)
    if channel is not None and arr.ndim == 3:
        arr = arr[:, :, channel]
    return (arr >> np.uint8(plane - 1)) & np.uint8(1)


def _per_channel(img, policy, fn):
    out = img.copy()
    for c in policy.channels(img):
        view = channel_view(out, c)
        view[...] = fn(view)
    return out


def _set_plane(x, plane, bits):
    mask = np.uint8(1 << (plane - 1))
    return (x & ~mask) | (bits.astype(np.uint8) << np.uint8(plane - 1))


def duplicate_plane(cover, p: SpatialParams) -> np.ndarray:
    """Copy plane ``V`` into plane ``U``, leaving every other plane alone."""
    cover = as_raster(cover)

    def dup(x):
        return _set_plane(x, p.u, (x >> np.uint8(p.v - 1)) & 1)

    return _per_channel(cover, p.policy, dup)


def fit_mark(mark, shape) -> np.ndarray:
    mark = as_pattern(mark)
    if mark.shape != tuple(shape[:2]):
        logger.warning("mark %s resampled to %s", mark.shape, tuple(shape[:2]))
        mark = resample_nearest(mark, shape[:2])
    return mark


def embed_spatial(cover, mark, p: SpatialParams) -> np.ndarray:
    """Duplicate plane ``V`` into ``U`` then XOR the mark into plane ``V``."""
    cover = as_raster(cover)
    mark = fit_mark(mark, cover.shape)
    stego = duplicate_plane(cover, p)

    def embed(x):
        bv = (x >> np.uint8(p.v - 1)) & 1
        return _set_plane(x, p.v, bv ^ mark)

    return _per_channel(stego, p.policy, embed)


def detect_spatial(stego, p: SpatialParams) -> np.ndarray:
    """Blind detection: plane ``V`` xor plane ``U``.

    With several marked channels the per-channel results are combined by
    majority vote.
    """
    stego = as_raster(stego)
    planes = []
    for c in p.policy.channels(stego):
        x = channel_view(stego, c)
        planes.append(((x >> np.uint8(p.v - 1)) ^ (x >> np.uint8(p.u - 1))) & np.uint8(1))
    return majority(planes)


def remove_spatial(stego, p: SpatialParams) -> np.ndarray:
    """Restore plane ``V`` from its copy in plane ``U`` and clear plane ``U``.

    The result equals the original cover except that plane ``U`` is zero.
    """
    stego = as_raster(stego)

    def remove(x):
        bu = (x >> np.uint8(p.u - 1)) & 1
        return _set_plane(_set_plane(x, p.u, np.zeros_like(bu)), p.v, bu)

    return _per_channel(stego, p.policy, remove)


def removal_psnr(cover, p: SpatialParams) -> float:
    """Predicted PSNR between a cover and its restored copy.

    Only plane ``U`` differs, so the squared error per sample is
    ``(2**(U-1))**2`` on the fraction ``f`` of samples with that bit set:
    ``10 log10(255**2 / (4**(U-1) f))``.
    """
    cover = as_raster(cover)
    chans = p.policy.channels(cover)
    bits = np.stack([channel_view(cover, c) for c in chans])
    frac = np.count_nonzero((bits >> np.uint8(p.u - 1)) & 1) / bits.size
    # untouched channels contribute zero error
    frac *= len(chans) / (1 if cover.ndim == 2 else cover.shape[2])
    if frac == 0:
        return float("inf")
    return float(10 * np.log10(255.0**2 / (4.0 ** (p.u - 1) * frac)))


def plane_removed_psnr(cover, plane: int) -> float:
    """PSNR between ``cover`` and ``cover`` with one bit plane cleared."""
    from .metrics import psnr

    _check_plane(plane)
    cover = as_raster(cover)
    mask = np.uint8(~(1 << (plane - 1)) & 0xFF)
    return psnr(cover, cover & mask)
