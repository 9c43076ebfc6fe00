"""Helpers shared by the embedding schemes: 8-bit rasters, binary patterns,
channel selection and nearest-neighbour resampling.

Rasters are numpy ``uint8`` arrays shaped ``(height, width)`` for gray or
``(height, width, 3)`` for RGB. Binary patterns are ``uint8`` arrays of 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonBinaryInput

BLUE = 2
_CHANNEL_NAMES = {"red": 0, "r": 0, "green": 1, "g": 1, "blue": 2, "b": 2}


def as_raster(img) -> np.ndarray:
    """Validate and return ``img`` as an 8-bit gray or RGB raster."""
    arr = np.asarray(img)
    if arr.ndim == 3 and arr.shape[2] == 1:
        arr = arr[:, :, 0]
    if arr.ndim not in (2, 3) or (arr.ndim == 3 and arr.shape[2] != 3):
        raise ValueError(f"expected (H, W) or (H, W, 3) raster, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("empty raster")
    if arr.dtype != np.uint8:
        if np.issubdtype(arr.dtype, np.floating) or arr.min() < 0 or arr.max() > 255:
            raise ValueError(f"raster must hold 8-bit samples, got dtype {arr.dtype}")
        arr = arr.astype(np.uint8)
    return arr


def as_pattern(mark) -> np.ndarray:
    """Return ``mark`` as a 2-D 0/1 ``uint8`` array, rejecting other values."""
    arr = np.asarray(mark)
    if arr.dtype == bool:
        return arr.astype(np.uint8)
    if arr.ndim != 2:
        raise NonBinaryInput(f"binary pattern must be 2-D, got shape {arr.shape}")
    if not np.isin(arr, (0, 1)).all():
        raise NonBinaryInput("pattern contains values other than 0 and 1")
    return arr.astype(np.uint8)


def binarize(img, threshold: int = 128) -> np.ndarray:
    """Threshold a gray or RGB image into a 0/1 pattern (``>= threshold`` is 1)."""
    arr = np.asarray(img)
    if arr.ndim == 3:
        arr = arr[:, :, :3].mean(axis=2)
    return (arr >= threshold).astype(np.uint8)


def resample_nearest(arr, shape) -> np.ndarray:
    """Nearest-neighbour resample of the first two axes to ``shape``.

    Samples at pixel centres, so resampling up and then back down to the
    original size returns the input unchanged.
    """
    arr = np.asarray(arr)
    rows, cols = int(shape[0]), int(shape[1])
    if arr.shape[:2] == (rows, cols):
        return arr
    ri = ((np.arange(rows) + 0.5) * arr.shape[0] / rows).astype(np.intp)
    ci = ((np.arange(cols) + 0.5) * arr.shape[1] / cols).astype(np.intp)
    return arr[np.minimum(ri, arr.shape[0] - 1)][:, np.minimum(ci, arr.shape[1] - 1)]


@dataclass(frozen=True)
class ChannelPolicy:
    """Which channels of an RGB raster carry the mark.

    ``index=None`` means every channel. Gray rasters ignore the policy.
    """

    index: int | None = None

    @classmethod
    def single(cls, index: int) -> ChannelPolicy:
        if index not in (0, 1, 2):
            raise ValueError(f"channel index must be 0, 1 or 2, got {index}")
        return cls(index)

    @classmethod
    def all(cls) -> ChannelPolicy:
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> ChannelPolicy:
        text = text.strip().lower()
        if text == "all":
            return cls.all()
        if text in _CHANNEL_NAMES:
            return cls.single(_CHANNEL_NAMES[text])
        return cls.single(int(text))

    def channels(self, img: np.ndarray) -> list[int]:
        if img.ndim == 2:
            return [0]
        return [0, 1, 2] if self.index is None else [self.index]

    def __str__(self):
        return "all" if self.index is None else str(self.index)


def channel_view(img: np.ndarray, c: int) -> np.ndarray:
    return img if img.ndim == 2 else img[:, :, c]


def majority(planes: list[np.ndarray]) -> np.ndarray:
    if len(planes) == 1:
        return planes[0]
    votes = np.sum(planes, axis=0)
    return (2 * votes > len(planes)).astype(np.uint8)
