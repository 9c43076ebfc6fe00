"""One-level periodized 2-D DWT.

Subband convention (fixed for the whole package):

* ``cA``: low-pass along both axes
* ``cH``: high-pass along axis 0 (rows), low-pass along axis 1
* ``cV``: low-pass along axis 0, high-pass along axis 1 (columns)
* ``cD``: high-pass along both axes

For the Haar wavelet on ``[[a, b], [c, d]]`` this gives
``cA = (a+b+c+d)/2``, ``cH = (a+b-c-d)/2``, ``cV = (a-b+c-d)/2`` and
``cD = (a-b-c+d)/2``. Odd dimensions are padded by repeating the last
row/column; ``original_dims`` records the size to crop back to.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DimensionMismatch
from . import _backend
from .filters import WaveletSpec, build_filters

BANDS = ("cA", "cH", "cV", "cD")


@dataclass(frozen=True)
class SubbandSet:
    cA: np.ndarray
    cH: np.ndarray
    cV: np.ndarray
    cD: np.ndarray
    original_dims: tuple[int, int]

    def band(self, name: str) -> np.ndarray:
        if name not in BANDS:
            raise KeyError(name)
        return getattr(self, name)

    def replace(self, **bands) -> SubbandSet:
        fields = {b: getattr(self, b) for b in BANDS}
        fields.update(bands)
        return SubbandSet(original_dims=self.original_dims, **fields)

    def energy(self) -> float:
        return float(sum(np.sum(getattr(self, b) ** 2) for b in BANDS))


def _pad_even(x):
    rows, cols = x.shape
    if rows % 2:
        x = np.concatenate([x, x[-1:, :]], axis=0)
    if cols % 2:
        x = np.concatenate([x, x[:, -1:]], axis=1)
    return np.ascontiguousarray(x, dtype=np.float64)


def dwt2(image, spec: WaveletSpec | str) -> SubbandSet:
    x = np.asarray(image, dtype=np.float64)
    if x.ndim != 2 or x.size == 0:
        raise ValueError(f"dwt2 expects a non-empty 2-D array, got shape {x.shape}")
    fb = build_filters(spec)
    dims = x.shape
    x = _pad_even(x)
    lo_c, hi_c = _backend.analysis(x, fb.rec_lo, fb.rec_hi)
    aa, da = _backend.analysis(np.ascontiguousarray(lo_c.T), fb.rec_lo, fb.rec_hi)
    ad, dd = _backend.analysis(np.ascontiguousarray(hi_c.T), fb.rec_lo, fb.rec_hi)
    return SubbandSet(cA=aa.T, cH=da.T, cV=ad.T, cD=dd.T, original_dims=(int(dims[0]), int(dims[1])))


def idwt2(bands: SubbandSet, spec: WaveletSpec | str) -> np.ndarray:
    shapes = {np.shape(bands.band(b)) for b in BANDS}
    if len(shapes) != 1:
        raise DimensionMismatch(f"subbands disagree in shape: {sorted(shapes)}")
    (shape,) = shapes
    if bands.original_dims is None:
        raise DimensionMismatch("original_dims missing")
    rows, cols = bands.original_dims
    if len(shape) != 2 or shape != ((rows + 1) // 2, (cols + 1) // 2):
        raise DimensionMismatch(
            f"band shape {shape} inconsistent with original dims {bands.original_dims}"
        )
    fb = build_filters(spec)

    def cols_t(a):
        return np.ascontiguousarray(np.asarray(a, dtype=np.float64).T)

    lo_c = _backend.synthesis(cols_t(bands.cA), cols_t(bands.cH), fb.rec_lo, fb.rec_hi)
    hi_c = _backend.synthesis(cols_t(bands.cV), cols_t(bands.cD), fb.rec_lo, fb.rec_hi)
    x = _backend.synthesis(
        np.ascontiguousarray(lo_c.T), np.ascontiguousarray(hi_c.T), fb.rec_lo, fb.rec_hi
    )
    return x[:rows, :cols]
