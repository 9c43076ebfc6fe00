"""One-level 2-D discrete wavelet transform for db and sym wavelets."""

from . import _backend
from .filters import FilterBank, WaveletSpec, build_filters
from .transform import BANDS, SubbandSet, dwt2, idwt2

BACKEND = _backend.NAME

__all__ = [
    "BACKEND",
    "BANDS",
    "FilterBank",
    "SubbandSet",
    "WaveletSpec",
    "build_filters",
    "dwt2",
    "idwt2",
]
