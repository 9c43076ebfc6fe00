"""Reversible watermarking of raster images inside PDF documents."""

from .errors import (
    DecodeError,
    DimensionMismatch,
    MalformedPdf,
    NonBinaryInput,
    PdfmarkError,
    PlaneOutOfRange,
    RegionTooSmall,
    UnsupportedCodec,
    UnsupportedWavelet,
)
from .frequency import FreqParams, detect_frequency, embed_frequency, select_region
from .metrics import DistortionReport, compare, hamming, psnr, relative_entropy, rmse
from .raster import ChannelPolicy
from .spatial import SpatialParams, detect_spatial, embed_spatial, remove_spatial
from .wavelet import SubbandSet, WaveletSpec, dwt2, idwt2

__version__ = "0.1.0"

__all__ = [
    "ChannelPolicy",
    "DecodeError",
    "DimensionMismatch",
    "DistortionReport",
    "FreqParams",
    "MalformedPdf",
    "NonBinaryInput",
    "PdfmarkError",
    "PlaneOutOfRange",
    "RegionTooSmall",
    "SpatialParams",
    "SubbandSet",
    "UnsupportedCodec",
    "UnsupportedWavelet",
    "WaveletSpec",
    "compare",
    "detect_frequency",
    "detect_spatial",
    "dwt2",
    "embed_frequency",
    "embed_spatial",
    "hamming",
    "idwt2",
    "psnr",
    "relative_entropy",
    "remove_spatial",
    "rmse",
    "select_region",
]
