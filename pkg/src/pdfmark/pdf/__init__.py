"""Direct PDF image-stream extraction and lossless reinsertion."""

from .document import PdfDocument
from .images import (
    DCT_JPEG,
    FLATE_RAW,
    GRAY8,
    OTHER,
    RGB24,
    PdfImageRef,
    RoundtripResult,
    extract_image,
    list_images,
    replace_image,
    replace_images,
    roundtrip_check,
)
from .objects import Name, Ref, Stream

__all__ = [
    "DCT_JPEG",
    "FLATE_RAW",
    "GRAY8",
    "OTHER",
    "RGB24",
    "Name",
    "PdfDocument",
    "PdfImageRef",
    "Ref",
    "RoundtripResult",
    "Stream",
    "extract_image",
    "list_images",
    "replace_image",
    "replace_images",
    "roundtrip_check",
]
