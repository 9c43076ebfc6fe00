"""Read and write standalone image files (PNG and anything Pillow opens)."""

from __future__ import annotations

import io
import logging

import numpy as np
from PIL import Image

from .raster import as_pattern, as_raster, binarize

logger = logging.getLogger(__name__)


def decode_image(data: bytes) -> np.ndarray:
    """Decode image bytes to an 8-bit gray or RGB raster."""
    with Image.open(io.BytesIO(data)) as im:
        if im.mode in ("L", "RGB"):
            return np.asarray(im).copy()
        if im.mode in ("1", "LA", "I;16", "I", "F"):
            if im.mode not in ("1", "LA"):
                logger.warning("image mode %s reduced to 8-bit gray", im.mode)
            return np.asarray(im.convert("L")).copy()
        logger.warning("image mode %s converted to RGB", im.mode)
        return np.asarray(im.convert("RGB")).copy()


def load_image(path) -> np.ndarray:
    with open(path, "rb") as fh:
        return decode_image(fh.read())


def load_mark(path, threshold: int = 128) -> np.ndarray:
    """Load a watermark file as a 0/1 pattern (gray ``>= threshold`` is 1)."""
    return binarize(load_image(path), threshold)


def encode_png(img) -> bytes:
    """8-bit gray or RGB PNG, not interlaced."""
    img = as_raster(img)
    buf = io.BytesIO()
    Image.fromarray(img).save(buf, format="PNG")
    return buf.getvalue()


def encode_mark_png(pattern) -> bytes:
    return encode_png(as_pattern(pattern) * np.uint8(255))


def is_pdf(data: bytes) -> bool:
    return data[:1024].find(b"%PDF-") >= 0
