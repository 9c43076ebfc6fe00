"""Embed, detect and remove marks in standalone rasters or in the images
of a PDF document, plus brightness/wavelet sweeps.

Everything the command line does is available here as plain functions.
"""

from __future__ import annotations

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import frequency, spatial
from .errors import UnsupportedCodec
from .metrics import hamming, psnr, relative_entropy
from .pdf import PdfDocument, PdfImageRef, extract_image, list_images, replace_images
from .raster import resample_nearest
from .wavelet import WaveletSpec

Params = spatial.SpatialParams | frequency.FreqParams

logger = logging.getLogger(__name__)


def embed(cover, mark, params: Params) -> np.ndarray:
    if isinstance(params, spatial.SpatialParams):
        return spatial.embed_spatial(cover, mark, params)
    return frequency.embed_frequency(cover, mark, params)


def detect(stego, params: Params, mark_dims=None) -> np.ndarray:
    """Extract the mark. ``mark_dims`` defaults to the carrier grid (spatial)
    or to the marked subband region (frequency)."""
    if isinstance(params, spatial.SpatialParams):
        found = spatial.detect_spatial(stego, params)
        return found if mark_dims is None else resample_nearest(found, mark_dims)
    if mark_dims is None:
        coeffs = frequency.region_coefficients(stego, params)
        return (coeffs >= params.brightness / 2).astype(np.uint8)
    return frequency.detect_frequency(stego, params, mark_dims)


def remove(stego, params: Params) -> np.ndarray:
    if not isinstance(params, spatial.SpatialParams):
        raise ValueError("only spatial (bit-plane) marks can be removed")
    return spatial.remove_spatial(stego, params)


# -- image selection -----------------------------------------------------

_SELECTOR = re.compile(r"^(\d+):(\d+)$")


def select_images(refs: list[PdfImageRef], selector: str = "all") -> list[PdfImageRef]:
    """``"all"`` (every supported image) or ``"page:index"``, both 0-based,
    where ``index`` counts images on that page in listing order."""
    if selector == "all":
        skipped = [r for r in refs if not r.supported]
        for r in skipped:
            logger.warning("skipping %s: unsupported encoding", r)
        return [r for r in refs if r.supported]
    m = _SELECTOR.match(selector)
    if not m:
        raise ValueError(f"image selector must be 'all' or 'page:index', got {selector!r}")
    page, index = int(m.group(1)), int(m.group(2))
    on_page = [r for r in refs if r.page_index == page]
    if index >= len(on_page):
        raise ValueError(f"page {page} has {len(on_page)} image(s); no index {index}")
    ref = on_page[index]
    if not ref.supported:
        raise UnsupportedCodec(f"{ref} uses an unsupported encoding")
    return [ref]


def image_label(ref: PdfImageRef, refs: list[PdfImageRef]) -> str:
    index = [r for r in refs if r.page_index == ref.page_index].index(ref)
    return f"{ref.page_index}:{index}"


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ThreadPoolExecutor(jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(i) for i in items]


@dataclass
class ImageResult:
    label: str
    ref: PdfImageRef | None
    before: np.ndarray
    after: np.ndarray

    @property
    def psnr(self) -> float:
        return psnr(self.before, self.after)


def embed_pdf(data: bytes, mark, params: Params, selector: str = "all", jobs: int = 1):
    """Watermark the selected images; returns ``(new_pdf_bytes, results)``."""
    doc = PdfDocument(data)
    refs = list_images(doc)
    chosen = select_images(refs, selector)

    def work(ref):
        cover = extract_image(doc, ref)
        return ImageResult(image_label(ref, refs), ref, cover, embed(cover, mark, params))

    results = _map(work, chosen, jobs)
    out = replace_images(doc, {r.ref: r.after for r in results})
    return out, results


def detect_pdf(data: bytes, params: Params, selector: str = "all", mark_dims=None, jobs: int = 1):
    """Returns ``[(label, ref, pattern), ...]`` in listing order."""
    doc = PdfDocument(data)
    refs = list_images(doc)
    chosen = select_images(refs, selector)

    def work(ref):
        return image_label(ref, refs), ref, detect(extract_image(doc, ref), params, mark_dims)

    return _map(work, chosen, jobs)


def remove_pdf(data: bytes, params: Params, selector: str = "all", jobs: int = 1):
    doc = PdfDocument(data)
    refs = list_images(doc)
    chosen = select_images(refs, selector)

    def work(ref):
        stego = extract_image(doc, ref)
        return ImageResult(image_label(ref, refs), ref, stego, remove(stego, params))

    results = _map(work, chosen, jobs)
    out = replace_images(doc, {r.ref: r.after for r in results})
    return out, results


# -- sweeps ----------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    brightness: float
    wavelet: str
    ham: float
    relent: float
    psnr: float


SWEEP_COLUMNS = ("a", "wavelet", "ham", "relent", "psnr")


def sweep(cover, mark, brightness_values, wavelets, fraction: float = 0.5, band: str = "cD", channel=None):
    """Embed, quantize to 8 bits and detect for every (wavelet, a) pair.

    ``ham`` and ``relent`` compare the mark with the detected mark, ``psnr``
    compares the cover with the stego image.
    """
    rows = []
    for w in wavelets:
        w = WaveletSpec.parse(w)
        for a in brightness_values:
            p = frequency.FreqParams(w, band, fraction, float(a), channel)
            stego = frequency.embed_frequency(cover, mark, p)
            found = frequency.detect_frequency(stego, p, np.shape(mark))
            rows.append(
                SweepRow(float(a), w.name, hamming(mark, found), relative_entropy(mark, found), psnr(cover, stego))
            )
    return rows


def format_sweep(rows: list[SweepRow], delimiter: str = "\t") -> str:
    lines = [delimiter.join(SWEEP_COLUMNS)]
    for r in rows:
        p = "inf" if r.psnr == float("inf") else f"{r.psnr:.6f}"
        lines.append(delimiter.join([f"{r.brightness:g}", r.wavelet, f"{r.ham:.6f}", f"{r.relent:.6f}", p]))
    return "\n".join(lines) + "\n"


def parse_range(text: str) -> list[float]:
    """``"20:300:20"`` (inclusive start:stop:step) or ``"20,50,150"``."""
    if ":" in text:
        parts = [float(x) for x in text.split(":")]
        if len(parts) == 2:
            parts.append(1.0)
        start, stop, step = parts
        if step <= 0:
            raise ValueError("range step must be positive")
        n = int(np.floor((stop - start) / step + 1e-9)) + 1
        return [start + i * step for i in range(max(n, 0))]
    return [float(x) for x in text.split(",") if x.strip()]
