"""Enumerate, extract and losslessly replace Image XObjects.

Replacement always writes the pixels back as an uncompressed-then-deflated
8-bit stream (``flate-raw``), whatever the original codec was, so that
extract -> replace -> extract returns identical samples.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from ..errors import DecodeError, DimensionMismatch, UnsupportedCodec
from ..raster import as_raster
from . import filters
from .document import PdfDocument
from .objects import Name, Ref, Stream
from .writer import incremental_update

FLATE_RAW = "flate-raw"
DCT_JPEG = "dct-jpeg"
OTHER = "other"

GRAY8 = "gray8"
RGB24 = "rgb24"

_GRAY_NAMES = {"DeviceGray", "G", "CalGray"}
_RGB_NAMES = {"DeviceRGB", "RGB", "CalRGB"}
_LOSSLESS = {"FlateDecode", "LZWDecode", "ASCIIHexDecode", "ASCII85Decode", "RunLengthDecode"}
_DROP_ON_REPLACE = ("Filter", "DecodeParms", "DP", "Length", "DL", "F", "FFilter", "FDecodeParms")


@dataclass(frozen=True)
class PdfImageRef:
    page_index: int
    object_id: Ref
    codec: str
    width: int
    height: int
    colorspace: str
    bits_per_component: int
    name: str = ""

    @property
    def channels(self) -> int:
        return 3 if self.colorspace == RGB24 else 1

    @property
    def supported(self) -> bool:
        return self.codec != OTHER

    def __str__(self):
        return (
            f"page {self.page_index} obj {self.object_id.num} {self.object_id.gen} "
            f"{self.width}x{self.height} {self.colorspace} {self.codec}"
        )


def as_document(pdf) -> PdfDocument:
    return pdf if isinstance(pdf, PdfDocument) else PdfDocument(pdf)


def _colorspace(doc: PdfDocument, cs) -> str:
    cs = doc.resolve(cs)
    if isinstance(cs, list) and cs:
        family = doc.resolve(cs[0])
        if family == "ICCBased" and len(cs) > 1:
            profile = doc.resolve(cs[1])
            n = doc.resolve(profile.dict.get("N")) if isinstance(profile, Stream) else None
            return {1: GRAY8, 3: RGB24}.get(n, OTHER)
        if len(cs) == 1 or family in ("CalGray", "CalRGB"):
            cs = family
        else:
            return OTHER
    if isinstance(cs, str):
        if cs in _GRAY_NAMES:
            return GRAY8
        if cs in _RGB_NAMES:
            return RGB24
    return OTHER


def _describe(doc: PdfDocument, stream: Stream):
    d = stream.dict
    width = doc.resolve(d.get("Width"))
    height = doc.resolve(d.get("Height"))
    bpc = doc.resolve(d.get("BitsPerComponent", 8))
    if not isinstance(width, int) or not isinstance(height, int) or width <= 0 or height <= 0:
        raise DecodeError(f"image has invalid size {width}x{height}")
    names = [name for name, _ in filters.filter_chain(d, doc.resolve)]
    colorspace = _colorspace(doc, d.get("ColorSpace"))
    if names and names[-1] == "DCTDecode" and set(names[:-1]) <= _LOSSLESS:
        codec = DCT_JPEG
    elif set(names) <= _LOSSLESS:
        codec = FLATE_RAW
    else:
        codec = OTHER
    if doc.resolve(d.get("ImageMask")) is True or bpc != 8 or colorspace == OTHER:
        codec = OTHER
    return codec, width, height, colorspace, bpc if isinstance(bpc, int) else 0


def _image_stream(doc: PdfDocument, ref: Ref) -> Stream:
    stream = doc.get(ref)
    if not isinstance(stream, Stream) or stream.dict.get("Subtype") != "Image":
        raise DecodeError(f"object {ref.num} is not an image XObject")
    return stream


def list_images(pdf) -> list[PdfImageRef]:
    """Every Image XObject reachable from a page's resources, in page then
    object-number order. An image shared by several pages is listed once,
    under the first page that uses it."""
    doc = as_document(pdf)
    found: dict[Ref, PdfImageRef] = {}
    for page_index, page in enumerate(doc.pages()):
        here = []
        visited_forms = set()

        def scan(resources):
            resources = doc.resolve(resources)
            if not isinstance(resources, dict):
                return
            xobjects = doc.resolve(resources.get("XObject"))
            if not isinstance(xobjects, dict):
                return
            for name, ref in xobjects.items():
                if not isinstance(ref, Ref):
                    continue
                obj = doc.get(ref)
                if not isinstance(obj, Stream):
                    continue
                subtype = obj.dict.get("Subtype")
                if subtype == "Image" and ref not in found:
                    codec, w, h, cs, bpc = _describe(doc, obj)
                    found[ref] = PdfImageRef(page_index, ref, codec, w, h, cs, bpc, str(name))
                    here.append(found[ref])
                elif subtype == "Form" and ref not in visited_forms:
                    visited_forms.add(ref)
                    scan(obj.dict.get("Resources"))

        scan(page.get("Resources"))
    return sorted(found.values(), key=lambda r: (r.page_index, r.object_id.num))


def extract_image(pdf, ref: PdfImageRef | Ref) -> np.ndarray:
    """Decode one image to an 8-bit ``(H, W)`` or ``(H, W, 3)`` array."""
    doc = as_document(pdf)
    obj_ref = ref.object_id if isinstance(ref, PdfImageRef) else ref
    stream = _image_stream(doc, obj_ref)
    codec, width, height, colorspace, _ = _describe(doc, stream)
    if codec == OTHER:
        raise UnsupportedCodec(f"image object {obj_ref.num} uses an unsupported encoding")
    channels = 3 if colorspace == RGB24 else 1
    chain = filters.filter_chain(stream.dict, doc.resolve)
    shape = (height, width, 3) if channels == 3 else (height, width)
    if codec == FLATE_RAW:
        data = filters.decode(stream.raw, chain)
        expected = width * height * channels
        if len(data) < expected:
            raise DecodeError(
                f"image object {obj_ref.num}: {len(data)} bytes decoded, {expected} expected"
            )
        return np.frombuffer(data[:expected], dtype=np.uint8).reshape(shape).copy()

    from PIL import Image

    data = filters.decode(stream.raw, chain[:-1])
    try:
        with Image.open(io.BytesIO(data)) as im:
            if im.mode not in ("L", "RGB"):
                raise UnsupportedCodec(f"JPEG in mode {im.mode} not supported")
            arr = np.asarray(im.convert("RGB" if channels == 3 else "L"))
    except (OSError, SyntaxError) as exc:
        raise DecodeError(f"image object {obj_ref.num}: JPEG decode failed: {exc}") from exc
    if arr.shape != shape:
        raise DecodeError(f"image object {obj_ref.num}: JPEG is {arr.shape}, dictionary says {shape}")
    return arr


def _replacement(doc: PdfDocument, obj_ref: Ref, img) -> Stream:
    stream = _image_stream(doc, obj_ref)
    codec, width, height, colorspace, _ = _describe(doc, stream)
    if codec == OTHER:
        raise UnsupportedCodec(f"image object {obj_ref.num} uses an unsupported encoding")
    img = as_raster(img)
    expected = (height, width, 3) if colorspace == RGB24 else (height, width)
    if img.shape != expected:
        raise DimensionMismatch(
            f"replacement for object {obj_ref.num} has shape {img.shape}, expected {expected}"
        )
    d = {k: v for k, v in stream.dict.items() if k not in _DROP_ON_REPLACE}
    d[Name("Filter")] = Name("FlateDecode")
    d[Name("BitsPerComponent")] = 8
    return Stream(d, filters.flate_encode(np.ascontiguousarray(img).tobytes()))


def replace_images(pdf, replacements: dict) -> bytes:
    """Write several images back in a single incremental update.

    ``replacements`` maps :class:`PdfImageRef` (or :class:`Ref`) to rasters
    with exactly the original dimensions and channel count.
    """
    doc = as_document(pdf)
    objects = {}
    for ref, img in replacements.items():
        obj_ref = ref.object_id if isinstance(ref, PdfImageRef) else ref
        objects[obj_ref.num] = (obj_ref.gen, _replacement(doc, obj_ref, img))
    if not objects:
        return doc.data
    return incremental_update(doc, objects)


def replace_image(pdf, ref: PdfImageRef | Ref, img) -> bytes:
    return replace_images(pdf, {ref: img})


@dataclass(frozen=True)
class RoundtripResult:
    ref: PdfImageRef
    status: str  # "pass", "fail" or "skipped"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def roundtrip_check(pdf, cycles: int = 2) -> list[RoundtripResult]:
    """Extract every supported image, write it back, extract again, repeat.

    An image passes when all extractions are byte-identical, i.e. the chain
    PDF -> a -> PDF -> b -> PDF -> c gives a == b == c for ``cycles=2``.
    """
    doc = as_document(pdf)
    refs = list_images(doc)
    supported = [r for r in refs if r.supported]
    first = {r: extract_image(doc, r) for r in supported}
    failures = {}
    current = first
    for cycle in range(cycles):
        doc = PdfDocument(replace_images(doc, current))
        if len(list_images(doc)) != len(refs):
            raise DecodeError("image count changed after reinsertion")
        current = {r: extract_image(doc, r) for r in supported}
        for r in supported:
            if r not in failures and not np.array_equal(current[r], first[r]):
                diff = int(np.abs(current[r].astype(int) - first[r].astype(int)).max())
                failures[r] = f"cycle {cycle + 1}: max pixel difference {diff}"
    results = []
    for r in refs:
        if not r.supported:
            results.append(RoundtripResult(r, "skipped", "unsupported encoding"))
        elif r in failures:
            results.append(RoundtripResult(r, "fail", failures[r]))
        else:
            results.append(RoundtripResult(r, "pass"))
    return results
