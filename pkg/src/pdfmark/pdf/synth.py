"""Build small PDFs with embedded images from scratch.

Used for the fixture corpus and tests; it covers the structural variants the
reader has to handle (classic tables, cross-reference streams, object
streams, shared images, form XObjects, several image encodings).
"""

from __future__ import annotations

import base64
import io
import zlib

import numpy as np

from .objects import Name, Ref, Stream, serialize, serialize_indirect

ENCODINGS = ("flate", "raw", "dct", "flate-png", "ahx", "a85-flate", "runlength")


def _png_up(rows: np.ndarray) -> bytes:
    # PNG "Up" predictor on every row
    prev = np.zeros_like(rows[0])
    out = bytearray()
    for row in rows:
        out.append(2)
        out += ((row.astype(np.int16) - prev) % 256).astype(np.uint8).tobytes()
        prev = row
    return bytes(out)


def _run_length(data: bytes) -> bytes:
    out = bytearray()
    for i in range(0, len(data), 128):
        chunk = data[i : i + 128]
        out.append(len(chunk) - 1)
        out += chunk
    return bytes(out + b"\x80")


def encode_image(arr: np.ndarray, encoding: str = "flate", quality: int = 90):
    """Return ``(filter_entries, raw_bytes)`` for one image array."""
    arr = np.ascontiguousarray(arr, dtype=np.uint8)
    channels = 1 if arr.ndim == 2 else arr.shape[2]
    if encoding == "raw":
        return {}, arr.tobytes()
    if encoding == "flate":
        return {Name("Filter"): Name("FlateDecode")}, zlib.compress(arr.tobytes(), 9)
    if encoding == "flate-png":
        rows = arr.reshape(arr.shape[0], -1)
        parms = {
            Name("Predictor"): 12,
            Name("Colors"): channels,
            Name("BitsPerComponent"): 8,
            Name("Columns"): arr.shape[1],
        }
        return (
            {Name("Filter"): Name("FlateDecode"), Name("DecodeParms"): parms},
            zlib.compress(_png_up(rows), 9),
        )
    if encoding == "ahx":
        return {Name("Filter"): Name("ASCIIHexDecode")}, arr.tobytes().hex().encode() + b">"
    if encoding == "a85-flate":
        data = base64.a85encode(zlib.compress(arr.tobytes(), 9)) + b"~>"
        return {Name("Filter"): [Name("ASCII85Decode"), Name("FlateDecode")]}, data
    if encoding == "runlength":
        return {Name("Filter"): Name("RunLengthDecode")}, _run_length(arr.tobytes())
    if encoding == "dct":
        from PIL import Image

        buf = io.BytesIO()
        Image.fromarray(arr).save(buf, format="JPEG", quality=quality)
        return {Name("Filter"): Name("DCTDecode")}, buf.getvalue()
    raise ValueError(f"unknown encoding {encoding!r}")


class PdfBuilder:
    """Accumulate objects, then serialize with a table or a stream xref."""

    def __init__(self):
        self.objects: dict[int, object] = {}
        self.pages: list[Ref] = []
        self._pages_ref = self.reserve()
        self._catalog_ref = self.reserve()

    def reserve(self) -> Ref:
        num = len(self.objects) + 1
        self.objects[num] = None
        return Ref(num, 0)

    def add(self, obj) -> Ref:
        ref = self.reserve()
        self.objects[ref.num] = obj
        return ref

    def image(self, arr, encoding: str = "flate", colorspace=None, **extra) -> Ref:
        arr = np.asarray(arr)
        filt, data = encode_image(arr, encoding)
        if colorspace is None:
            colorspace = Name("DeviceGray" if arr.ndim == 2 else "DeviceRGB")
        d = {
            Name("Type"): Name("XObject"),
            Name("Subtype"): Name("Image"),
            Name("Width"): int(arr.shape[1]),
            Name("Height"): int(arr.shape[0]),
            Name("ColorSpace"): colorspace,
            Name("BitsPerComponent"): 8,
            **filt,
            **{Name(k): v for k, v in extra.items()},
        }
        return self.add(Stream(d, data))

    def icc_colorspace(self, n: int) -> list:
        # a placeholder profile body; readers only need /N here
        profile = self.add(Stream({Name("N"): n, Name("Alternate"): Name("DeviceGray" if n == 1 else "DeviceRGB")}, b"\x00" * 128))
        return [Name("ICCBased"), profile]

    def form(self, xobjects: dict, content: bytes) -> Ref:
        d = {
            Name("Type"): Name("XObject"),
            Name("Subtype"): Name("Form"),
            Name("BBox"): [0, 0, 1, 1],
            Name("Resources"): {Name("XObject"): {Name(k): v for k, v in xobjects.items()}},
        }
        return self.add(Stream(d, content))

    def page(self, xobjects: dict | None = None, content: bytes | None = None, size=(612, 792)) -> Ref:
        xobjects = xobjects or {}
        if content is None:
            ops = []
            for i, name in enumerate(xobjects):
                ops.append(f"q 200 0 0 150 {50 + 10 * i} {500 - 160 * i} cm /{name} Do Q")
            content = "\n".join(ops).encode()
        contents = self.add(Stream({}, content))
        resources = {Name("XObject"): {Name(k): v for k, v in xobjects.items()}} if xobjects else {}
        ref = self.add(
            {
                Name("Type"): Name("Page"),
                Name("Parent"): self._pages_ref,
                Name("MediaBox"): [0, 0, size[0], size[1]],
                Name("Resources"): resources,
                Name("Contents"): contents,
            }
        )
        self.pages.append(ref)
        return ref

    def build(self, xref: str = "table", object_streams: bool = False) -> bytes:
        self.objects[self._pages_ref.num] = {
            Name("Type"): Name("Pages"),
            Name("Kids"): list(self.pages),
            Name("Count"): len(self.pages),
        }
        self.objects[self._catalog_ref.num] = {
            Name("Type"): Name("Catalog"),
            Name("Pages"): self._pages_ref,
        }
        packed = {}
        if object_streams:
            if xref != "stream":
                raise ValueError("object streams need a cross-reference stream")
            packed = {n: o for n, o in self.objects.items() if not isinstance(o, Stream)}

        out = bytearray(b"%PDF-1.7\n%\xe2\xe3\xcf\xd3\n")
        offsets: dict[int, tuple[int, int, int]] = {}
        for num, obj in self.objects.items():
            if num in packed:
                continue
            offsets[num] = (1, len(out), 0)
            out += serialize_indirect(num, 0, obj)
        size = len(self.objects) + 1
        if packed:
            stm_num = size
            size += 1
            header = []
            body = bytearray()
            for i, (num, obj) in enumerate(packed.items()):
                header.append(f"{num} {len(body)}")
                body += serialize(obj) + b"\n"
                offsets[num] = (2, stm_num, i)
            head = (" ".join(header) + "\n").encode()
            stm = Stream(
                {
                    Name("Type"): Name("ObjStm"),
                    Name("N"): len(packed),
                    Name("First"): len(head),
                    Name("Filter"): Name("FlateDecode"),
                },
                zlib.compress(head + bytes(body), 9),
            )
            offsets[stm_num] = (1, len(out), 0)
            out += serialize_indirect(stm_num, 0, stm)

        if xref == "table":
            xref_pos = len(out)
            out += b"xref\n0 %d\n0000000000 65535 f\r\n" % size
            for num in range(1, size):
                out += b"%010d 00000 n\r\n" % offsets[num][1]
            trailer = {Name("Size"): size, Name("Root"): self._catalog_ref}
            out += b"trailer\n" + serialize(trailer) + b"\n"
        elif xref == "stream":
            xref_num = size
            size += 1
            xref_pos = len(out)
            offsets[xref_num] = (1, xref_pos, 0)
            rows = bytearray(b"\x00\x00\x00\x00\x00\xff\xff")
            for num in range(1, size):
                t, a, b = offsets[num]
                rows += bytes([t]) + a.to_bytes(4, "big") + b.to_bytes(2, "big")
            d = {
                Name("Type"): Name("XRef"),
                Name("Size"): size,
                Name("W"): [1, 4, 2],
                Name("Root"): self._catalog_ref,
                Name("Filter"): Name("FlateDecode"),
            }
            out += serialize_indirect(xref_num, 0, Stream(d, zlib.compress(bytes(rows), 9)))
        else:
            raise ValueError(f"xref must be 'table' or 'stream', got {xref!r}")
        out += b"startxref\n%d\n%%%%EOF\n" % xref_pos
        return bytes(out)
