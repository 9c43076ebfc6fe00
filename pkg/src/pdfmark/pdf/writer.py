"""Incremental updates: append changed objects and a new cross-reference
section, leaving every byte of the original file in place."""

from __future__ import annotations

import zlib

from .document import PdfDocument
from .objects import Name, Stream, serialize, serialize_indirect

_TRAILER_KEYS = ("Root", "Info", "ID")


def _runs(nums):
    runs = []
    for n in sorted(nums):
        if runs and runs[-1][0] + runs[-1][1] == n:
            runs[-1][1] += 1
        else:
            runs.append([n, 1])
    return runs


def incremental_update(doc: PdfDocument, objects: dict[int, tuple[int, object]]) -> bytes:
    """Return the document with ``{num: (gen, obj)}`` appended as an update.

    The new cross-reference section uses the same form (table or stream) as
    the section ``startxref`` pointed at before the update.
    """
    out = bytearray(doc.data)
    if not out.endswith(b"\n"):
        out += b"\n"
    offsets = {}
    for num in sorted(objects):
        gen, obj = objects[num]
        offsets[num] = (len(out), gen)
        out += serialize_indirect(num, gen, obj)

    trailer = {Name(k): doc.trailer[k] for k in _TRAILER_KEYS if k in doc.trailer}
    size = max([doc.size] + [n + 1 for n in objects])

    if doc.xref_kind == "stream":
        xref_num = size
        size += 1
        xref_pos = len(out)
        offsets[xref_num] = (xref_pos, 0)
        rows = bytearray()
        index = []
        for start, count in _runs(offsets):
            index += [start, count]
            for n in range(start, start + count):
                pos, gen = offsets[n]
                rows += b"\x01" + pos.to_bytes(4, "big") + gen.to_bytes(2, "big")
        d = {
            Name("Type"): Name("XRef"),
            Name("Size"): size,
            Name("Index"): index,
            Name("W"): [1, 4, 2],
            **trailer,
            Name("Prev"): doc.startxref,
            Name("Filter"): Name("FlateDecode"),
        }
        out += serialize_indirect(xref_num, 0, Stream(d, zlib.compress(bytes(rows), 9)))
    else:
        xref_pos = len(out)
        out += b"xref\n"
        for start, count in _runs(offsets):
            out += b"%d %d\n" % (start, count)
            for n in range(start, start + count):
                pos, gen = offsets[n]
                out += b"%010d %05d n\r\n" % (pos, gen)
        d = {Name("Size"): size, **trailer, Name("Prev"): doc.startxref}
        out += b"trailer\n" + serialize(d) + b"\n"
    out += b"startxref\n%d\n%%%%EOF\n" % xref_pos
    return bytes(out)
