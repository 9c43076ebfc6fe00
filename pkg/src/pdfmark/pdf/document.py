"""Read-only access to a PDF file: cross-reference sections, indirect
objects (including ones packed in object streams) and the page tree."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import MalformedPdf, PdfmarkError
from . import filters
from .lexer import Keyword, expect_keyword, parse_object, skip_ws
from .objects import Name, Ref, Stream

_OBJ_HEADER = re.compile(rb"(\d+)[\x00\t\n\x0c\r ]+(\d+)[\x00\t\n\x0c\r ]+obj")
_STARTXREF = re.compile(rb"startxref[\x00\t\n\x0c\r ]+(\d+)")
_XREF_ROW = re.compile(rb"(\d{1,10})[ \t]+(\d{1,5})[ \t]+([nf])")
_SUBSECTION = re.compile(rb"(\d+)[ \t]+(\d+)[ \t]*[\r\n]")

INHERITABLE = ("Resources", "MediaBox", "CropBox", "Rotate")


@dataclass(frozen=True)
class XrefEntry:
    kind: str  # "n" in-file object, "o" inside an object stream
    a: int  # byte offset, or object stream number
    b: int  # generation, or index within the object stream


class PdfDocument:
    """A parsed PDF. The underlying bytes are never modified."""

    def __init__(self, data: bytes):
        if not isinstance(data, (bytes, bytearray, memoryview)):
            raise TypeError("PdfDocument expects the file contents as bytes")
        self.data = bytes(data)
        if not self.data.lstrip(b"\x00\t\n\r\x0c ").startswith(b"%PDF-"):
            # some producers put junk first; accept a header within the first KiB
            if self.data.find(b"%PDF-", 0, 1024) < 0:
                raise MalformedPdf("missing %PDF- header", 0)
        self.xref: dict[int, XrefEntry] = {}
        self.trailer: dict = {}
        self._cache: dict[int, object] = {}
        self._objstm_cache: dict[int, dict[int, object]] = {}
        self.startxref = self._find_startxref()
        self.xref_kind = None
        self._load_xref_chain(self.startxref)
        if "Encrypt" in self.trailer:
            raise PdfmarkError("encrypted PDFs are not supported")
        if "Root" not in self.trailer:
            raise MalformedPdf("trailer has no /Root", self.startxref)

    @classmethod
    def open(cls, path) -> PdfDocument:
        with open(path, "rb") as fh:
            return cls(fh.read())

    # -- cross-reference loading --------------------------------------

    def _find_startxref(self) -> int:
        tail_start = max(0, len(self.data) - 2048)
        matches = list(_STARTXREF.finditer(self.data, tail_start))
        if not matches:
            raise MalformedPdf("startxref not found near end of file", len(self.data))
        offset = int(matches[-1].group(1))
        if offset >= len(self.data):
            raise MalformedPdf("startxref points past end of file", matches[-1].start())
        return offset

    def _load_xref_chain(self, offset: int):
        seen = set()
        first = True
        while offset is not None:
            if offset in seen:
                raise MalformedPdf("cycle in /Prev chain", offset)
            seen.add(offset)
            pos = skip_ws(self.data, offset)
            if self.data.startswith(b"xref", pos):
                rows, trailer = self._read_xref_table(pos + 4)
                kind = "table"
                stm = trailer.get("XRefStm")
                if isinstance(stm, int):
                    # hybrid file: compressed objects are listed only in the stream
                    self._read_xref_stream(stm)
                for num, entry in rows:
                    self._add(num, entry)
            else:
                trailer = self._read_xref_stream(pos)
                kind = "stream"
            if first:
                self.xref_kind = kind
                first = False
            for key, value in trailer.items():
                if key not in ("Prev", "XRefStm", "W", "Index", "Filter", "DecodeParms", "Length", "Type"):
                    self.trailer.setdefault(key, value)
            prev = trailer.get("Prev")
            offset = int(prev) if isinstance(prev, (int, float)) else None

    def _add(self, num: int, entry: XrefEntry | None):
        # the newest section is read first; earlier definitions are shadowed
        if num not in self.xref:
            self.xref[num] = entry

    def _read_xref_table(self, pos: int):
        data = self.data
        rows = []
        while True:
            pos = skip_ws(data, pos)
            if data.startswith(b"trailer", pos):
                trailer, _ = parse_object(data, pos + 7)
                if not isinstance(trailer, dict):
                    raise MalformedPdf("trailer is not a dictionary", pos)
                return rows, trailer
            m = _SUBSECTION.match(data, pos)
            if not m:
                raise MalformedPdf("bad cross-reference subsection header", pos)
            start, count = int(m.group(1)), int(m.group(2))
            pos = m.end()
            for i in range(count):
                pos = skip_ws(data, pos)
                row = _XREF_ROW.match(data, pos)
                if not row:
                    raise MalformedPdf("bad cross-reference entry", pos)
                pos = row.end()
                if row.group(3) == b"n":
                    rows.append((start + i, XrefEntry("n", int(row.group(1)), int(row.group(2)))))
                else:
                    rows.append((start + i, None))

    def _read_xref_stream(self, pos: int) -> dict:
        num, gen, obj = self._parse_indirect_at(pos)
        if not isinstance(obj, Stream) or obj.dict.get("Type") != "XRef":
            raise MalformedPdf("expected a cross-reference stream", pos)
        d = obj.dict
        widths = [int(w) for w in d.get("W", [])]
        if len(widths) != 3:
            raise MalformedPdf("cross-reference stream /W must have three entries", pos)
        size = int(d["Size"])
        index = d.get("Index", [0, size])
        raw = filters.decode(obj.raw, filters.filter_chain(d))
        row_len = sum(widths)
        rows = []
        for i in range(0, len(raw) - row_len + 1, row_len):
            fields = []
            j = i
            for w in widths:
                fields.append(int.from_bytes(raw[j : j + w], "big") if w else None)
                j += w
            rows.append(fields)
        k = 0
        for s in range(0, len(index), 2):
            start, count = int(index[s]), int(index[s + 1])
            for i in range(count):
                if k >= len(rows):
                    raise MalformedPdf("cross-reference stream shorter than its /Index", pos)
                t, f2, f3 = rows[k]
                k += 1
                t = 1 if t is None else t
                if t == 1:
                    self._add(start + i, XrefEntry("n", f2, f3 or 0))
                elif t == 2:
                    self._add(start + i, XrefEntry("o", f2, f3 or 0))
                else:
                    self._add(start + i, None)
        return d

    # -- object access -------------------------------------------------

    def _parse_indirect_at(self, pos: int):
        data = self.data
        pos = skip_ws(data, pos)
        m = _OBJ_HEADER.match(data, pos)
        if not m:
            raise MalformedPdf("expected 'N G obj'", pos)
        num, gen = int(m.group(1)), int(m.group(2))
        obj, end = parse_object(data, m.end())
        if isinstance(obj, Keyword):
            if obj == b"endobj":
                return num, gen, None
            raise MalformedPdf(f"unexpected keyword {bytes(obj)!r}", m.end())
        after = skip_ws(data, end)
        if isinstance(obj, dict) and data.startswith(b"stream", after):
            return num, gen, self._read_stream(obj, after + 6)
        return num, gen, obj

    def _read_stream(self, d: dict, pos: int) -> Stream:
        data = self.data
        if data.startswith(b"\r\n", pos):
            pos += 2
        elif data[pos : pos + 1] in (b"\n", b"\r"):
            pos += 1
        length = self.resolve(d.get("Length"))
        if isinstance(length, int) and length >= 0:
            end = pos + length
            if end <= len(data):
                tail = skip_ws(data, end)
                if data.startswith(b"endstream", tail):
                    return Stream(d, data[pos:end], pos)
        # /Length missing or wrong: fall back to scanning for the keyword
        end = data.find(b"endstream", pos)
        if end < 0:
            raise MalformedPdf("stream without endstream", pos)
        stop = end
        if data[stop - 2 : stop] == b"\r\n":
            stop -= 2
        elif data[stop - 1 : stop] in (b"\n", b"\r"):
            stop -= 1
        return Stream(d, data[pos:stop], pos)

    def get(self, ref: Ref | int):
        """The object behind an indirect reference (``None`` if absent)."""
        num = ref.num if isinstance(ref, Ref) else int(ref)
        if num in self._cache:
            return self._cache[num]
        entry = self.xref.get(num)
        if entry is None:
            obj = None
        elif entry.kind == "n":
            got_num, _, obj = self._parse_indirect_at(entry.a)
            if got_num != num:
                raise MalformedPdf(f"xref entry for object {num} points at object {got_num}", entry.a)
        else:
            obj = self._from_object_stream(entry.a, entry.b, num)
        self._cache[num] = obj
        return obj

    def _from_object_stream(self, stm_num: int, index: int, num: int):
        if stm_num not in self._objstm_cache:
            stm = self.get(stm_num)
            if not isinstance(stm, Stream):
                raise MalformedPdf(f"object stream {stm_num} missing")
            data = filters.decode(stm.raw, filters.filter_chain(stm.dict, self.resolve))
            n = int(self.resolve(stm.dict["N"]))
            first = int(self.resolve(stm.dict["First"]))
            header = data[:first].split()
            objs = {}
            for i in range(n):
                onum, off = int(header[2 * i]), int(header[2 * i + 1])
                objs[onum], _ = parse_object(data, first + off)
            self._objstm_cache[stm_num] = objs
        objs = self._objstm_cache[stm_num]
        if num not in objs:
            raise MalformedPdf(f"object {num} not found in object stream {stm_num}")
        return objs[num]

    def resolve(self, obj):
        seen = 0
        while isinstance(obj, Ref):
            obj = self.get(obj)
            seen += 1
            if seen > 64:
                raise MalformedPdf("reference chain too long")
        return obj

    def generation(self, num: int) -> int:
        entry = self.xref.get(num)
        return entry.b if entry is not None and entry.kind == "n" else 0

    @property
    def size(self) -> int:
        """One more than the highest object number in use."""
        declared = int(self.trailer.get("Size", 0))
        return max([declared] + [n + 1 for n in self.xref])

    # -- page tree ------------------------------------------------------

    def pages(self) -> list[dict]:
        """Page dictionaries in document order with inherited attributes filled in."""
        root = self.resolve(self.trailer["Root"])
        if not isinstance(root, dict) or "Pages" not in root:
            raise MalformedPdf("document catalog has no /Pages")
        out = []
        seen = set()

        def walk(node_ref, inherited):
            key = node_ref if isinstance(node_ref, Ref) else id(node_ref)
            if key in seen:
                raise MalformedPdf("cycle in page tree")
            seen.add(key)
            node = self.resolve(node_ref)
            if not isinstance(node, dict):
                return
            attrs = dict(inherited)
            for name in INHERITABLE:
                if name in node:
                    attrs[name] = node[name]
            kids = self.resolve(node.get("Kids"))
            if node.get("Type") == "Pages" or (kids is not None and node.get("Type") != "Page"):
                for kid in kids or []:
                    walk(kid, attrs)
            else:
                page = dict(node)
                for name, value in attrs.items():
                    page.setdefault(Name(name), value)
                out.append(page)

        walk(root["Pages"], {})
        return out
