"""PDF object model and serialization.

Direct objects map onto Python values: ``int``/``float``, ``bool``, ``None``,
``list`` (arrays), ``dict`` with :class:`Name` keys, :class:`PdfString` and
:class:`Name`. Indirect references are :class:`Ref`; streams are
:class:`Stream` (dictionary plus still-encoded bytes).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple


class Name(str):
    """A PDF name; compares equal to the plain string without the slash."""

    def __repr__(self):
        return f"/{str(self)}"


class PdfString(bytes):
    pass


class Ref(NamedTuple):
    num: int
    gen: int = 0

    def __str__(self):
        return f"{self.num} {self.gen} R"


@dataclass
class Stream:
    dict: dict
    raw: bytes
    # byte offset of the first data byte in the source document, if parsed
    offset: int | None = field(default=None, compare=False)


_NAME_SAFE = set(b"!\"$&'*+,-.0123456789:;=?@ABCDEFGHIJKLMNOPQRSTUVWXYZ\\^_`abcdefghijklmnopqrstuvwxyz|~")


def _name_bytes(name: str) -> bytes:
    out = bytearray(b"/")
    for b in name.encode("latin-1"):
        if b in _NAME_SAFE:
            out.append(b)
        else:
            out += b"#%02X" % b
    return bytes(out)


def _string_bytes(s: bytes) -> bytes:
    out = bytearray(b"(")
    for b in s:
        if b in b"()\\":
            out += b"\\" + bytes([b])
        elif b == 0x0D:
            out += b"\\r"
        else:
            out.append(b)
    out += b")"
    return bytes(out)


def _number_bytes(x: float) -> bytes:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"cannot serialize {x!r}")
    text = f"{x:.10f}".rstrip("0").rstrip(".")
    return (text if text not in ("", "-0") else "0").encode()


def serialize(obj) -> bytes:
    """Encode a direct object (streams are written by the writer)."""
    if obj is None:
        return b"null"
    if obj is True:
        return b"true"
    if obj is False:
        return b"false"
    if isinstance(obj, Ref):
        return str(obj).encode()
    if isinstance(obj, Name):
        return _name_bytes(obj)
    if isinstance(obj, (PdfString, bytes)):
        return _string_bytes(obj)
    if isinstance(obj, int):
        return str(obj).encode()
    if isinstance(obj, float):
        return _number_bytes(obj)
    if isinstance(obj, str):
        return _string_bytes(obj.encode("latin-1"))
    if isinstance(obj, (list, tuple)):
        return b"[" + b" ".join(serialize(o) for o in obj) + b"]"
    if isinstance(obj, dict):
        parts = [_name_bytes(k) + b" " + serialize(v) for k, v in obj.items()]
        return b"<<" + b" ".join(parts) + b">>"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def serialize_indirect(num: int, gen: int, obj) -> bytes:
    head = b"%d %d obj\n" % (num, gen)
    if isinstance(obj, Stream):
        d = dict(obj.dict)
        d[Name("Length")] = len(obj.raw)
        body = serialize(d) + b"\nstream\n" + obj.raw + b"\nendstream"
    else:
        body = serialize(obj)
    return head + body + b"\nendobj\n"
