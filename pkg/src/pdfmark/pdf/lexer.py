"""Tokenizer and direct-object parser for PDF syntax."""

from __future__ import annotations

import re

from ..errors import MalformedPdf
from .objects import Name, PdfString, Ref

WHITESPACE = b"\x00\t\n\x0c\r "
DELIMITERS = b"()<>[]{}/%"

_WS_RE = re.compile(rb"(?:[\x00\t\n\x0c\r ]+|%[^\r\n]*)*")
_NUMBER_RE = re.compile(rb"[+-]?(?:\d+\.?\d*|\.\d+)")
_REF_RE = re.compile(rb"[\x00\t\n\x0c\r ]+(\d+)[\x00\t\n\x0c\r ]+R(?=[\x00\t\n\x0c\r ()<>\[\]{}/%]|$)")
_REGULAR_RE = re.compile(rb"[^\x00\t\n\x0c\r ()<>\[\]{}/%]+")
_HEX_DIGITS = re.compile(rb"[0-9A-Fa-f]")

_ESCAPES = {
    ord("n"): b"\n",
    ord("r"): b"\r",
    ord("t"): b"\t",
    ord("b"): b"\b",
    ord("f"): b"\f",
    ord("("): b"(",
    ord(")"): b")",
    ord("\\"): b"\\",
}


class Keyword(bytes):
    """A bare keyword such as ``obj``, ``stream`` or ``R``."""


def skip_ws(data: bytes, pos: int) -> int:
    return _WS_RE.match(data, pos).end()


def _literal_string(data: bytes, pos: int):
    # pos is just past the opening parenthesis
    out = bytearray()
    depth = 1
    n = len(data)
    while pos < n:
        c = data[pos]
        if c == 0x5C:  # backslash
            pos += 1
            if pos >= n:
                break
            e = data[pos]
            if e in _ESCAPES:
                out += _ESCAPES[e]
                pos += 1
            elif 0x30 <= e <= 0x37:
                m = re.match(rb"[0-7]{1,3}", data[pos : pos + 3])
                out.append(int(m.group(), 8) & 0xFF)
                pos += len(m.group())
            elif e == 0x0D:
                pos += 2 if data[pos + 1 : pos + 2] == b"\n" else 1
            elif e == 0x0A:
                pos += 1
            else:
                out.append(e)
                pos += 1
            continue
        if c == 0x28:
            depth += 1
        elif c == 0x29:
            depth -= 1
            if depth == 0:
                return PdfString(bytes(out)), pos + 1
        out.append(c)
        pos += 1
    raise MalformedPdf("unterminated literal string", pos)


def _hex_string(data: bytes, pos: int):
    end = data.find(b">", pos)
    if end < 0:
        raise MalformedPdf("unterminated hex string", pos)
    digits = b"".join(_HEX_DIGITS.findall(data[pos:end]))
    if len(digits) % 2:
        digits += b"0"
    return PdfString(bytes.fromhex(digits.decode())), end + 1


def _name(data: bytes, pos: int):
    m = _REGULAR_RE.match(data, pos)
    raw = m.group() if m else b""
    if b"#" in raw:
        raw = re.sub(rb"#([0-9A-Fa-f]{2})", lambda h: bytes([int(h.group(1), 16)]), raw)
    return Name(raw.decode("latin-1")), (m.end() if m else pos)


def parse_object(data: bytes, pos: int, depth: int = 0):
    """Parse one object starting at ``pos``; return ``(value, end)``.

    Bare keywords (other than true/false/null) come back as :class:`Keyword`.
    """
    if depth > 256:
        raise MalformedPdf("objects nested too deeply", pos)
    pos = skip_ws(data, pos)
    if pos >= len(data):
        raise MalformedPdf("unexpected end of data", pos)
    c = data[pos : pos + 1]
    if c == b"/":
        return _name(data, pos + 1)
    if c == b"(":
        return _literal_string(data, pos + 1)
    if c == b"<":
        if data[pos + 1 : pos + 2] == b"<":
            return _dict(data, pos + 2, depth)
        return _hex_string(data, pos + 1)
    if c == b"[":
        items = []
        pos += 1
        while True:
            pos = skip_ws(data, pos)
            if data[pos : pos + 1] == b"]":
                return items, pos + 1
            if pos >= len(data):
                raise MalformedPdf("unterminated array", pos)
            item, pos = parse_object(data, pos, depth + 1)
            if isinstance(item, Keyword):
                raise MalformedPdf(f"unexpected keyword {bytes(item)!r} in array", pos)
            items.append(item)
    m = _NUMBER_RE.match(data, pos)
    if m and (m.end() >= len(data) or data[m.end()] in WHITESPACE + DELIMITERS):
        text = m.group()
        if b"." in text:
            return float(text), m.end()
        num = int(text)
        r = _REF_RE.match(data, m.end())
        if r and num >= 0 and text.isdigit():
            return Ref(num, int(r.group(1))), r.end()
        return num, m.end()
    m = _REGULAR_RE.match(data, pos)
    if not m:
        raise MalformedPdf(f"unexpected byte {c!r}", pos)
    word = m.group()
    if word == b"true":
        return True, m.end()
    if word == b"false":
        return False, m.end()
    if word == b"null":
        return None, m.end()
    return Keyword(word), m.end()


def _dict(data: bytes, pos: int, depth: int):
    out = {}
    while True:
        pos = skip_ws(data, pos)
        if data[pos : pos + 2] == b">>":
            return out, pos + 2
        if pos >= len(data):
            raise MalformedPdf("unterminated dictionary", pos)
        if data[pos : pos + 1] != b"/":
            raise MalformedPdf("dictionary key is not a name", pos)
        key, pos = _name(data, pos + 1)
        value, pos = parse_object(data, pos, depth + 1)
        if isinstance(value, Keyword):
            raise MalformedPdf(f"unexpected keyword {bytes(value)!r} in dictionary", pos)
        out[key] = value


def expect_keyword(data: bytes, pos: int, word: bytes) -> int:
    pos = skip_ws(data, pos)
    m = _REGULAR_RE.match(data, pos)
    if not m or m.group() != word:
        raise MalformedPdf(f"expected {word.decode()!r}", pos)
    return m.end()
