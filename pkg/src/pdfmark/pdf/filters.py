"""Stream filters.

Lossless general-purpose filters are decoded here. Image-specific codecs
(DCT, JPX, JBIG2, CCITT) are left to the caller.
"""

from __future__ import annotations

import base64
import re
import zlib

import numpy as np

from ..errors import DecodeError, UnsupportedCodec

IMAGE_CODECS = {"DCTDecode", "JPXDecode", "JBIG2Decode", "CCITTFaxDecode"}

_ABBREVIATIONS = {
    "Fl": "FlateDecode",
    "AHx": "ASCIIHexDecode",
    "A85": "ASCII85Decode",
    "LZW": "LZWDecode",
    "RL": "RunLengthDecode",
    "DCT": "DCTDecode",
    "CCF": "CCITTFaxDecode",
}


def filter_chain(stream_dict, resolve=lambda x: x):
    """Return ``[(filter_name, parms_dict), ...]`` in decoding order."""
    filters = resolve(stream_dict.get("Filter"))
    parms = resolve(stream_dict.get("DecodeParms", stream_dict.get("DP")))
    if filters is None:
        return []
    if not isinstance(filters, list):
        filters = [filters]
        parms = [parms]
    elif not isinstance(parms, list):
        parms = [parms] * len(filters) if parms is None else [parms] + [None] * (len(filters) - 1)
    out = []
    for i, f in enumerate(filters):
        f = resolve(f)
        p = resolve(parms[i]) if i < len(parms) else None
        out.append((_ABBREVIATIONS.get(str(f), str(f)), p or {}))
    return out


def _inflate(data: bytes) -> bytes:
    try:
        return zlib.decompress(data)
    except zlib.error:
        # tolerate truncated streams and trailing garbage
        d = zlib.decompressobj()
        try:
            out = d.decompress(data)
        except zlib.error as exc:
            raise DecodeError(f"flate stream corrupt: {exc}") from exc
        if not out:
            raise DecodeError("flate stream corrupt")
        return out


def _unpredict(data: bytes, parms: dict) -> bytes:
    predictor = int(parms.get("Predictor", 1))
    if predictor == 1:
        return data
    colors = int(parms.get("Colors", 1))
    bpc = int(parms.get("BitsPerComponent", 8))
    columns = int(parms.get("Columns", 1))
    bpp = max(1, colors * bpc // 8)
    row_len = (colors * bpc * columns + 7) // 8
    if predictor == 2:
        if bpc != 8:
            raise UnsupportedCodec(f"TIFF predictor with {bpc} bits per component")
        rows = len(data) // row_len
        arr = np.frombuffer(data[: rows * row_len], dtype=np.uint8).reshape(rows, columns, colors)
        return np.cumsum(arr, axis=1, dtype=np.uint8).tobytes()
    if predictor < 10:
        raise UnsupportedCodec(f"unknown predictor {predictor}")
    stride = row_len + 1
    rows = len(data) // stride
    out = bytearray(rows * row_len)
    prev = bytearray(row_len)
    for r in range(rows):
        kind = data[r * stride]
        line = bytearray(data[r * stride + 1 : (r + 1) * stride])
        if kind == 1:
            for i in range(bpp, row_len):
                line[i] = (line[i] + line[i - bpp]) & 0xFF
        elif kind == 2:
            line = bytearray((np.frombuffer(line, np.uint8) + np.frombuffer(prev, np.uint8)).tobytes())
        elif kind == 3:
            for i in range(row_len):
                left = line[i - bpp] if i >= bpp else 0
                line[i] = (line[i] + ((left + prev[i]) >> 1)) & 0xFF
        elif kind == 4:
            for i in range(row_len):
                a = line[i - bpp] if i >= bpp else 0
                b = prev[i]
                c = prev[i - bpp] if i >= bpp else 0
                p = a + b - c
                pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
                pred = a if pa <= pb and pa <= pc else (b if pb <= pc else c)
                line[i] = (line[i] + pred) & 0xFF
        elif kind != 0:
            raise DecodeError(f"bad PNG predictor tag {kind} in row {r}")
        out[r * row_len : (r + 1) * row_len] = line
        prev = line
    return bytes(out)


def _ascii_hex(data: bytes) -> bytes:
    data = data.split(b">", 1)[0]
    digits = re.sub(rb"[^0-9A-Fa-f]", b"", data)
    if len(digits) % 2:
        digits += b"0"
    return bytes.fromhex(digits.decode())


def _ascii85(data: bytes) -> bytes:
    data = re.sub(rb"\s", b"", data)
    if data.startswith(b"<~"):
        data = data[2:]
    data = data.split(b"~>", 1)[0]
    try:
        return base64.a85decode(data)
    except ValueError as exc:
        raise DecodeError(f"bad ASCII85 data: {exc}") from exc


def _run_length(data: bytes) -> bytes:
    out = bytearray()
    i = 0
    while i < len(data):
        n = data[i]
        if n == 128:
            break
        if n < 128:
            out += data[i + 1 : i + 2 + n]
            i += n + 2
        else:
            out += data[i + 1 : i + 2] * (257 - n)
            i += 2
    return bytes(out)


def _lzw(data: bytes, early_change: int = 1) -> bytes:
    out = bytearray()
    table = [bytes([i]) for i in range(256)] + [b"", b""]
    width = 9
    bitbuf = 0
    nbits = 0
    prev = None
    for byte in data:
        bitbuf = (bitbuf << 8) | byte
        nbits += 8
        while nbits >= width:
            nbits -= width
            code = (bitbuf >> nbits) & ((1 << width) - 1)
            bitbuf &= (1 << nbits) - 1
            if code == 256:
                table = table[:258]
                width = 9
                prev = None
                continue
            if code == 257:
                return bytes(out)
            if code < len(table):
                entry = table[code]
                if prev is not None:
                    table.append(prev + entry[:1])
            elif prev is not None:
                entry = prev + prev[:1]
                table.append(entry)
            else:
                raise DecodeError("LZW code out of range")
            out += entry
            prev = entry
            if len(table) + early_change >= (1 << width) and width < 12:
                width += 1
    return bytes(out)


def decode(data: bytes, chain) -> bytes:
    """Apply every filter in ``chain``; stop before the first image codec."""
    for name, parms in chain:
        if name in IMAGE_CODECS:
            raise UnsupportedCodec(f"{name} is an image codec, not a stream filter")
        if name == "FlateDecode":
            data = _unpredict(_inflate(data), parms)
        elif name == "LZWDecode":
            data = _unpredict(_lzw(data, int(parms.get("EarlyChange", 1))), parms)
        elif name == "ASCIIHexDecode":
            data = _ascii_hex(data)
        elif name == "ASCII85Decode":
            data = _ascii85(data)
        elif name == "RunLengthDecode":
            data = _run_length(data)
        else:
            raise UnsupportedCodec(f"unsupported filter {name}")
    return data


def flate_encode(data: bytes) -> bytes:
    return zlib.compress(data, 9)
