import io
import zlib

import numpy as np
import pypdf
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdfmark.errors import DecodeError, DimensionMismatch, MalformedPdf, UnsupportedCodec
from pdfmark.pdf import (
    DCT_JPEG,
    FLATE_RAW,
    GRAY8,
    OTHER,
    RGB24,
    Name,
    PdfDocument,
    Ref,
    Stream,
    extract_image,
    list_images,
    replace_image,
    replace_images,
    roundtrip_check,
)
from pdfmark.pdf import filters
from pdfmark.pdf.lexer import parse_object
from pdfmark.pdf.objects import PdfString, serialize
from pdfmark.pdf.synth import ENCODINGS, PdfBuilder
from pdfmark.samples import synthetic_cover


def one_image_pdf(arr, encoding="flate", xref="table", **kw):
    b = PdfBuilder()
    b.page({"Im0": b.image(arr, encoding)})
    return b.build(xref, **kw)


def pypdf_pixels(data, page=0):
    """Independent decode of every image on a page via pypdf."""
    reader = pypdf.PdfReader(io.BytesIO(data))
    return [np.asarray(img.image) for img in reader.pages[page].images]


# -- listing ----------------------------------------------------------------------


def test_single_gray_image():
    arr = synthetic_cover(0, (80, 100))
    data = one_image_pdf(arr)
    (ref,) = list_images(data)
    assert (ref.width, ref.height, ref.codec, ref.colorspace, ref.bits_per_component) == (100, 80, FLATE_RAW, GRAY8, 8)
    assert ref.page_index == 0 and ref.supported
    np.testing.assert_array_equal(extract_image(data, ref), arr)
    np.testing.assert_array_equal(pypdf_pixels(data)[0], arr)


def test_no_images():
    b = PdfBuilder()
    b.page()
    data = b.build()
    assert list_images(data) == []
    assert roundtrip_check(data) == []


def test_no_pages():
    data = PdfBuilder().build()
    assert list_images(data) == []
    assert roundtrip_check(data) == []


def test_two_pages_ordered():
    b = PdfBuilder()
    second = b.image(synthetic_cover(1, (10, 12)))
    first = b.image(synthetic_cover(2, (14, 16)))
    b.page({"A": first})
    b.page({"B": second})
    refs = list_images(b.build())
    assert [r.page_index for r in refs] == [0, 1]
    assert [r.object_id for r in refs] == [first, second]


def test_one_pixel_image():
    data = one_image_pdf(np.array([[173]], dtype=np.uint8))
    (ref,) = list_images(data)
    assert extract_image(data, ref).tolist() == [[173]]


@pytest.mark.parametrize("encoding", ENCODINGS)
@pytest.mark.parametrize("color", [False, True])
def test_every_encoding_decodes(encoding, color):
    arr = synthetic_cover(3, (24, 40), color=color)
    data = one_image_pdf(arr, encoding)
    (ref,) = list_images(data)
    assert ref.colorspace == (RGB24 if color else GRAY8)
    got = extract_image(data, ref)
    assert got.shape == arr.shape
    if encoding == "dct":
        assert ref.codec == DCT_JPEG
        from PIL import Image

        raw = PdfDocument(data).get(ref.object_id).raw
        np.testing.assert_array_equal(got, np.asarray(Image.open(io.BytesIO(raw))))
        assert np.abs(got.astype(int) - pypdf_pixels(data)[0]).max() <= 4
        assert np.abs(got.astype(int) - arr).mean() < 8
    else:
        assert ref.codec == FLATE_RAW
        np.testing.assert_array_equal(got, arr)
        np.testing.assert_array_equal(pypdf_pixels(data)[0], arr)


@pytest.mark.parametrize("xref,objstm", [("table", False), ("stream", False), ("stream", True)])
def test_xref_kinds(xref, objstm):
    b = PdfBuilder()
    imgs = [synthetic_cover(i, (16, 20), color=i % 2 == 1) for i in range(3)]
    for i, arr in enumerate(imgs):
        b.page({"Im": b.image(arr)})
    data = b.build(xref, object_streams=objstm)
    doc = PdfDocument(data)
    assert doc.xref_kind == xref
    refs = list_images(doc)
    for arr, ref in zip(imgs, refs):
        np.testing.assert_array_equal(extract_image(doc, ref), arr)
    assert len(pypdf.PdfReader(io.BytesIO(data)).pages) == 3


def _lzw_encode(data: bytes) -> bytes:
    """Plain LZW encoder (early change 1), written independently of the decoder."""
    table = {bytes([i]): i for i in range(256)}
    next_code, width = 258, 9
    out, acc, nacc = bytearray(), 0, 0

    def emit(code):
        nonlocal acc, nacc
        acc = (acc << width) | code
        nacc += width
        while nacc >= 8:
            nacc -= 8
            out.append((acc >> nacc) & 0xFF)

    emit(256)
    w = b""
    for byte in data:
        wc = w + bytes([byte])
        if wc in table:
            w = wc
            continue
        emit(table[w])
        table[wc] = next_code
        next_code += 1
        if next_code + 1 > (1 << width) and width < 12:
            width += 1
        if next_code >= 4094:
            emit(256)
            table = {bytes([i]): i for i in range(256)}
            next_code, width = 258, 9
        w = bytes([byte])
    if w:
        emit(table[w])
        next_code += 1
        if next_code + 1 > (1 << width) and width < 12:
            width += 1
    emit(257)
    if nacc:
        out.append((acc << (8 - nacc)) & 0xFF)
    return bytes(out)


@given(st.binary(max_size=3000))
def test_lzw_against_encoder_oracle(payload):
    encoded = _lzw_encode(payload)
    assert filters.decode(encoded, [("LZWDecode", {})]) == payload


def test_lzw_matches_pypdf():
    payload = bytes(synthetic_cover(4, (90, 90)).ravel()) * 2
    encoded = _lzw_encode(payload)
    from pypdf.filters import LZWDecode

    assert filters.decode(encoded, [("LZWDecode", {})]) == LZWDecode.decode(encoded) == payload


def test_lzw_image_in_pdf():
    arr = synthetic_cover(5, (30, 50))
    b = PdfBuilder()
    ref = b.add(Stream({
        Name("Type"): Name("XObject"), Name("Subtype"): Name("Image"),
        Name("Width"): 50, Name("Height"): 30, Name("BitsPerComponent"): 8,
        Name("ColorSpace"): Name("DeviceGray"), Name("Filter"): Name("LZWDecode"),
    }, _lzw_encode(arr.tobytes())))
    b.page({"Im0": ref})
    data = b.build()
    (img,) = list_images(data)
    assert img.codec == FLATE_RAW
    np.testing.assert_array_equal(extract_image(data, img), arr)


@given(st.binary(max_size=2000))
def test_ascii_and_runlength_filters(payload):
    import base64

    hexed = payload.hex().encode() + b">"
    assert filters.decode(hexed, [("ASCIIHexDecode", {})]) == payload
    a85 = base64.a85encode(payload) + b"~>"
    assert filters.decode(a85, [("ASCII85Decode", {})]) == payload


def test_png_predictor_all_row_filters():
    # hand-built rows using Sub, Up, Average and Paeth
    rng = np.random.default_rng(6)
    rows = rng.integers(0, 256, (4, 6), dtype=np.uint8)
    encoded = bytearray()
    prev = np.zeros(6, dtype=np.int64)
    for kind, row in zip((1, 2, 3, 4), rows.astype(np.int64)):
        out = []
        for i in range(6):
            left = row[i - 1] if i else 0
            up = prev[i]
            ul = prev[i - 1] if i else 0
            if kind == 1:
                pred = left
            elif kind == 2:
                pred = up
            elif kind == 3:
                pred = (left + up) // 2
            else:
                p = left + up - ul
                pa, pb, pc = abs(p - left), abs(p - up), abs(p - ul)
                pred = left if pa <= pb and pa <= pc else (up if pb <= pc else ul)
            out.append((row[i] - pred) % 256)
        encoded += bytes([kind] + out)
        prev = row
    parms = {"Predictor": 12, "Columns": 6, "Colors": 1, "BitsPerComponent": 8}
    got = filters.decode(zlib.compress(bytes(encoded)), [("FlateDecode", parms)])
    assert got == rows.tobytes()


# -- classification ------------------------------------------------------------------


def test_unsupported_images_listed_and_skipped(corpus_files):
    path = next(p for p in corpus_files if p.name == "unsupported_images.pdf")
    data = path.read_bytes()
    refs = list_images(data)
    assert [r.codec for r in refs] == [FLATE_RAW, OTHER, OTHER]
    with pytest.raises(UnsupportedCodec):
        extract_image(data, refs[1])
    with pytest.raises(UnsupportedCodec):
        replace_image(data, refs[2], np.zeros((16, 16), np.uint8))
    statuses = [r.status for r in roundtrip_check(data)]
    assert statuses == ["pass", "skipped", "skipped"]


def test_shared_and_nested_images(corpus_files):
    by_name = {p.name: p.read_bytes() for p in corpus_files}
    assert len(list_images(by_name["shared_image.pdf"])) == 1
    assert len(list_images(by_name["form_nested.pdf"])) == 2


def test_icc_based_colorspaces(corpus_files):
    data = next(p for p in corpus_files if p.name == "icc_based.pdf").read_bytes()
    assert [r.colorspace for r in list_images(data)] == [GRAY8, RGB24]


# -- replacement -----------------------------------------------------------------------


def test_replace_is_incremental_and_local():
    b = PdfBuilder()
    a = b.image(synthetic_cover(7, (20, 30)))
    c = b.image(synthetic_cover(8, (20, 30), color=True))
    b.page({"A": a})
    b.page({"C": c})
    data = b.build()
    refs = list_images(data)
    new_pixels = np.full((20, 30), 42, dtype=np.uint8)
    out = replace_image(data, refs[0], new_pixels)
    assert out.startswith(data)
    old, new = PdfDocument(data), PdfDocument(out)
    assert b"/Prev %d" % old.startxref in out[len(data):]
    for num in old.xref:
        if num != refs[0].object_id.num:
            assert new.get(Ref(num, old.generation(num))) == old.get(Ref(num, old.generation(num)))
    assert len(list_images(out)) == 2
    np.testing.assert_array_equal(extract_image(out, refs[0]), new_pixels)
    np.testing.assert_array_equal(pypdf_pixels(out, 0)[0], new_pixels)
    np.testing.assert_array_equal(extract_image(out, refs[1]), extract_image(data, refs[1]))


@pytest.mark.parametrize("xref,objstm", [("table", False), ("stream", False), ("stream", True)])
def test_replace_keeps_xref_kind(xref, objstm):
    arr = synthetic_cover(9, (18, 22))
    b = PdfBuilder()
    b.page({"Im0": b.image(arr)})
    data = b.build(xref, object_streams=objstm)
    (ref,) = list_images(data)
    out = replace_image(data, ref, 255 - arr)
    assert PdfDocument(out).xref_kind == xref
    np.testing.assert_array_equal(pypdf_pixels(out)[0], 255 - arr)


def test_replace_jpeg_becomes_flate():
    arr = synthetic_cover(10, (32, 48), color=True)
    data = one_image_pdf(arr, "dct")
    (ref,) = list_images(data)
    marked = extract_image(data, ref) ^ np.uint8(1)
    out = replace_image(data, ref, marked)
    (after,) = list_images(out)
    assert after.codec == FLATE_RAW
    assert (after.width, after.height) == (ref.width, ref.height)
    np.testing.assert_array_equal(extract_image(out, after), marked)


def test_replace_dimension_mismatch():
    data = one_image_pdf(synthetic_cover(11, (10, 10)))
    (ref,) = list_images(data)
    with pytest.raises(DimensionMismatch):
        replace_image(data, ref, np.zeros((10, 11), np.uint8))
    with pytest.raises(DimensionMismatch):
        replace_image(data, ref, np.zeros((10, 10, 3), np.uint8))


def test_three_cycles_stable():
    arr = synthetic_cover(12, (25, 35), color=True)
    data = one_image_pdf(arr, "dct")
    (ref,) = list_images(data)
    seen = []
    for _ in range(3):
        img = extract_image(data, ref)
        seen.append(img)
        data = replace_image(data, ref, img)
    np.testing.assert_array_equal(seen[1], seen[0])
    np.testing.assert_array_equal(seen[2], seen[0])
    assert data.count(b"startxref") == 4


def test_replace_many_in_one_update():
    b = PdfBuilder()
    b.page({f"Im{i}": b.image(synthetic_cover(i, (8, 8))) for i in range(3)})
    data = b.build()
    refs = list_images(data)
    out = replace_images(data, {r: np.full((8, 8), i, np.uint8) for i, r in enumerate(refs)})
    assert out.count(b"startxref") == 2
    assert [int(extract_image(out, r)[0, 0]) for r in refs] == [0, 1, 2]


def test_roundtrip_whole_corpus(corpus_files):
    assert len(corpus_files) >= 20
    for path in corpus_files:
        results = roundtrip_check(path.read_bytes())
        assert all(r.status in ("pass", "skipped") for r in results), path.name


# -- malformed input ----------------------------------------------------------------------


def test_missing_header():
    with pytest.raises(MalformedPdf) as exc:
        PdfDocument(b"hello world")
    assert exc.value.offset == 0
    assert "byte offset 0" in str(exc.value)


def test_missing_startxref():
    data = one_image_pdf(np.zeros((2, 2), np.uint8))
    cut = data[: data.rindex(b"startxref")]
    with pytest.raises(MalformedPdf) as exc:
        PdfDocument(cut)
    assert exc.value.offset == len(cut)


def test_startxref_points_at_garbage():
    data = one_image_pdf(np.zeros((2, 2), np.uint8))
    at = data.rindex(b"startxref")
    bad = data[:at] + b"startxref\n20\n%%EOF\n"
    with pytest.raises(MalformedPdf) as exc:
        PdfDocument(bad)
    assert exc.value.offset is not None and exc.value.offset >= 20


def test_startxref_past_end():
    data = one_image_pdf(np.zeros((2, 2), np.uint8))
    at = data.rindex(b"startxref")
    with pytest.raises(MalformedPdf):
        PdfDocument(data[:at] + b"startxref\n999999999\n%%EOF\n")


def test_corrupt_object_reports_offset():
    data = one_image_pdf(np.zeros((2, 2), np.uint8))
    pos = data.index(b"1 0 obj")
    end = data.index(b"endobj", pos)
    broken = b"1 0 obj\n<< /Type /Pages /Kids [ 3 0 R"
    bad = data[:pos] + broken.ljust(end - pos) + data[end:]
    assert len(bad) == len(data)
    with pytest.raises(MalformedPdf) as exc:
        list_images(bad)
    assert exc.value.offset is not None and pos <= exc.value.offset <= len(bad)


def test_corrupt_flate_is_decode_error():
    data = bytearray(one_image_pdf(synthetic_cover(13, (16, 16))))
    start = data.index(b"stream\n") + len(b"stream\n")
    while not data[start + 10 : start + 20].strip(b"x"):
        start += 1
    for i in range(start + 2, start + 12):
        data[i] ^= 0xFF
    (ref,) = list_images(bytes(data))
    with pytest.raises(DecodeError):
        extract_image(bytes(data), ref)


def test_encrypted_rejected():
    data = one_image_pdf(np.zeros((2, 2), np.uint8))
    patched = data.replace(b"/Root", b"/Encrypt << /Filter /Standard >> /Root", 1)
    from pdfmark.errors import PdfmarkError

    with pytest.raises(PdfmarkError):
        PdfDocument(patched)


# -- lexer ----------------------------------------------------------------------------------

names = st.text(st.characters(min_codepoint=33, max_codepoint=255), min_size=1, max_size=8).map(Name)
scalars = st.one_of(
    st.integers(-(2**31), 2**31),
    st.booleans(),
    st.none(),
    names,
    st.binary(max_size=20).map(PdfString),
    st.builds(Ref, st.integers(1, 10**6), st.integers(0, 65535)),
)
pdf_objects = st.recursive(
    scalars,
    lambda children: st.one_of(
        st.lists(children, max_size=4),
        st.dictionaries(names, children, max_size=4),
    ),
    max_leaves=12,
)


@given(pdf_objects)
def test_serialize_parse_roundtrip(obj):
    text = serialize(obj)
    value, end = parse_object(text + b" ", 0)
    assert value == obj
    assert end <= len(text) + 1


@given(st.floats(-1e6, 1e6, allow_nan=False))
def test_real_numbers_roundtrip(x):
    value, _ = parse_object(serialize(x) + b" ", 0)
    assert value == pytest.approx(x, abs=1e-9)


def test_lexer_details():
    assert parse_object(b"(a\\(b\\)c\\n\\101) ", 0)[0] == b"a(b)c\nA"
    assert parse_object(b"<48 65 6C6C 6F7> ", 0)[0] == b"Hello\x70"
    assert parse_object(b"/A#20B ", 0)[0] == "A B"
    assert parse_object(b"[1 0 R 2] ", 0)[0] == [Ref(1, 0), 2]
    assert parse_object(b"% comment\n  -.5 ", 0)[0] == -0.5
