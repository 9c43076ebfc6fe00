"""Regenerate the fixture PDF corpus under tests/fixtures/corpus.

Every file is synthesized from seeded covers, so reruns are byte-identical.

    python3 tools/make_corpus.py [OUTDIR]
"""

from __future__ import annotations

import argparse
import zlib
from pathlib import Path

import numpy as np

from pdfmark.pdf import PdfDocument, list_images
from pdfmark.pdf.writer import incremental_update
from pdfmark.pdf.objects import Name, Stream
from pdfmark.pdf.synth import PdfBuilder, encode_image
from pdfmark.samples import synthetic_cover

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "corpus"


def _cover(seed, shape=(96, 128), color=False):
    return synthetic_cover(seed, shape, color=color)


def single(seed, encoding="flate", color=False, xref="table", shape=(96, 128), **kw):
    b = PdfBuilder()
    img = b.image(_cover(seed, shape, color), encoding)
    b.page({"Im0": img})
    return b.build(xref, **kw)


def multi_page(seed, xref="table", object_streams=False):
    b = PdfBuilder()
    for i in range(3):
        refs = {f"Im{j}": b.image(_cover(seed + 10 * i + j, (64 + 8 * j, 80), color=bool(j % 2)))
                for j in range(i + 1)}
        b.page(refs)
    return b.build(xref, object_streams=object_streams)


def mixed_encodings(seed):
    b = PdfBuilder()
    refs = {}
    for j, enc in enumerate(("flate", "dct", "flate-png", "a85-flate")):
        refs[f"Im{j}"] = b.image(_cover(seed + j, (72, 72), color=j % 2 == 1), enc)
    b.page(refs)
    return b.build()


def form_nested(seed):
    b = PdfBuilder()
    inner = b.image(_cover(seed, (80, 80)))
    form = b.form({"Inner": inner}, b"q /Inner Do Q")
    direct = b.image(_cover(seed + 1, (64, 96), color=True))
    b.page({"Fm0": form, "Im0": direct})
    return b.build()


def shared_image(seed):
    b = PdfBuilder()
    img = b.image(_cover(seed, (80, 112), color=True))
    b.page({"Im0": img})
    b.page({"Logo": img})
    return b.build()


def icc(seed):
    b = PdfBuilder()
    gray = b.image(_cover(seed, (64, 64)), colorspace=b.icc_colorspace(1))
    rgb = b.image(_cover(seed + 1, (64, 64), color=True), colorspace=b.icc_colorspace(3))
    b.page({"Im0": gray, "Im1": rgb})
    return b.build()


def unsupported(seed):
    """A flate gray image next to an Indexed image and a 1-bit stencil mask."""
    b = PdfBuilder()
    good = b.image(_cover(seed, (64, 64)))
    rng = np.random.default_rng(seed)
    palette = bytes(rng.integers(0, 256, 3 * 4, dtype=np.uint8))
    indexed = b.add(Stream({
        Name("Type"): Name("XObject"), Name("Subtype"): Name("Image"),
        Name("Width"): 16, Name("Height"): 16, Name("BitsPerComponent"): 8,
        Name("ColorSpace"): [Name("Indexed"), Name("DeviceRGB"), 3, palette],
        Name("Filter"): Name("FlateDecode"),
    }, zlib.compress(bytes(rng.integers(0, 4, 256, dtype=np.uint8)))))
    mask = b.add(Stream({
        Name("Type"): Name("XObject"), Name("Subtype"): Name("Image"),
        Name("Width"): 16, Name("Height"): 16, Name("BitsPerComponent"): 1,
        Name("ImageMask"): True, Name("Filter"): Name("FlateDecode"),
    }, zlib.compress(bytes(rng.integers(0, 256, 32, dtype=np.uint8)))))
    b.page({"Im0": good, "Im1": indexed, "Im2": mask})
    return b.build()


def updated(seed, xref="table"):
    """A document that already carries one incremental update."""
    data = single(seed, color=True, xref=xref)
    doc = PdfDocument(data)
    ref = list_images(doc)[0]
    stream = doc.get(ref.object_id)
    filt, raw = encode_image(_cover(seed + 99, (96, 128), color=True), "flate")
    new = Stream({**{k: v for k, v in stream.dict.items() if k not in ("Filter", "DecodeParms", "Length")}, **filt}, raw)
    return incremental_update(doc, {ref.object_id.num: (ref.object_id.gen, new)})


CORPUS = {
    "gray_flate_table.pdf": lambda: single(1),
    "rgb_flate_table.pdf": lambda: single(2, color=True),
    "gray_flate_stream.pdf": lambda: single(3, xref="stream"),
    "rgb_flate_stream.pdf": lambda: single(4, color=True, xref="stream"),
    "gray_raw.pdf": lambda: single(5, "raw"),
    "rgb_dct.pdf": lambda: single(6, "dct", color=True),
    "gray_dct.pdf": lambda: single(7, "dct"),
    "gray_png_predictor.pdf": lambda: single(8, "flate-png"),
    "rgb_png_predictor.pdf": lambda: single(9, "flate-png", color=True),
    "gray_asciihex.pdf": lambda: single(10, "ahx", shape=(48, 64)),
    "rgb_ascii85_flate.pdf": lambda: single(11, "a85-flate", color=True),
    "gray_runlength.pdf": lambda: single(12, "runlength"),
    "odd_dims.pdf": lambda: single(13, shape=(77, 101)),
    "multipage_table.pdf": lambda: multi_page(20),
    "multipage_objstm.pdf": lambda: multi_page(30, "stream", object_streams=True),
    "mixed_encodings.pdf": lambda: mixed_encodings(40),
    "form_nested.pdf": lambda: form_nested(50),
    "shared_image.pdf": lambda: shared_image(60),
    "icc_based.pdf": lambda: icc(70),
    "unsupported_images.pdf": lambda: unsupported(80),
    "updated_table.pdf": lambda: updated(90),
    "updated_stream.pdf": lambda: updated(91, "stream"),
    "large_rgb.pdf": lambda: single(100, color=True, shape=(256, 320)),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", nargs="?", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args(argv)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, make in CORPUS.items():
        (args.outdir / name).write_bytes(make())
        print(name)


if __name__ == "__main__":
    main()
