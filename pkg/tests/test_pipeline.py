import numpy as np
import pytest

from pdfmark import pipeline
from pdfmark.errors import UnsupportedCodec
from pdfmark.frequency import FreqParams
from pdfmark.metrics import hamming
from pdfmark.pdf import PdfDocument, extract_image, list_images
from pdfmark.samples import random_mark, synthetic_cover, synthetic_mark
from pdfmark.spatial import SpatialParams, removal_psnr


def corpus(files, name):
    return next(p for p in files if p.name == name).read_bytes()


def test_parse_range():
    assert pipeline.parse_range("20:300:20") == [float(a) for a in range(20, 301, 20)]
    assert pipeline.parse_range("20,50,150") == [20.0, 50.0, 150.0]
    assert pipeline.parse_range("5:5:1") == [5.0]
    with pytest.raises(ValueError):
        pipeline.parse_range("1:5:0")


def test_select_images(corpus_files):
    refs = list_images(corpus(corpus_files, "unsupported_images.pdf"))
    assert len(pipeline.select_images(refs, "all")) == 1
    assert pipeline.select_images(refs, "0:0") == [refs[0]]
    with pytest.raises(UnsupportedCodec):
        pipeline.select_images(refs, "0:1")
    with pytest.raises(ValueError):
        pipeline.select_images(refs, "1:0")
    with pytest.raises(ValueError):
        pipeline.select_images(refs, "first")


def test_labels_count_within_page(corpus_files):
    refs = list_images(corpus(corpus_files, "multipage_table.pdf"))
    assert [pipeline.image_label(r, refs) for r in refs] == ["0:0", "1:0", "1:1", "2:0", "2:1", "2:2"]


def test_spatial_pdf_roundtrip_every_supported_file(corpus_files):
    mark = random_mark(0, (16, 16))
    p = SpatialParams(3, 1)
    for path in corpus_files:
        data = path.read_bytes()
        out, results = pipeline.embed_pdf(data, mark, p)
        for label, ref, found in pipeline.detect_pdf(out, p, mark_dims=mark.shape):
            # marks are resampled up and back down with centre sampling, which is exact
            assert hamming(mark, found) == 0, (path.name, label)


def test_visible_removal_matches_analytic(corpus_files):
    data = corpus(corpus_files, "rgb_flate_table.pdf")
    p = SpatialParams.visible()
    marked, _ = pipeline.embed_pdf(data, synthetic_mark(), p)
    restored, results = pipeline.remove_pdf(marked, p)
    (ref,) = list_images(data)
    cover = extract_image(data, ref)
    from pdfmark.metrics import psnr

    assert psnr(cover, extract_image(restored, ref)) == pytest.approx(removal_psnr(cover, p), abs=1e-9)


def test_parallel_jobs_deterministic(corpus_files):
    data = corpus(corpus_files, "multipage_objstm.pdf")
    mark = synthetic_mark()
    p = FreqParams("db2", "cD", 0.5, 30.0)
    a, ra = pipeline.embed_pdf(data, mark, p, jobs=1)
    b, rb = pipeline.embed_pdf(data, mark, p, jobs=4)
    assert a == b
    assert [r.label for r in ra] == [r.label for r in rb]


def test_embed_changes_only_selected_image(corpus_files):
    data = corpus(corpus_files, "mixed_encodings.pdf")
    refs = list_images(data)
    out, results = pipeline.embed_pdf(data, synthetic_mark(), SpatialParams(), "0:2")
    assert [r.label for r in results] == ["0:2"]
    for i, ref in enumerate(refs):
        same = np.array_equal(extract_image(out, ref), extract_image(data, ref))
        assert same == (i != 2)


def test_remove_rejects_frequency():
    with pytest.raises(ValueError):
        pipeline.remove(np.zeros((4, 4), np.uint8), FreqParams())


def test_sweep_single_point():
    rows = pipeline.sweep(synthetic_cover(0, (32, 32)), synthetic_mark((8, 16)), [20], ["db1"])
    assert len(rows) == 1 and rows[0].wavelet == "db1"
    table = pipeline.format_sweep(rows)
    lines = table.splitlines()
    assert lines[0].split("\t") == list(pipeline.SWEEP_COLUMNS)
    assert len(lines) == 2


def test_sweep_db1_best():
    cover = synthetic_cover(1)
    rows = pipeline.sweep(cover, synthetic_mark(), [20], ["db1", "db2", "db6"])
    ham = {r.wavelet: r.ham for r in rows}
    assert ham["db1"] < ham["db2"] and ham["db1"] < ham["db6"]


def test_document_stays_parseable(corpus_files):
    data = corpus(corpus_files, "updated_stream.pdf")
    out, _ = pipeline.embed_pdf(data, synthetic_mark(), SpatialParams())
    doc = PdfDocument(out)
    assert doc.xref_kind == "stream"
    assert len(list_images(doc)) == len(list_images(data))
