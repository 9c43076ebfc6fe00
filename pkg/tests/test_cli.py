import json
import os

import numpy as np
import pytest

from pdfmark import cli
from pdfmark.imageio import encode_mark_png, encode_png, load_image
from pdfmark.samples import synthetic_cover, synthetic_mark


@pytest.fixture
def work(tmp_path, corpus_files):
    (tmp_path / "mark.png").write_bytes(encode_mark_png(synthetic_mark()))
    (tmp_path / "cover.png").write_bytes(encode_png(synthetic_cover(0, (128, 128))))
    src = next(p for p in corpus_files if p.name == "rgb_flate_table.pdf")
    (tmp_path / "doc.pdf").write_bytes(src.read_bytes())
    return tmp_path


def run(*args):
    return cli.main([str(a) for a in args])


def test_parser_defaults():
    args = cli.build_parser().parse_args(["embed", "in.pdf", "-o", "out.pdf", "--mark", "m.png"])
    params = cli.make_params(args)
    assert (params.v, params.u) == (3, 1)
    assert args.image == "all" and args.mode == "spatial"


def test_parser_freq_params():
    args = cli.build_parser().parse_args(
        ["detect", "in.pdf", "-o", "m.png", "--mode", "freq", "--wavelet", "sym4", "--band", "cH",
         "--fraction", "0.7", "--brightness", "150", "--channel", "all"]
    )
    p = cli.make_params(args)
    assert (p.wavelet.name, p.band, p.fraction, p.brightness, str(p.policy)) == ("sym4", "cH", 0.7, 150.0, "all")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate", "x"],
        ["embed", "in.pdf", "--mark", "m.png"],  # missing -o
        ["embed", "in.pdf", "-o", "o.pdf", "--mark", "m.png", "--mode", "wavelet"],
        ["embed", "in.pdf", "-o", "o.pdf", "--mark", "m.png", "--plane-v", "x"],
    ],
)
def test_argparse_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == cli.EXIT_USAGE


@pytest.mark.parametrize(
    "extra",
    [
        ["--plane-v", "1", "--plane-u", "2"],
        ["--plane-v", "9"],
        ["--mode", "freq", "--wavelet", "db99"],
        ["--mode", "freq", "--fraction", "0"],
        ["--mode", "freq", "--brightness", "-3"],
        ["--channel", "purple"],
        ["--image", "first"],
    ],
)
def test_invalid_params_exit_1_before_writing(work, extra):
    out = work / "out.pdf"
    assert run("embed", work / "doc.pdf", "-o", out, "--mark", work / "mark.png", *extra) == cli.EXIT_USAGE
    assert not out.exists()


def test_remove_freq_is_usage_error(work):
    assert run("remove", work / "doc.pdf", "-o", work / "o.pdf", "--mode", "freq") == cli.EXIT_USAGE


def test_processing_errors_exit_2(work):
    assert run("embed", work / "missing.pdf", "-o", work / "o.pdf", "--mark", work / "mark.png") == cli.EXIT_FAILURE
    (work / "junk.pdf").write_bytes(b"%PDF-1.7\nnot really a pdf\n")
    assert run("embed", work / "junk.pdf", "-o", work / "o.pdf", "--mark", work / "mark.png") == cli.EXIT_FAILURE
    assert run("embed", work / "doc.pdf", "-o", work / "o.pdf", "--mark", work / "mark.png", "--image", "3:0") == cli.EXIT_FAILURE
    assert not (work / "o.pdf").exists()


def test_failed_run_leaves_existing_output_untouched(work):
    out = work / "out.pdf"
    out.write_bytes(b"previous contents")
    (work / "junk.pdf").write_bytes(b"%PDF-1.7\ntruncated")
    assert run("embed", work / "junk.pdf", "-o", out, "--mark", work / "mark.png") == cli.EXIT_FAILURE
    assert out.read_bytes() == b"previous contents"
    assert [p.name for p in work.iterdir() if p.name.endswith(".tmp")] == []


def test_atomic_write_cleans_up_on_error(tmp_path, monkeypatch):
    target = tmp_path / "x.bin"
    target.write_bytes(b"old")

    def boom(src, dst):
        raise OSError("disk full")

    monkeypatch.setattr(os, "replace", boom)
    with pytest.raises(OSError):
        cli.atomic_write(target, b"new")
    assert target.read_bytes() == b"old"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["x.bin"]


def test_embed_detect_pdf(work):
    out, rep = work / "s.pdf", work / "r.json"
    assert run("embed", work / "doc.pdf", "-o", out, "--mark", work / "mark.png", "--report", rep) == 0
    report = json.loads(rep.read_text())
    assert report["command"] == "embed" and report["images"][0]["psnr"] > 40
    found, drep = work / "m.png", work / "d.json"
    assert run("detect", out, "-o", found, "--reference", work / "mark.png", "--report", drep) == 0
    assert json.loads(drep.read_text())["images"][0]["distortion"]["ham"] == 0
    assert json.loads(drep.read_text())["images"][0]["distortion"]["psnr"] == "inf"


def test_png_input(work):
    out = work / "s.png"
    assert run("embed", work / "cover.png", "-o", out, "--mark", work / "mark.png", "--mode", "freq") == 0
    assert load_image(out).shape == (128, 128)
    assert run("detect", out, "-o", work / "m.png", "--mode", "freq", "--mark-size", "32x32") == 0
    assert load_image(work / "m.png").shape == (32, 32)


def test_text_report_header_and_determinism(work):
    outs = []
    for i in range(2):
        out, rep = work / f"s{i}.pdf", work / f"r{i}.txt"
        assert run("embed", work / "doc.pdf", "-o", out, "--mark", work / "mark.png", "--report", rep) == 0
        outs.append((out.read_bytes(), rep.read_text().splitlines()))
    (a, ra), (b, rb) = outs
    assert a == b
    assert ra[0].startswith("# ") and rb[0].startswith("# ")
    assert ra[1:] == rb[1:]
    assert all("=" in line for line in ra[1:])


def test_json_report_deterministic(work):
    reps = []
    for i in range(2):
        rep = work / f"r{i}.json"
        run("embed", work / "doc.pdf", "-o", work / f"s{i}.pdf", "--mark", work / "mark.png", "--report", rep)
        reps.append(rep.read_bytes())
    assert reps[0] == reps[1]


def test_clean_input_warns(work, caplog):
    with caplog.at_level("WARNING"):
        assert run("detect", work / "doc.pdf", "-o", work / "m.png") == 0
    assert "unmarked" in caplog.text


def test_resample_warning(work, caplog):
    with caplog.at_level("WARNING"):
        run("embed", work / "doc.pdf", "-o", work / "s.pdf", "--mark", work / "mark.png")
    assert "resampled" in caplog.text


def test_multi_image_detect_suffixes(work, corpus_files):
    src = next(p for p in corpus_files if p.name == "multipage_table.pdf")
    assert run("embed", src, "-o", work / "s.pdf", "--mark", work / "mark.png") == 0
    assert run("detect", work / "s.pdf", "-o", work / "m.png") == 0
    assert sorted(p.name for p in work.glob("m-*.png")) == [
        "m-p0-i0.png", "m-p1-i0.png", "m-p1-i1.png", "m-p2-i0.png", "m-p2-i1.png", "m-p2-i2.png"
    ]


def test_remove_reports_psnr(work):
    assert run("embed", work / "doc.pdf", "-o", work / "v.pdf", "--mark", work / "mark.png",
               "--plane-v", "7", "--plane-u", "2") == 0
    rep = work / "r.json"
    assert run("remove", work / "v.pdf", "-o", work / "c.pdf", "--plane-v", "7", "--plane-u", "2",
               "--reference", work / "doc.pdf", "--report", rep) == 0
    assert 40 < json.loads(rep.read_text())["images"][0]["psnr"] < 60


def test_sweep_table(work, capsys):
    assert run("sweep", work / "cover.png", "--a-range", "20", "--wavelets", "db1") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "a\twavelet\tham\trelent\tpsnr" and len(lines) == 2
    out = work / "t.csv"
    assert run("sweep", work / "doc.pdf", "--a-range", "20:60:20", "--wavelets", "db1,db6",
               "--delimiter", ",", "-o", out) == 0
    assert len(out.read_text().splitlines()) == 7


def test_sweep_bad_wavelet(work):
    assert run("sweep", work / "cover.png", "--wavelets", "db1,haarx") == cli.EXIT_USAGE


def test_roundtrip_command(work, capsys):
    assert run("roundtrip", work / "doc.pdf") == 0
    assert "PASS" in capsys.readouterr().out


def test_log_level_env(work, monkeypatch):
    monkeypatch.setenv("PDFMARK_LOG_LEVEL", "debug")
    assert run("roundtrip", work / "doc.pdf") == 0


def test_duplicated_plane_cover_detects_all_zero(work, caplog):
    from pdfmark.spatial import SpatialParams, duplicate_plane

    cover = duplicate_plane(synthetic_cover(1, (40, 40)), SpatialParams())
    (work / "dup.png").write_bytes(encode_png(cover))
    with caplog.at_level("WARNING"):
        assert run("detect", work / "dup.png", "-o", work / "m.png") == 0
    assert "empty" in caplog.text
    assert not load_image(work / "m.png").any()


def test_freq_detect_against_reference(work):
    rep = work / "r.json"
    assert run("embed", work / "cover.png", "-o", work / "s.png", "--mark", work / "mark.png",
               "--mode", "freq", "--brightness", "20", "--fraction", "0.5") == 0
    assert run("detect", work / "s.png", "-o", work / "m.png", "--mode", "freq", "--brightness", "20",
               "--fraction", "0.5", "--reference", work / "mark.png", "--report", rep) == 0
    assert json.loads(rep.read_text())["images"][0]["distortion"]["ham"] < 0.05


def test_freq_visible_psnr_lower(work):
    psnrs = []
    for a in (50, 150):
        rep = work / f"r{a}.json"
        assert run("embed", work / "doc.pdf", "-o", work / f"s{a}.pdf", "--mark", work / "mark.png",
                   "--mode", "freq", "--brightness", a, "--fraction", "0.7", "--report", rep) == 0
        psnrs.append(json.loads(rep.read_text())["images"][0]["psnr"])
    assert psnrs[1] < psnrs[0] - 6
