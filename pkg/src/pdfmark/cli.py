"""Command-line driver.

    pdfmark embed     INPUT -o OUTPUT --mark MARK [scheme flags]
    pdfmark detect    INPUT -o MARK_OUT [--reference MARK] [scheme flags]
    pdfmark remove    INPUT -o OUTPUT [--reference ORIGINAL] [spatial flags]
    pdfmark sweep     INPUT [-o TABLE] --a-range 20:300:20 --wavelets db1,db6
    pdfmark roundtrip INPUT

INPUT is a PDF (its images are processed) or a standalone image file.
Exit status: 0 success, 1 usage error, 2 processing error. Set
``PDFMARK_LOG_LEVEL`` (e.g. ``DEBUG``) to change log verbosity.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import pipeline
from .errors import PdfmarkError
from .frequency import FreqParams
from .imageio import decode_image, encode_mark_png, encode_png, is_pdf, load_mark
from .metrics import compare, psnr
from .pdf import PdfDocument, extract_image, list_images, roundtrip_check
from .raster import ChannelPolicy, resample_nearest
from .samples import synthetic_mark
from .spatial import SpatialParams

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

# neighbour agreement below which a detected pattern is reported as noise
NOISE_AGREEMENT = 0.75

logger = logging.getLogger("pdfmark")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class JobConfig:
    input: Path
    output: Path | None
    selector: str
    mode: str
    params: SpatialParams | FreqParams
    mark: Path | None
    report: Path | None
    reference: Path | None
    jobs: int = 1


def atomic_write(path: Path, data: bytes):
    """Write via a temporary file in the same directory and rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _scheme_flags(p):
    p.add_argument("--mode", choices=("spatial", "freq"), default="spatial")
    p.add_argument("--plane-v", type=int, default=None, help="embedding bit plane, 1..8 (default 3)")
    p.add_argument("--plane-u", type=int, default=None, help="copy bit plane below V (default 1)")
    p.add_argument("--wavelet", default="db1", help="db1..db45 or sym2..sym20")
    p.add_argument("--band", choices=("cA", "cH", "cV", "cD"), default="cD")
    p.add_argument("--fraction", type=float, default=0.5, help="share u of band rows marked")
    p.add_argument("--brightness", type=float, default=20.0, help="mark scale a")
    p.add_argument("--channel", default=None, help="all, red/green/blue or 0..2 (default depends on visibility)")


def _common_flags(p):
    p.add_argument("input", type=Path)
    p.add_argument("--image", default="all", help="'all' or 'page:index' (0-based)")
    p.add_argument("--report", type=Path, default=None, help="report file (.json for JSON)")
    p.add_argument("--jobs", type=int, default=1, help="images processed in parallel")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pdfmark", description="Watermark images inside PDF documents.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("embed", help="embed a binary mark")
    _common_flags(p)
    _scheme_flags(p)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--mark", type=Path, required=True, help="mark image, thresholded at 128")

    p = sub.add_parser("detect", help="extract an embedded mark")
    _common_flags(p)
    _scheme_flags(p)
    p.add_argument("-o", "--output", type=Path, required=True, help="PNG for the detected mark")
    p.add_argument("--reference", type=Path, default=None, help="original mark for ham/psnr")
    p.add_argument("--mark-size", default=None, help="ROWSxCOLS of the mark (frequency mode)")

    p = sub.add_parser("remove", help="remove a visible bit-plane mark")
    _common_flags(p)
    _scheme_flags(p)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--reference", type=Path, default=None, help="original cover for PSNR")

    p = sub.add_parser("sweep", help="frequency embedding sweep over brightness and wavelets")
    _common_flags(p)
    _scheme_flags(p)
    p.add_argument("-o", "--output", type=Path, default=None, help="table file (default stdout)")
    p.add_argument("--mark", type=Path, default=None, help="mark image (default built-in 32x32 logo)")
    p.add_argument("--a-range", default="20:300:20", help="start:stop:step or comma list")
    p.add_argument("--wavelets", default="db1,db6")
    p.add_argument("--delimiter", default="\t")

    p = sub.add_parser("roundtrip", help="check lossless extract/reinsert for every image")
    p.add_argument("input", type=Path)
    p.add_argument("--report", type=Path, default=None)
    return parser


def make_params(args):
    channel = ChannelPolicy.parse(args.channel) if args.channel else None
    if args.mode == "spatial" and args.command != "sweep":
        v = 3 if args.plane_v is None else args.plane_v
        u = 1 if args.plane_u is None else args.plane_u
        return SpatialParams(v, u, channel)
    return FreqParams(args.wavelet, args.band, args.fraction, args.brightness, channel)


def make_config(args) -> JobConfig:
    try:
        params = make_params(args)
    except (ValueError, PdfmarkError) as exc:
        raise UsageError(str(exc)) from exc
    if args.image != "all" and not re.fullmatch(r"\d+:\d+", args.image):
        raise UsageError(f"--image must be 'all' or 'page:index', got {args.image!r}")
    return JobConfig(
        input=args.input,
        output=getattr(args, "output", None),
        selector=args.image,
        mode=args.mode,
        params=params,
        mark=getattr(args, "mark", None),
        report=args.report,
        reference=getattr(args, "reference", None),
        jobs=max(1, args.jobs),
    )


def _settings(cfg: JobConfig) -> dict:
    p = cfg.params
    if isinstance(p, SpatialParams):
        return {"mode": "spatial", "plane_v": p.v, "plane_u": p.u, "channel": str(p.policy)}
    return {
        "mode": "freq",
        "wavelet": p.wavelet.name,
        "band": p.band,
        "fraction": p.fraction,
        "brightness": p.brightness,
        "channel": str(p.policy),
    }


def _write_report(cfg: JobConfig, report):
    if cfg.report is not None:
        atomic_write(cfg.report, report.render(cfg.report).encode())


def _read(path: Path) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _numbered(path: Path, label: str, many: bool) -> Path:
    if not many:
        return path
    page, index = label.split(":")
    return path.with_name(f"{path.stem}-p{page}-i{index}{path.suffix}")


def cmd_embed(cfg: JobConfig) -> int:
    from .report import Report

    mark = load_mark(cfg.mark)
    data = _read(cfg.input)
    report = Report("embed", _settings(cfg))
    if is_pdf(data):
        out, results = pipeline.embed_pdf(data, mark, cfg.params, cfg.selector, cfg.jobs)
        for r in results:
            report.add(r.label, object=f"{r.ref.object_id.num} {r.ref.object_id.gen}", psnr=r.psnr)
            logger.info("embedded into %s, PSNR %.2f dB", r.label, r.psnr)
    else:
        cover = decode_image(data)
        stego = pipeline.embed(cover, mark, cfg.params)
        out = encode_png(stego)
        report.add("0:0", psnr=psnr(cover, stego))
    atomic_write(cfg.output, out)
    _write_report(cfg, report)
    return EXIT_OK


def _looks_unmarked(pattern) -> str | None:
    """Heuristic only: real marks are blocky, the XOR of two unrelated
    planes is close to noise (neighbouring bits agree about half the time)."""
    if not pattern.any():
        return "detected pattern is empty; input may be unmarked"
    agree = []
    if pattern.shape[1] > 1:
        agree.append(np.mean(pattern[:, 1:] == pattern[:, :-1]))
    if pattern.shape[0] > 1:
        agree.append(np.mean(pattern[1:] == pattern[:-1]))
    if agree and np.mean(agree) < NOISE_AGREEMENT:
        return "detected pattern looks like noise; input may be unmarked"
    return None


def _mark_dims(args, reference):
    if reference is not None:
        return reference.shape
    if args.mark_size:
        try:
            rows, cols = (int(x) for x in args.mark_size.lower().split("x"))
        except ValueError as exc:
            raise UsageError(f"--mark-size must look like 32x32, got {args.mark_size!r}") from exc
        return rows, cols
    return None


def cmd_detect(cfg: JobConfig, mark_dims=None) -> int:
    from .report import Report

    reference = load_mark(cfg.reference) if cfg.reference else None
    if reference is not None:
        mark_dims = reference.shape
    data = _read(cfg.input)
    report = Report("detect", _settings(cfg))
    if is_pdf(data):
        found = [(label, p) for label, _, p in pipeline.detect_pdf(data, cfg.params, cfg.selector, mark_dims, cfg.jobs)]
    else:
        found = [("0:0", pipeline.detect(decode_image(data), cfg.params, mark_dims))]
    outputs = []
    for label, pattern in found:
        warning = _looks_unmarked(pattern) if isinstance(cfg.params, SpatialParams) else None
        if warning:
            logger.warning("%s: %s", label, warning)
        entry = {"ones_fraction": float(pattern.mean())}
        if reference is not None:
            ref = reference if reference.shape == pattern.shape else resample_nearest(reference, pattern.shape)
            entry["distortion"] = compare(ref, pattern)
        report.add(label, **entry)
        outputs.append((_numbered(cfg.output, label, len(found) > 1), encode_mark_png(pattern)))
    for path, payload in outputs:
        atomic_write(path, payload)
    _write_report(cfg, report)
    return EXIT_OK


def _reference_images(path: Path, labels):
    data = _read(path)
    if not is_pdf(data):
        return {"0:0": decode_image(data)}
    doc = PdfDocument(data)
    refs = list_images(doc)
    out = {}
    for ref in refs:
        label = pipeline.image_label(ref, refs)
        if label in labels and ref.supported:
            out[label] = extract_image(doc, ref)
    return out


def cmd_remove(cfg: JobConfig) -> int:
    from .report import Report

    if not isinstance(cfg.params, SpatialParams):
        raise UsageError("remove supports --mode spatial only")
    data = _read(cfg.input)
    report = Report("remove", _settings(cfg))
    if is_pdf(data):
        out, results = pipeline.remove_pdf(data, cfg.params, cfg.selector, cfg.jobs)
        restored = {r.label: r.after for r in results}
    else:
        img = pipeline.remove(decode_image(data), cfg.params)
        out = encode_png(img)
        restored = {"0:0": img}
    originals = _reference_images(cfg.reference, set(restored)) if cfg.reference else {}
    for label, img in restored.items():
        entry = {}
        if label in originals:
            entry["psnr"] = psnr(originals[label], img)
            entry["distortion"] = compare(originals[label], img)
        report.add(label, **entry)
    atomic_write(cfg.output, out)
    _write_report(cfg, report)
    return EXIT_OK


def cmd_sweep(cfg: JobConfig, a_values, wavelets, delimiter="\t") -> int:
    mark = load_mark(cfg.mark) if cfg.mark else synthetic_mark()
    data = _read(cfg.input)
    if is_pdf(data):
        doc = PdfDocument(data)
        refs = list_images(doc)
        chosen = pipeline.select_images(refs, cfg.selector)
        if not chosen:
            raise PdfmarkError("no supported image to sweep over")
        cover = extract_image(doc, chosen[0])
    else:
        cover = decode_image(data)
    p = cfg.params
    rows = pipeline.sweep(cover, mark, a_values, wavelets, p.fraction, p.band, p.channel)
    table = pipeline.format_sweep(rows, delimiter)
    if cfg.output is None:
        sys.stdout.write(table)
    else:
        atomic_write(cfg.output, table.encode())
    return EXIT_OK


def cmd_roundtrip(path: Path, report_path: Path | None = None) -> int:
    from .report import Report

    results = roundtrip_check(_read(path))
    report = Report("roundtrip")
    refs = [r.ref for r in results]
    for res in results:
        label = pipeline.image_label(res.ref, refs)
        print(f"{res.status.upper():7} {label:6} {res.ref}" + (f"  ({res.detail})" if res.detail else ""))
        report.add(label, status=res.status, object=f"{res.ref.object_id.num} {res.ref.object_id.gen}")
    if report_path is not None:
        atomic_write(report_path, report.render(report_path).encode())
    failed = sum(1 for r in results if r.status == "fail")
    print(f"{len(results)} image(s), {failed} failed")
    return EXIT_FAILURE if failed else EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(
        level=os.environ.get("PDFMARK_LOG_LEVEL", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "roundtrip":
            return cmd_roundtrip(args.input, args.report)
        cfg = make_config(args)
        if args.command == "embed":
            return cmd_embed(cfg)
        if args.command == "detect":
            return cmd_detect(cfg, _mark_dims(args, None))
        if args.command == "remove":
            return cmd_remove(cfg)
        if args.command == "sweep":
            try:
                a_values = pipeline.parse_range(args.a_range)
                wavelets = [w.strip() for w in args.wavelets.split(",") if w.strip()]
                for w in wavelets:
                    FreqParams(w, args.band, args.fraction)
            except (ValueError, PdfmarkError) as exc:
                raise UsageError(str(exc)) from exc
            if not a_values or not wavelets:
                raise UsageError("sweep needs at least one brightness and one wavelet")
            return cmd_sweep(cfg, a_values, wavelets, args.delimiter)
    except UsageError as exc:
        print(f"pdfmark: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PdfmarkError, OSError, ValueError) as exc:
        print(f"pdfmark: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
