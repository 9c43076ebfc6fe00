"""Compare the compiled filter-bank kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--size 512] [--repeat 5]

Times one analysis + synthesis pass along the last axis (the inner loop of
dwt2/idwt2) and a full dwt2/idwt2 round trip under each backend.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from pdfmark.wavelet import _backend, _pykernels, build_filters, dwt2, idwt2

try:
    from pdfmark.wavelet import _ckernels
except ImportError:
    _ckernels = None


def bench_kernel(mod, x, fb, repeat):
    def run():
        a, d = mod.analysis(x, fb.rec_lo, fb.rec_hi)
        mod.synthesis(a, d, fb.rec_lo, fb.rec_hi)

    return min(timeit.repeat(run, number=1, repeat=repeat))


def bench_transform(mod, x, name, repeat):
    saved = _backend.analysis, _backend.synthesis
    _backend.analysis, _backend.synthesis = mod.analysis, mod.synthesis
    try:
        return min(timeit.repeat(lambda: idwt2(dwt2(x, name), name), number=1, repeat=repeat))
    finally:
        _backend.analysis, _backend.synthesis = saved


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=512)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--wavelets", default="db1,db4,db8,sym8,db20")
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    x = np.random.default_rng(0).random((args.size, args.size)) * 255
    print(f"image {args.size}x{args.size}, best of {args.repeat}")
    print(f"{'wavelet':8} {'kernel numpy':>13} {'kernel cython':>14} {'speedup':>8} {'dwt2+idwt2 numpy':>17} {'cython':>9} {'speedup':>8}")
    for name in args.wavelets.split(","):
        fb = build_filters(name)
        kp = bench_kernel(_pykernels, x, fb, args.repeat)
        kc = bench_kernel(_ckernels, x, fb, args.repeat)
        tp = bench_transform(_pykernels, x, name, args.repeat)
        tc = bench_transform(_ckernels, x, name, args.repeat)
        print(f"{name:8} {kp * 1e3:11.2f}ms {kc * 1e3:12.2f}ms {kp / kc:7.1f}x {tp * 1e3:15.2f}ms {tc * 1e3:7.2f}ms {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
