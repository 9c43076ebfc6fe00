"""Distortion measures: Hamming distance, RMSE, PSNR, relative entropy."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DimensionMismatch, NonBinaryInput


def _same_shape(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    return a, b


def hamming(m1, m2) -> float:
    """Fraction of positions where two binary patterns disagree."""
    a, b = _same_shape(m1, m2)
    for arr in (a, b):
        if arr.dtype != bool and not np.isin(arr, (0, 1)).all():
            raise NonBinaryInput("hamming distance needs 0/1 patterns")
    if a.size == 0:
        raise DimensionMismatch("empty patterns")
    return float(np.count_nonzero(a.astype(bool) != b.astype(bool))) / a.size


def mse(a, b) -> float:
    a, b = _same_shape(a, b)
    diff = a.astype(np.float64) - b.astype(np.float64)
    return float(np.mean(diff * diff))


def rmse(a, b) -> float:
    return math.sqrt(mse(a, b))


def psnr(a, b, peak: float = 255.0) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical inputs.

    Multichannel inputs are averaged over all samples jointly.
    """
    err = mse(a, b)
    if err == 0:
        return math.inf
    return 10.0 * math.log10(peak * peak / err)


def histogram(img, bins: int = 256) -> np.ndarray:
    """Normalized intensity histogram over integer levels ``0 .. bins-1``,
    additively smoothed by ``1 / (n_pixels * bins)`` so no bin is empty."""
    arr = np.asarray(img)
    n = arr.size
    counts, _ = np.histogram(arr, bins=bins, range=(0, bins))
    p = counts / n + 1.0 / (n * bins)
    return p / p.sum()


def relative_entropy(a, b, bins: int = 256) -> float:
    """Kullback-Leibler divergence KL(P_a || P_b) in nats between smoothed
    intensity histograms. ``a`` is the original, ``b`` the distorted one."""
    p = histogram(a, bins)
    q = histogram(b, bins)
    return max(0.0, float(np.sum(p * np.log(p / q))))


def format_db(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.4f}"


@dataclass
class DistortionReport:
    ham: float | None
    rmse: float
    psnr: float
    relent: float

    def to_dict(self) -> dict:
        d = asdict(self)
        if math.isinf(self.psnr):
            d["psnr"] = "inf"
        return d

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            if value is None:
                value = "n/a"
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> DistortionReport:
        psnr_val = d["psnr"]
        return cls(
            ham=d.get("ham"),
            rmse=float(d["rmse"]),
            psnr=math.inf if psnr_val == "inf" else float(psnr_val),
            relent=float(d["relent"]),
        )


def compare(original, distorted, peak: float = 255.0) -> DistortionReport:
    """All four measures at once; ``ham`` only when both inputs are binary."""
    a, b = _same_shape(original, distorted)
    binary = all(arr.dtype == bool or np.isin(arr, (0, 1)).all() for arr in (a, b))
    return DistortionReport(
        ham=hamming(a, b) if binary else None,
        rmse=rmse(a, b),
        psnr=psnr(a, b, peak),
        relent=relative_entropy(a, b),
    )
