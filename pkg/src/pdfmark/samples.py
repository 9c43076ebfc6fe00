"""Deterministic synthetic covers and marks.

The covers imitate page fragments: a smooth photographic-looking region,
soft shapes, mild sensor noise, dark text-like strokes and a saturated white
margin. They stand in for test images that are not redistributable.
"""

from __future__ import annotations

import numpy as np


def synthetic_cover(seed: int, shape=(128, 128), color: bool = False) -> np.ndarray:
    rng = np.random.default_rng(seed)
    rows, cols = shape
    y, x = np.mgrid[0:rows, 0:cols] / max(rows, cols)
    img = 90 + 80 * (rng.uniform(-1, 1) * x + rng.uniform(-1, 1) * y)
    for _ in range(6):
        cy, cx = rng.uniform(0, 1, 2)
        r = rng.uniform(0.05, 0.3)
        img += rng.uniform(-90, 90) * np.exp(-((x - cx) ** 2 + (y - cy) ** 2) / (2 * r * r))
    img += rng.normal(0, 4, shape)
    # white margin and a few dark strokes
    margin = int(rng.integers(rows // 8, rows // 4))
    img[:margin, :] = 255
    for _ in range(int(rng.integers(3, 7))):
        r0 = int(rng.integers(0, max(1, margin - 3)))
        c0 = int(rng.integers(0, cols // 2))
        img[r0 : r0 + 2, c0 : c0 + int(rng.integers(cols // 6, cols // 2))] = 20
    img = np.clip(np.rint(img), 0, 255).astype(np.uint8)
    if not color:
        return img
    tint = rng.uniform(0.8, 1.2, 3)
    return np.clip(np.rint(img[..., None] * tint), 0, 255).astype(np.uint8)


def synthetic_mark(shape=(32, 32)) -> np.ndarray:
    """A ring with a cross bar: an easy to recognize binary logo."""
    rows, cols = shape
    y, x = np.mgrid[0:rows, 0:cols]
    cy, cx = (rows - 1) / 2, (cols - 1) / 2
    r = np.hypot((y - cy) / rows, (x - cx) / cols)
    ring = (r > 0.28) & (r < 0.42)
    bar = (np.abs(y - cy) < rows / 10) & (np.abs(x - cx) < cols * 0.3)
    return (ring | bar).astype(np.uint8)


def random_mark(seed: int, shape=(32, 32)) -> np.ndarray:
    return np.random.default_rng(seed).integers(0, 2, shape, dtype=np.uint8)
