import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from pdfmark.errors import RegionTooSmall
from pdfmark.frequency import (
    FreqParams,
    RegionSpec,
    detect_frequency,
    embed_frequency,
    region_coefficients,
    select_region,
)
from pdfmark.metrics import hamming, psnr
from pdfmark.raster import ChannelPolicy
from pdfmark.samples import synthetic_cover, synthetic_mark
from pdfmark.wavelet import dwt2

WAVELETS = ["db1", "db2", "db4", "db6", "sym4", "sym8"]


# -- region -------------------------------------------------------------------


@pytest.mark.parametrize(
    "band,u,expected",
    [((100, 80), 0.9, (90, 80)), ((10, 10), 1.0, (10, 10)), ((64, 64), 0.5, (32, 64)), ((100, 7), 0.29, (29, 7))],
)
def test_select_region(band, u, expected):
    r = select_region(band, u)
    assert (r.row_count, r.col_count) == expected


def test_region_ninety_percent():
    assert select_region((100, 80), 0.9).size == 7200


def test_region_too_small():
    with pytest.raises(RegionTooSmall):
        select_region((3, 40), 0.2)


@given(st.integers(1, 500), st.integers(1, 500), st.floats(0.001, 1.0))
def test_region_bound(rows, cols, u):
    try:
        r = select_region((rows, cols), u)
    except RegionTooSmall:
        assert u * rows < 1 + 1e-9
        return
    assert 1 <= r.row_count <= rows and r.col_count == cols
    assert r.size <= u * rows * cols + cols


@pytest.mark.parametrize("kw", [{"fraction": 0}, {"fraction": 1.5}, {"brightness": 0}, {"band": "cX"}])
def test_param_validation(kw):
    with pytest.raises(ValueError):
        FreqParams(**kw)


def test_default_policy_by_brightness():
    assert FreqParams(brightness=20).policy == ChannelPolicy.single(2)
    assert FreqParams(brightness=150).policy == ChannelPolicy.all()


# -- embedding ----------------------------------------------------------------


def test_zero_mark_zeroes_region_only():
    cover = synthetic_cover(0, (64, 64))
    p = FreqParams("db2", "cD", 0.5, 40.0)
    stego = embed_frequency(cover, np.zeros((8, 8), np.uint8), p, quantize=False)
    before, after = dwt2(cover.astype(float), "db2"), dwt2(stego, "db2")
    assert np.abs(after.cD[:16]).max() < 1e-9
    np.testing.assert_allclose(after.cD[16:], before.cD[16:], atol=1e-9)
    for b in ("cA", "cH", "cV"):
        np.testing.assert_allclose(after.band(b), before.band(b), atol=1e-9)


@pytest.mark.parametrize("name", WAVELETS)
@pytest.mark.parametrize("band", ["cA", "cH", "cV", "cD"])
def test_real_valued_roundtrip(name, band):
    cover = synthetic_cover(1, (64, 96))
    mark = synthetic_mark((32, 48))
    p = FreqParams(name, band, 1.0, 20.0)
    stego = embed_frequency(cover, mark, p, quantize=False)
    assert hamming(mark, detect_frequency(stego, p, mark.shape)) == 0


@given(
    st.sampled_from(WAVELETS),
    st.sampled_from([0.25, 0.5, 0.75, 1.0]),
    st.floats(0.5, 400),
    st.integers(0, 2**31),
)
def test_real_valued_roundtrip_property(name, u, a, seed):
    rng = np.random.default_rng(seed)
    cover = rng.integers(0, 256, (32, 32), dtype=np.uint8)
    rows = int(np.floor(u * 16 + 1e-9))
    mark = rng.integers(0, 2, (rows, 16), dtype=np.uint8)
    p = FreqParams(name, "cD", u, a)
    stego = embed_frequency(cover, mark, p, quantize=False)
    np.testing.assert_array_equal(detect_frequency(stego, p, mark.shape), mark)


@given(st.sampled_from(WAVELETS), st.floats(1, 600), st.integers(0, 2**31))
def test_quantized_output_is_8bit(name, a, seed):
    rng = np.random.default_rng(seed)
    cover = rng.integers(0, 256, (24, 20), dtype=np.uint8)
    mark = rng.integers(0, 2, (6, 5), dtype=np.uint8)
    stego = embed_frequency(cover, mark, FreqParams(name, "cD", 0.5, a))
    assert stego.dtype == np.uint8 and stego.shape == cover.shape


def test_invisible_db1_low_error():
    cover = synthetic_cover(2)
    mark = synthetic_mark()
    p = FreqParams("db1", "cD", 0.5, 20.0)
    assert hamming(mark, detect_frequency(embed_frequency(cover, mark, p), p, mark.shape)) < 0.05


def test_all_ones_mark_a100_on_16x16():
    # brute force over a few smooth 16x16 covers
    for seed in range(5):
        cover = synthetic_cover(seed, (16, 16))
        mark = np.ones((4, 8), dtype=np.uint8)
        p = FreqParams("db1", "cD", 0.5, 100.0)
        found = detect_frequency(embed_frequency(cover, mark, p), p, mark.shape)
        assert hamming(mark, found) < 0.01


def test_visible_mark_lowers_psnr():
    cover = synthetic_cover(3)
    mark = synthetic_mark()
    low = psnr(cover, embed_frequency(cover, mark, FreqParams("db1", "cD", 0.7, 50.0)))
    high = psnr(cover, embed_frequency(cover, mark, FreqParams("db1", "cD", 0.7, 150.0)))
    assert high < low - 6


def test_rgb_default_touches_blue_only():
    cover = synthetic_cover(4, (32, 32), color=True)
    mark = synthetic_mark((8, 16))
    p = FreqParams("db1", "cD", 0.5, 20.0)
    stego = embed_frequency(cover, mark, p)
    np.testing.assert_array_equal(stego[..., :2], cover[..., :2])
    assert hamming(mark, detect_frequency(stego, p, mark.shape)) < 0.1


def test_rgb_all_channels_averages():
    cover = synthetic_cover(5, (32, 32), color=True)
    mark = synthetic_mark((8, 16))
    p = FreqParams("db2", "cD", 0.5, 60.0, ChannelPolicy.all())
    stego = embed_frequency(cover, mark, p, quantize=False)
    np.testing.assert_allclose(region_coefficients(stego, p), 60.0 * mark, atol=1e-9)


def test_detect_returns_requested_dims():
    cover = synthetic_cover(6, (50, 70))
    p = FreqParams("sym4", "cD", 0.5, 30.0)
    stego = embed_frequency(cover, synthetic_mark(), p)
    assert detect_frequency(stego, p, (32, 32)).shape == (32, 32)


def test_region_spec_size():
    assert RegionSpec(3, 4).size == 12
