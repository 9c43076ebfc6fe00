import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from pdfmark.errors import PlaneOutOfRange
from pdfmark.metrics import hamming, psnr
from pdfmark.raster import ChannelPolicy
from pdfmark.spatial import (
    SpatialParams,
    bitplane_get,
    detect_spatial,
    duplicate_plane,
    embed_spatial,
    plane_removed_psnr,
    removal_psnr,
    remove_spatial,
)

GRAY = ChannelPolicy.all()


def px(value):
    return np.array([[value]], dtype=np.uint8)


def plane_pairs():
    return st.integers(2, 8).flatmap(lambda v: st.tuples(st.just(v), st.integers(1, v - 1)))


def gray_images(max_side=24):
    return st.tuples(st.integers(1, max_side), st.integers(1, max_side)).flatmap(
        lambda s: arrays(np.uint8, s)
    )


# -- bit planes ---------------------------------------------------------------


def test_bitplane_of_255():
    assert all(bitplane_get(px(255), k)[0, 0] == 1 for k in range(1, 9))


def test_bitplane_of_5():
    assert [int(bitplane_get(px(5), k)[0, 0]) for k in range(1, 9)] == [1, 0, 1, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("plane", [0, 9, -1])
def test_plane_out_of_range(plane):
    with pytest.raises(PlaneOutOfRange):
        bitplane_get(px(1), plane)


@pytest.mark.parametrize("v,u", [(1, 1), (2, 3), (9, 1), (3, 0)])
def test_invalid_params(v, u):
    with pytest.raises(PlaneOutOfRange):
        SpatialParams(v, u)


@given(gray_images())
def test_bitplanes_reconstruct_image(img):
    total = sum(bitplane_get(img, k).astype(np.int64) << (k - 1) for k in range(1, 9))
    np.testing.assert_array_equal(total, img)


def test_bitplane_channel_selection():
    img = np.zeros((2, 2, 3), dtype=np.uint8)
    img[..., 2] = 4
    assert bitplane_get(img, 3, channel=2).all()
    assert not bitplane_get(img, 3, channel=0).any()


# -- duplicate / embed / detect / remove examples ----------------------------


def test_duplicate_examples():
    assert duplicate_plane(px(4), SpatialParams(3, 1))[0, 0] == 5
    for v, u in [(2, 1), (8, 3), (5, 4)]:
        assert duplicate_plane(px(0), SpatialParams(v, u))[0, 0] == 0


def test_duplicate_all_values_against_oracle():
    values = np.arange(256, dtype=np.uint8).reshape(16, 16)
    p = SpatialParams(6, 2)
    got = duplicate_plane(values, p)
    for x, y in zip(values.ravel(), got.ravel()):
        bit = (int(x) >> 5) & 1
        assert int(y) == (int(x) & ~2) | (bit << 1)


def test_embed_pixel_example():
    # C2 pixel 5 (planes 3 and 1 set), mark bit 1 -> 1
    p = SpatialParams(3, 1)
    stego = embed_spatial(px(4), px(1), p)
    assert stego[0, 0] == 1
    assert detect_spatial(stego, p)[0, 0] == 1
    assert remove_spatial(stego, p)[0, 0] == 4


def test_zero_mark_is_duplication():
    rng = np.random.default_rng(1)
    c = rng.integers(0, 256, (12, 9), dtype=np.uint8)
    p = SpatialParams(4, 2)
    np.testing.assert_array_equal(embed_spatial(c, np.zeros((12, 9), np.uint8), p), duplicate_plane(c, p))


def test_embed_matches_literal_formula():
    rng = np.random.default_rng(2)
    c = rng.integers(0, 256, (8, 8), dtype=np.uint8)
    m = rng.integers(0, 2, (8, 8), dtype=np.uint8)
    v, u = 5, 2
    got = embed_spatial(c, m, SpatialParams(v, u))
    for i in range(8):
        for j in range(8):
            x = int(c[i, j])
            bv = (x >> (v - 1)) & 1
            c2 = (x & ~(1 << (u - 1))) | (bv << (u - 1))
            s = c2 - bv * 2 ** (v - 1) + (bv ^ int(m[i, j])) * 2 ** (v - 1)
            assert got[i, j] == s


def test_remove_pixel_example():
    assert remove_spatial(px(1), SpatialParams(3, 1))[0, 0] == 4


def test_remove_with_empty_plane_u_restores_cover():
    rng = np.random.default_rng(3)
    c = rng.integers(0, 256, (16, 16), dtype=np.uint8) & np.uint8(0b11111101)
    p = SpatialParams(7, 2)
    m = rng.integers(0, 2, (16, 16), dtype=np.uint8)
    np.testing.assert_array_equal(remove_spatial(embed_spatial(c, m, p), p), c)


def test_detect_on_duplicated_cover_is_zero():
    c = np.random.default_rng(4).integers(0, 256, (20, 20), dtype=np.uint8)
    p = SpatialParams(3, 1)
    assert not detect_spatial(duplicate_plane(c, p), p).any()


def test_remove_on_unmarked_duplicated_cover_zeros_plane_u():
    c = np.random.default_rng(5).integers(0, 256, (20, 20), dtype=np.uint8)
    p = SpatialParams(3, 1)
    c2 = duplicate_plane(c, p)
    np.testing.assert_array_equal(remove_spatial(c2, p), c2 & np.uint8(0xFE))


def test_remove_then_detect_oracle():
    rng = np.random.default_rng(6)
    c = rng.integers(0, 256, (16, 16), dtype=np.uint8)
    m = rng.integers(0, 2, (16, 16), dtype=np.uint8)
    p = SpatialParams(3, 1)
    cr = remove_spatial(embed_spatial(c, m, p), p)
    # plane U is cleared, so detection reads back plane V of the cover
    np.testing.assert_array_equal(detect_spatial(cr, p), bitplane_get(c, 3))
    np.testing.assert_array_equal(detect_spatial(duplicate_plane(cr, p), p), 0)


def test_random_64_roundtrip():
    rng = np.random.default_rng(7)
    c = rng.integers(0, 256, (64, 64), dtype=np.uint8)
    m = rng.integers(0, 2, (64, 64), dtype=np.uint8)
    p = SpatialParams(3, 1)
    assert hamming(m, detect_spatial(embed_spatial(c, m, p), p)) == 0


def test_mark_resampled_with_warning(caplog):
    c = np.zeros((40, 60), dtype=np.uint8)
    m = np.eye(4, dtype=np.uint8)
    with caplog.at_level("WARNING"):
        s = embed_spatial(c, m, SpatialParams(3, 1))
    assert "resampled" in caplog.text
    assert detect_spatial(s, SpatialParams(3, 1)).shape == (40, 60)


def test_removal_psnr_u2_half_plane():
    # exactly half the samples carry bit 2
    c = np.tile(np.array([0, 2], dtype=np.uint8), (32, 16))
    p = SpatialParams(7, 2)
    m = np.random.default_rng(8).integers(0, 2, c.shape, dtype=np.uint8)
    measured = psnr(c, remove_spatial(embed_spatial(c, m, p), p))
    assert measured == pytest.approx(10 * np.log10(255**2 / (4 * 0.5)), abs=1e-9)
    assert measured == pytest.approx(45.1, abs=0.05)
    assert removal_psnr(c, p) == pytest.approx(measured, abs=1e-9)


def test_plane_removed_psnr():
    c = np.full((4, 4), 1, dtype=np.uint8)
    assert plane_removed_psnr(c, 1) == pytest.approx(10 * np.log10(255**2))


# -- color policy -------------------------------------------------------------


def test_default_policies():
    assert SpatialParams(3, 1).policy == ChannelPolicy.single(2)
    assert SpatialParams(7, 2).policy == ChannelPolicy.all()
    assert SpatialParams(3, 1, ChannelPolicy.all()).policy == ChannelPolicy.all()


def test_invisible_rgb_touches_blue_only():
    rng = np.random.default_rng(9)
    c = rng.integers(0, 256, (10, 10, 3), dtype=np.uint8)
    m = rng.integers(0, 2, (10, 10), dtype=np.uint8)
    s = embed_spatial(c, m, SpatialParams(3, 1))
    np.testing.assert_array_equal(s[..., :2], c[..., :2])
    np.testing.assert_array_equal(detect_spatial(s, SpatialParams(3, 1)), m)


# -- properties ---------------------------------------------------------------


@given(gray_images(), plane_pairs(), st.integers(0, 2**32 - 1))
def test_roundtrip_exact(c, planes, seed):
    m = np.random.default_rng(seed).integers(0, 2, c.shape, dtype=np.uint8)
    p = SpatialParams(*planes)
    np.testing.assert_array_equal(detect_spatial(embed_spatial(c, m, p), p), m)


@given(gray_images(), plane_pairs(), st.integers(0, 2**32 - 1))
def test_embed_plane_contract(c, planes, seed):
    v, u = planes
    m = np.random.default_rng(seed).integers(0, 2, c.shape, dtype=np.uint8)
    s = embed_spatial(c, m, SpatialParams(v, u))
    np.testing.assert_array_equal(bitplane_get(s, v), bitplane_get(c, v) ^ m)
    np.testing.assert_array_equal(bitplane_get(s, u), bitplane_get(c, v))
    for k in set(range(1, 9)) - {u, v}:
        np.testing.assert_array_equal(bitplane_get(s, k), bitplane_get(c, k))


@given(gray_images(), plane_pairs(), st.integers(0, 2**32 - 1))
def test_removal_only_touches_plane_u(c, planes, seed):
    v, u = planes
    p = SpatialParams(v, u)
    m = np.random.default_rng(seed).integers(0, 2, c.shape, dtype=np.uint8)
    cr = remove_spatial(embed_spatial(c, m, p), p)
    np.testing.assert_array_equal(cr, c & np.uint8(~(1 << (u - 1)) & 0xFF))


@given(gray_images(), plane_pairs())
def test_removal_psnr_formula(c, planes):
    p = SpatialParams(*planes)
    cr = remove_spatial(embed_spatial(c, np.ones_like(c), p), p)
    measured = psnr(c, cr)
    predicted = removal_psnr(c, p)
    if np.isinf(predicted):
        assert np.isinf(measured)
    else:
        assert measured == pytest.approx(predicted, abs=1e-9)


@given(
    st.tuples(st.integers(1, 12), st.integers(1, 12)).flatmap(lambda s: arrays(np.uint8, (*s, 3))),
    plane_pairs(),
    st.integers(0, 2**32 - 1),
)
def test_all_channel_policy_is_channelwise(c, planes, seed):
    m = np.random.default_rng(seed).integers(0, 2, c.shape[:2], dtype=np.uint8)
    p = SpatialParams(*planes, channel=ChannelPolicy.all())
    s = embed_spatial(c, m, p)
    for k in range(3):
        np.testing.assert_array_equal(s[..., k], embed_spatial(c[..., k], m, SpatialParams(*planes)))
