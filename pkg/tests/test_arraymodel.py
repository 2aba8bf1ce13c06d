"""Array geometry, steering vectors, OFDM grid, and channel generation."""

import math

import numpy as np
import pytest

from ucabeam.arraymodel import (
    SPEED_OF_LIGHT,
    ChannelRealization,
    FrequencyGrid,
    PathParams,
    UcaGeometry,
    UlaGeometry,
    channel_matrix,
    generate_channel,
    half_wavelength_uca,
    steering_uca,
    steering_ula,
)

C = SPEED_OF_LIGHT


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------


def test_uca_element_angles_are_uniform():
    geom = UcaGeometry(8, 0.1)
    assert np.allclose(geom.element_angles, 2.0 * np.pi * np.arange(8) / 8)


def test_geometry_validation():
    with pytest.raises(ValueError):
        UcaGeometry(0, 0.1)
    with pytest.raises(ValueError):
        UcaGeometry(4, -0.1)
    with pytest.raises(ValueError):
        UlaGeometry(2, 0.0)


def test_half_wavelength_radius_frozen_value():
    geom = half_wavelength_uca(256, 30e9)
    # R = N*c / (4*pi*fc)
    assert geom.radius_m == pytest.approx(0.20357739346077622, rel=1e-15)
    assert geom.n_elements == 256


def test_half_wavelength_arc_spacing():
    geom = half_wavelength_uca(64, 10e9)
    arc = 2.0 * np.pi * geom.radius_m / 64
    assert arc == pytest.approx(C / 10e9 / 2.0, rel=1e-15)


def test_half_wavelength_radius_scales_with_elements():
    r1 = half_wavelength_uca(128, 30e9).radius_m
    r2 = half_wavelength_uca(256, 30e9).radius_m
    assert r2 == pytest.approx(2.0 * r1, rel=1e-15)


def test_half_wavelength_needs_at_least_two_elements():
    with pytest.raises(ValueError):
        half_wavelength_uca(1, 30e9)


# ---------------------------------------------------------------------------
# steering vectors
# ---------------------------------------------------------------------------


def test_uca_steering_hand_example():
    # R chosen so the electrical radius is pi: alternating +-1/2 entries
    geom = UcaGeometry(4, C / (2.0 * 1e9))
    a = steering_uca(geom, 1e9, 0.0)
    assert np.allclose(a, np.array([-1.0, 1.0, -1.0, 1.0]) / 2.0, atol=1e-12)


def test_uca_steering_modulus_and_norm():
    geom = half_wavelength_uca(256, 30e9)
    a = steering_uca(geom, 28.3e9, 1.234)
    assert np.abs(np.abs(a) - 1.0 / 16.0).max() <= 1e-12
    assert np.linalg.norm(a) == pytest.approx(1.0, abs=1e-12)


def test_uca_steering_rotates_with_target():
    # advancing the target by one element pitch cycles the weights
    geom = half_wavelength_uca(256, 30e9)
    a = steering_uca(geom, 30e9, 0.7)
    b = steering_uca(geom, 30e9, 0.7 + 2.0 * np.pi / 256)
    assert np.abs(b - np.roll(a, 1)).max() <= 1e-9


def test_ula_steering_hand_example():
    # half-wavelength spacing at endfire: entries alternate sign
    geom = UlaGeometry(2, C / (2.0 * 1e9))
    b = steering_ula(geom, 1e9, np.pi / 2.0)
    assert np.allclose(b, np.array([1.0, -1.0]) / math.sqrt(2.0), atol=1e-12)


def test_ula_steering_broadside_is_uniform():
    geom = UlaGeometry(8, 0.005)
    b = steering_ula(geom, 30e9, 0.0)
    assert np.allclose(b, np.full(8, 1.0 / math.sqrt(8.0)), atol=1e-14)


# ---------------------------------------------------------------------------
# frequency grid
# ---------------------------------------------------------------------------


def test_grid_center_sample_for_odd_count():
    grid = FrequencyGrid(30e9, 3e9, 129)
    assert grid.freqs_hz[64] == 30e9


def test_grid_symmetry_for_even_count():
    grid = FrequencyGrid(30e9, 3e9, 128)
    f = grid.freqs_hz
    assert (f[63] + f[64]) / 2.0 == pytest.approx(30e9, rel=1e-15)
    assert f.max() - f.min() == pytest.approx(3e9 * 127 / 128, rel=1e-12)


def test_grid_spacing_is_b_over_m():
    grid = FrequencyGrid(30e9, 3e9, 128)
    assert np.allclose(np.diff(grid.freqs_hz), 3e9 / 128)


def test_grid_validation():
    with pytest.raises(ValueError):
        FrequencyGrid(30e9, -1.0, 8)
    with pytest.raises(ValueError):
        FrequencyGrid(30e9, 3e9, 0)
    with pytest.raises(ValueError):
        FrequencyGrid(1e9, 4e9, 2)  # lowest subcarrier would sit at 0 Hz


# ---------------------------------------------------------------------------
# paths and channels
# ---------------------------------------------------------------------------


def test_path_params_validation():
    PathParams(1.0 + 0j, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        PathParams(1.0 + 0j, -1e-9, 0.0, 0.0)
    with pytest.raises(ValueError):
        PathParams(1.0 + 0j, 0.0, -0.1, 0.0)
    with pytest.raises(ValueError):
        PathParams(1.0 + 0j, 0.0, 2.0 * np.pi, 0.0)
    with pytest.raises(ValueError):
        PathParams(1.0 + 0j, 0.0, 0.0, 2.0)


def _small_setup(n_subcarriers=9, bandwidth=3e9):
    tx = half_wavelength_uca(256, 30e9)
    rx = UlaGeometry(4, C / 30e9 / 2.0)
    grid = FrequencyGrid(30e9, bandwidth, n_subcarriers)
    return tx, rx, grid


def test_generate_channel_is_deterministic_in_seed():
    tx, rx, grid = _small_setup()
    a = generate_channel(tx, rx, grid, 3, 42)
    b = generate_channel(tx, rx, grid, 3, 42)
    c = generate_channel(tx, rx, grid, 3, 43)
    assert a.paths == b.paths
    assert a.paths != c.paths


def test_generate_channel_ranges():
    tx, rx, grid = _small_setup()
    ch = generate_channel(tx, rx, grid, 64, 9, max_delay_s=20e-9)
    for p in ch.paths:
        assert 0.0 <= p.aod_rad < 2.0 * np.pi
        assert -np.pi / 2.0 <= p.aoa_rad <= np.pi / 2.0
        assert 0.0 <= p.delay_s <= 20e-9
    assert ch.n_paths == 64


def test_generate_channel_gain_power_is_unit_mean():
    tx, rx, grid = _small_setup()
    ch = generate_channel(tx, rx, grid, 4096, 123)
    mean_sq = np.mean([abs(p.gain) ** 2 for p in ch.paths])
    assert abs(mean_sq - 1.0) <= 0.05


def test_generate_channel_rejects_zero_paths():
    tx, rx, grid = _small_setup()
    with pytest.raises(ValueError):
        generate_channel(tx, rx, grid, 0, 1)


def test_single_path_channel_frobenius_norm():
    # ||H_m||_F = sqrt(N/L) * |g| * ||a|| * ||b|| = sqrt(N) for one unit path
    tx, rx, grid = _small_setup()
    ch = ChannelRealization(
        paths=(PathParams(1.0 + 0j, 0.0, 0.9, 0.2),), tx=tx, rx=rx, grid=grid
    )
    for m in range(grid.n_subcarriers):
        h = channel_matrix(ch, m)
        assert h.shape == (256, 4)
        assert np.linalg.norm(h, "fro") == pytest.approx(16.0, rel=1e-12)


def test_channel_rank_bounded_by_path_count():
    tx, rx, grid = _small_setup()
    ch = generate_channel(tx, rx, grid, 2, 77)
    s = np.linalg.svd(channel_matrix(ch, 4), compute_uv=False)
    assert s[2:].max() <= 1e-9 * s[0]


def test_channel_is_linear_in_path_gain():
    tx, rx, grid = _small_setup()
    p1 = PathParams(0.5 - 0.25j, 3e-9, 1.2, -0.3)
    p2 = PathParams(2.0 * (0.5 - 0.25j), 3e-9, 1.2, -0.3)
    h1 = channel_matrix(ChannelRealization((p1,), tx, rx, grid), 3)
    h2 = channel_matrix(ChannelRealization((p2,), tx, rx, grid), 3)
    assert np.abs(h2 - 2.0 * h1).max() <= 1e-12 * np.abs(h1).max()


def test_path_delay_applies_pure_phase():
    tx, rx, grid = _small_setup()
    tau = 7e-9
    base = PathParams(1.0 + 0j, 0.0, 2.2, 0.4)
    delayed = PathParams(1.0 + 0j, tau, 2.2, 0.4)
    for m in (0, 4, 8):
        f = grid.freqs_hz[m]
        h0 = channel_matrix(ChannelRealization((base,), tx, rx, grid), m)
        ht = channel_matrix(ChannelRealization((delayed,), tx, rx, grid), m)
        rot = np.exp(-2j * np.pi * tau * f)
        assert np.abs(ht - rot * h0).max() <= 1e-9


def test_channel_matrix_depends_on_subcarrier():
    # wideband effect: even a delay-free channel changes across the band
    tx, rx, grid = _small_setup()
    ch = ChannelRealization(
        paths=(PathParams(1.0 + 0j, 0.0, 0.9, 0.2),), tx=tx, rx=rx, grid=grid
    )
    h0 = channel_matrix(ch, 0)
    h8 = channel_matrix(ch, 8)
    assert np.abs(h0 - h8).max() > 1e-3


def test_channel_matrix_superposition():
    tx, rx, grid = _small_setup()
    pa = PathParams(0.7 + 0.1j, 2e-9, 0.4, 0.1)
    pb = PathParams(-0.2 + 0.9j, 5e-9, 3.3, -0.6)
    h_both = channel_matrix(ChannelRealization((pa, pb), tx, rx, grid), 5)
    ha = channel_matrix(ChannelRealization((pa,), tx, rx, grid), 5)
    hb = channel_matrix(ChannelRealization((pb,), tx, rx, grid), 5)
    # sqrt(N/L) scaling: two-path sum carries sqrt(1/2) vs the singles
    assert np.abs(h_both - (ha + hb) / math.sqrt(2.0)).max() <= 1e-9


def test_channel_matrix_index_bounds():
    tx, rx, grid = _small_setup()
    ch = generate_channel(tx, rx, grid, 1, 0)
    with pytest.raises(IndexError):
        channel_matrix(ch, 9)
    with pytest.raises(IndexError):
        channel_matrix(ch, -1)
