"""Classic phase-shifter hybrid precoding and delay-phase precoding for UCAs.

Architecture: each of ``n_rf`` RF chains feeds ``K`` true-time-delay (TTD)
units, and each TTD unit drives ``P = N/K`` phase shifters, one per antenna
of a contiguous arc of the circular array.  The frequency-flat phase-shifter
matrix ``f_ps`` (N x n_rf*K) is built once; the TTD stage contributes a
per-subcarrier block-diagonal phase matrix ``f_ttd[m]`` (n_rf*K x n_rf); the
digital stage ``f_d[m]`` (n_rf x n_streams) comes from an SVD of the
equivalent channel plus water-filling.

Reference angles: subarray k uses the centroid of its element angles,
``theta_k = pi*(2k+1)/K - pi/N``.  With one TTD per antenna (K = N) the
reference angles coincide with the element angles and the combined analog
weight tracks the ideal per-subcarrier steering vector exactly, so the gain
is 1 at every frequency.

The classic hybrid precoder is the K -> 1 degenerate wiring: phase shifters
align the beam at the center frequency only and the TTD stage is all-ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arraymodel import (
    SPEED_OF_LIGHT,
    ChannelRealization,
    UcaGeometry,
    channel_matrix,
    steering_uca,
)
from .cxlinalg import block_diag, svd, water_filling

__all__ = [
    "DppConfig",
    "TtdSchedule",
    "PrecoderSet",
    "subarray_phase_offset",
    "ttd_reference_angles",
    "ttd_delays",
    "build_classic_hybrid",
    "build_dpp",
    "analog_combined",
    "combined_precoder",
]

# Floor applied to water-filling channel gains so rank-deficient equivalent
# channels (zero singular values) stay in-domain; such channels end up with
# zero power anyway.
_GAIN_FLOOR = 1e-30


@dataclass(frozen=True)
class DppConfig:
    """Sizing of the hybrid architecture: RF chains, TTDs per chain, streams."""

    n_rf: int
    n_ttd_per_rf: int
    n_streams: int
    total_power: float = 1.0

    def __post_init__(self):
        if not (isinstance(self.n_rf, int) and self.n_rf >= 1):
            raise ValueError(f"n_rf must be a positive integer, got {self.n_rf}")
        if not (isinstance(self.n_ttd_per_rf, int) and self.n_ttd_per_rf >= 1):
            raise ValueError(
                f"n_ttd_per_rf must be a positive integer, got {self.n_ttd_per_rf}"
            )
        if not (isinstance(self.n_streams, int) and 1 <= self.n_streams <= self.n_rf):
            raise ValueError(
                f"n_streams must satisfy 1 <= n_streams <= n_rf, got "
                f"n_streams={self.n_streams}, n_rf={self.n_rf}"
            )
        if not (np.isfinite(self.total_power) and self.total_power > 0.0):
            raise ValueError(f"total_power must be positive, got {self.total_power}")


@dataclass(frozen=True)
class TtdSchedule:
    """Per-RF-chain, per-TTD delays in seconds (n_rf x K), all in [0, 2R/c]."""

    delays_s: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.delays_s, dtype=float)
        if d.ndim != 2:
            raise ValueError(f"delays_s must be 2-D (n_rf x K), got shape {d.shape}")
        if not np.all(np.isfinite(d)) or np.any(d < 0.0):
            raise ValueError("delays must be finite and non-negative")
        object.__setattr__(self, "delays_s", d)


@dataclass(frozen=True)
class PrecoderSet:
    """Frequency-flat PS matrix plus per-subcarrier TTD and digital stages.

    f_ps:  N x (n_rf*K), entries of nonzero blocks have modulus 1/sqrt(N)
    f_ttd: M x (n_rf*K) x n_rf block-diagonal unit-modulus phases
    f_d:   M x n_rf x n_streams digital precoders
    """

    f_ps: np.ndarray
    f_ttd: np.ndarray
    f_d: np.ndarray
    n_rf: int
    n_ttd_per_rf: int

    @property
    def n_subcarriers(self) -> int:
        return self.f_ttd.shape[0]


def subarray_phase_offset(p: int) -> float:
    """Phase offset pi - pi/P at which a P-element arc's response peaks;
    equals the angular gap between an arc's first element and its centroid,
    scaled to the full circle."""
    if not (isinstance(p, int) and p >= 1):
        raise ValueError(f"p must be a positive integer, got {p}")
    return math.pi - math.pi / p


def ttd_reference_angles(n_elements: int, k_ttd: int) -> np.ndarray:
    """Centroid angle of each of the K contiguous P-element arcs:
    theta_k = pi*(2k+1)/K - pi/N, k = 0..K-1."""
    if not (isinstance(k_ttd, int) and k_ttd >= 1):
        raise ValueError(f"k_ttd must be a positive integer, got {k_ttd}")
    if n_elements % k_ttd != 0:
        raise ValueError(
            f"k_ttd={k_ttd} must divide n_elements={n_elements} so each delay "
            f"unit drives an integer number P = N/K of antennas"
        )
    k = np.arange(k_ttd)
    return np.pi * (2.0 * k + 1.0) / k_ttd - np.pi / n_elements


def ttd_delays(phi_rad: float, k_ttd: int, geom: UcaGeometry) -> np.ndarray:
    """Delays t_k = (R/c)*(1 - cos(phi - theta_k)) for one RF chain steered
    toward phi; non-negative by construction and at most 2R/c."""
    theta = ttd_reference_angles(geom.n_elements, k_ttd)
    return geom.radius_m / SPEED_OF_LIGHT * (1.0 - np.cos(phi_rad - theta))


def _sorted_paths(ch: ChannelRealization, n_rf: int):
    """Strongest-first path reordering; the top n_rf paths get RF chains."""
    if ch.n_paths < n_rf:
        raise ValueError(
            f"fewer paths than RF chains: n_paths={ch.n_paths} < n_rf={n_rf}"
        )
    order = sorted(ch.paths, key=lambda p: abs(p.gain), reverse=True)
    return order[:n_rf]


def _check_sizes(ch: ChannelRealization, cfg: DppConfig) -> int:
    n = ch.tx.n_elements
    k = cfg.n_ttd_per_rf
    if n % k != 0:
        raise ValueError(
            f"n_ttd_per_rf={k} must divide n_elements={n} so each delay unit "
            f"drives an integer number P = N/K of antennas"
        )
    if cfg.n_rf > n:
        raise ValueError(f"n_rf={cfg.n_rf} exceeds n_elements={n}")
    return n // k


def _ps_matrix(ch: ChannelRealization, cfg: DppConfig, correct_to_centroid: bool):
    """N x (n_rf*K) phase-shifter matrix.  Chain l occupies columns
    [l*K, (l+1)*K); column k of that block holds arc k of the center-frequency
    steering vector, optionally rotated so the arc's centroid phase is zero."""
    p = _check_sizes(ch, cfg)
    k_ttd = cfg.n_ttd_per_rf
    n = ch.tx.n_elements
    paths = _sorted_paths(ch, cfg.n_rf)
    eta_c = 2.0 * np.pi * ch.tx.radius_m * ch.grid.fc_hz / SPEED_OF_LIGHT
    theta = ttd_reference_angles(n, k_ttd)
    cols = []
    for path in paths:
        col = steering_uca(ch.tx, ch.grid.fc_hz, path.aod_rad)
        if correct_to_centroid:
            corr = np.exp(-1j * eta_c * np.cos(path.aod_rad - theta))
            col = col * np.repeat(corr, p)
        blocks = [col[i * p : (i + 1) * p] for i in range(k_ttd)]
        cols.append(block_diag(blocks))
    return np.hstack(cols), paths


def _ttd_stage(paths, cfg: DppConfig, ch: ChannelRealization, delays: np.ndarray):
    """M x (n_rf*K) x n_rf block-diagonal TTD phase matrices exp(-j*2*pi*f_m*t)."""
    m_count = ch.grid.n_subcarriers
    k_ttd = cfg.n_ttd_per_rf
    out = np.zeros((m_count, cfg.n_rf * k_ttd, cfg.n_rf), dtype=np.complex128)
    freqs = ch.grid.freqs_hz
    for m in range(m_count):
        phases = np.exp(-2j * np.pi * freqs[m] * delays)  # n_rf x K
        out[m] = block_diag(list(phases))
    return out


def _digital_stage(ch, f_ps, f_ttd, cfg: DppConfig, rho: float, sigma2: float):
    """Per-subcarrier digital precoder: SVD of the equivalent channel,
    water-filling over the effective stream SNRs, then an exact rescale so
    the radiated power ||f_ps f_ttd f_d||_F^2 meets the budget."""
    if not (np.isfinite(rho) and rho > 0.0):
        raise ValueError(f"rho must be positive, got {rho}")
    if not (np.isfinite(sigma2) and sigma2 > 0.0):
        raise ValueError(f"sigma2 must be positive, got {sigma2}")
    m_count = ch.grid.n_subcarriers
    n_s = cfg.n_streams
    f_d = np.zeros((m_count, cfg.n_rf, n_s), dtype=np.complex128)
    for m in range(m_count):
        analog = f_ps @ f_ttd[m]
        h_eq = channel_matrix(ch, m).conj().T @ analog  # N_r x n_rf
        res = svd(h_eq)
        if res.sigma.size < n_s:
            raise ValueError(
                f"n_streams={n_s} exceeds the equivalent-channel rank bound "
                f"min(n_rx, n_rf)={res.sigma.size}"
            )
        stream_gains = np.maximum(
            rho * res.sigma[:n_s] ** 2 / (n_s * sigma2), _GAIN_FLOOR
        )
        powers = water_filling(stream_gains, cfg.total_power)
        fd = res.vh.conj().T[:, :n_s] * np.sqrt(powers)
        radiated = np.linalg.norm(analog @ fd) ** 2
        if radiated <= 0.0:
            raise ValueError("combined precoder has zero power; degenerate channel")
        fd *= math.sqrt(cfg.total_power / radiated)
        f_d[m] = fd
    return f_d


def build_classic_hybrid(
    ch: ChannelRealization, cfg: DppConfig, rho: float = 1.0, sigma2: float = 1.0
) -> PrecoderSet:
    """Phase-shifter-only hybrid precoder: analog column l is the
    center-frequency steering vector of the l-th strongest path; the TTD
    stage is all-ones (no delays)."""
    f_ps, paths = _ps_matrix(ch, cfg, correct_to_centroid=False)
    delays = np.zeros((cfg.n_rf, cfg.n_ttd_per_rf))
    f_ttd = _ttd_stage(paths, cfg, ch, delays)
    f_d = _digital_stage(ch, f_ps, f_ttd, cfg, rho, sigma2)
    return PrecoderSet(
        f_ps=f_ps, f_ttd=f_ttd, f_d=f_d, n_rf=cfg.n_rf, n_ttd_per_rf=cfg.n_ttd_per_rf
    )


def build_dpp(
    ch: ChannelRealization, cfg: DppConfig, rho: float = 1.0, sigma2: float = 1.0
):
    """Delay-phase precoder: centroid-referenced PS corrections plus TTD
    delays per chain, then the shared digital stage.  Returns the precoder
    set and the delay schedule."""
    f_ps, paths = _ps_matrix(ch, cfg, correct_to_centroid=True)
    delays = np.array(
        [ttd_delays(p.aod_rad, cfg.n_ttd_per_rf, ch.tx) for p in paths]
    )
    f_ttd = _ttd_stage(paths, cfg, ch, delays)
    f_d = _digital_stage(ch, f_ps, f_ttd, cfg, rho, sigma2)
    ps = PrecoderSet(
        f_ps=f_ps, f_ttd=f_ttd, f_d=f_d, n_rf=cfg.n_rf, n_ttd_per_rf=cfg.n_ttd_per_rf
    )
    return ps, TtdSchedule(delays_s=delays)


def analog_combined(ps: PrecoderSet, m: int) -> np.ndarray:
    """N x n_rf combined analog precoder at subcarrier m; unit-norm columns."""
    if not 0 <= m < ps.n_subcarriers:
        raise IndexError(f"subcarrier index {m} out of range [0, {ps.n_subcarriers})")
    return ps.f_ps @ ps.f_ttd[m]


def combined_precoder(ps: PrecoderSet, m: int) -> np.ndarray:
    """N x n_streams end-to-end precoder F = f_ps @ f_ttd[m] @ f_d[m]."""
    return analog_combined(ps, m) @ ps.f_d[m]
