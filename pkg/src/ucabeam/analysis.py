"""Beamforming-gain analysis and spectrum efficiency for wideband UCAs.

Closed forms
------------
For a UCA of radius R, write ``eta(f) = 2*pi*R*f/c``.  A phase-shifter beam
aligned at the center frequency fc and evaluated at frequency f has gain

* in its own direction: ``|J0(eta(f) - eta(fc))|``
  (large-N limit of the circular phase sum);
* in an arbitrary direction phi, for a beam pointed at phi0:
  ``|J0(xi)`` with ``xi = sqrt(eta_f^2 + eta_c^2 - 2 eta_f eta_c cos(phi - phi0))``.

Splitting the array into K arcs, each driven by one true-time-delay element
referenced to the arc centroid, leaves only the intra-arc phase error; the
per-arc average is again a Bessel sum, and its continuum limit is
``|1F2(1/2; 1, 3/2; -a^2/4)|`` with ``a = 2*pi^2*R*(f - fc)/(c*K)``.

Band-averaged gains use ``b_ps = pi*B*R/c`` and ``b_ttd = pi^2*B*R/(c*K)``:

* numeric average of ``|J0|``:        ``(1/b)*int_0^b |J0|``
* Cauchy-Schwarz upper bound:         ``sqrt(2F3(1/2,1/2; 1,1,3/2; -b_ps^2))``
  (the root-mean-square gain, via ``(1/x)*int_0^x J0^2 = 2F3(...; -x^2)``)
* signed-integral lower bound:        ``1F2(1/2; 1, 3/2; -b_ps^2/4)``
* delay-phase average:                ``2F3(1/2,1/2; 1,3/2,3/2; -b_ttd^2/4)``
  (via ``(1/x)*int_0^x 1F2(1/2;1,3/2;-t^2/4) dt``).

All quadrature cross-checks are done in these dimensionless variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .arraymodel import (
    SPEED_OF_LIGHT,
    ChannelRealization,
    UcaGeometry,
    steering_uca,
)
from .cxlinalg import water_filling
from .precoding import PrecoderSet, ttd_delays, ttd_reference_angles

__all__ = [
    "GainProfile",
    "SeProfile",
    "exact_gain",
    "ps_gain_closed_form",
    "ps_gain_angular_closed_form",
    "dpp_gain_subarray_sum",
    "dpp_gain_closed_form",
    "dpp_column",
    "dpp_exact_gain",
    "min_ttd_count",
    "avg_gain_ps_numeric",
    "avg_gain_ps_upper",
    "avg_gain_ps_lower",
    "avg_gain_ttd",
    "gain_improvement",
    "se_from_effective",
    "spectrum_efficiency",
    "spectrum_efficiency_optimal",
    "beam_cross_gains",
]


@dataclass(frozen=True)
class GainProfile:
    """Gain samples along a frequency or angle axis."""

    axis: str
    samples: tuple
    meta: str = ""

    def __post_init__(self):
        if self.axis not in ("frequency", "angle"):
            raise ValueError(f"axis must be 'frequency' or 'angle', got {self.axis!r}")
        samples = tuple((float(x), float(g)) for x, g in self.samples)
        xs = [x for x, _ in samples]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("sample coordinates must be strictly increasing")
        if any(g < 0.0 for _, g in samples):
            raise ValueError("gains must be non-negative")
        object.__setattr__(self, "samples", samples)

    @property
    def coordinates(self) -> np.ndarray:
        return np.array([x for x, _ in self.samples])

    @property
    def gains(self) -> np.ndarray:
        return np.array([g for _, g in self.samples])


@dataclass(frozen=True)
class SeProfile:
    """Spectrum-efficiency samples (bits/s/Hz) with a method label."""

    samples: tuple
    method: str

    def __post_init__(self):
        samples = tuple((float(x), float(v)) for x, v in self.samples)
        if any(v < 0.0 for _, v in samples):
            raise ValueError("spectrum efficiency must be non-negative")
        object.__setattr__(self, "samples", samples)


# ---------------------------------------------------------------------------
# Pointwise beamforming gains
# ---------------------------------------------------------------------------


def exact_gain(w, geom: UcaGeometry, f_hz: float, phi_rad: float) -> float:
    """|a(f, phi)^H w| for an arbitrary unit-norm-bounded weight vector."""
    w = np.asarray(w, dtype=np.complex128)
    if w.shape != (geom.n_elements,):
        raise ValueError(f"w must have shape ({geom.n_elements},), got {w.shape}")
    nrm = np.linalg.norm(w)
    if not nrm <= 1.0 + 1e-9:
        raise ValueError(f"||w|| must not exceed 1, got {nrm}")
    a = steering_uca(geom, f_hz, phi_rad)
    return float(abs(np.vdot(a, w)))


def _eta(f_hz: float, radius_m: float) -> float:
    return 2.0 * math.pi * radius_m * f_hz / SPEED_OF_LIGHT


def ps_gain_closed_form(f_hz: float, fc_hz: float, radius_m: float) -> float:
    """On-beam gain of a center-frequency phase-shifter beam at frequency f:
    |J0(2*pi*R*(f - fc)/c)| in the large-N limit."""
    _check_freqs(f_hz, fc_hz, radius_m)
    return abs(specfun.bessel_j(0, _eta(f_hz, radius_m) - _eta(fc_hz, radius_m)))


def ps_gain_angular_closed_form(
    f_hz: float, fc_hz: float, radius_m: float, phi_rad: float, phi0_rad: float
) -> float:
    """Gain in direction phi of a beam pointed at phi0, evaluated at f:
    |J0(xi)| with xi the law-of-cosines combination of eta(f) and eta(fc).

    Accurate on the front half-plane |phi - phi0| <= pi/2; toward the
    back lobe the discrete circular sum departs from the continuum limit.
    """
    _check_freqs(f_hz, fc_hz, radius_m)
    eta_m = _eta(f_hz, radius_m)
    eta_c = _eta(fc_hz, radius_m)
    xi_sq = eta_m**2 + eta_c**2 - 2.0 * eta_m * eta_c * math.cos(phi_rad - phi0_rad)
    return abs(specfun.bessel_j(0, math.sqrt(max(xi_sq, 0.0))))


def dpp_gain_subarray_sum(
    f_hz: float, fc_hz: float, radius_m: float, n_elements: int, k_ttd: int
) -> float:
    """Delay-phase gain as the average over one arc of per-element Bessel
    factors: (1/P) |sum_i J0(r_i)| with
    r_i = (2*sqrt(2)*pi*R/c) * (f - fc) * sqrt(1 - cos((2i+1)*pi/N - pi/K)).
    """
    _check_freqs(f_hz, fc_hz, radius_m)
    if n_elements % k_ttd != 0:
        raise ValueError(
            f"k_ttd={k_ttd} must divide n_elements={n_elements} so each delay "
            f"unit drives an integer number P = N/K of antennas"
        )
    p = n_elements // k_ttd
    scale = 2.0 * math.sqrt(2.0) * math.pi * radius_m / SPEED_OF_LIGHT * (f_hz - fc_hz)
    acc = 0.0
    for i in range(p):
        gap = (2 * i + 1) * math.pi / n_elements - math.pi / k_ttd
        acc += specfun.bessel_j(0, scale * math.sqrt(max(1.0 - math.cos(gap), 0.0)))
    return abs(acc) / p


def dpp_gain_closed_form(f_hz: float, fc_hz: float, radius_m: float, k_ttd: int) -> float:
    """Continuum limit of the arc average: |1F2(1/2; 1, 3/2; -a^2/4)| with
    a = 2*pi^2*R*(f - fc)/(c*K)."""
    _check_freqs(f_hz, fc_hz, radius_m)
    if not (isinstance(k_ttd, int) and k_ttd >= 1):
        raise ValueError(f"k_ttd must be a positive integer, got {k_ttd}")
    a = 2.0 * math.pi**2 * radius_m * (f_hz - fc_hz) / (SPEED_OF_LIGHT * k_ttd)
    return abs(specfun.hypergeom_1f2(0.5, 1.0, 1.5, -0.25 * a * a))


def dpp_column(geom: UcaGeometry, fc_hz: float, f_hz: float, phi_rad: float,
               k_ttd: int) -> np.ndarray:
    """Combined analog weight of one delay-phase RF chain steered toward phi:
    centroid-referenced phase-shifter arcs times the TTD phases at f."""
    p = geom.n_elements // k_ttd
    theta = ttd_reference_angles(geom.n_elements, k_ttd)
    eta_c = _eta(fc_hz, geom.radius_m)
    a_c = steering_uca(geom, fc_hz, phi_rad)
    corr = np.exp(-1j * eta_c * np.cos(phi_rad - theta))
    phases = np.exp(-2j * np.pi * f_hz * ttd_delays(phi_rad, k_ttd, geom))
    return a_c * np.repeat(corr * phases, p)


def dpp_exact_gain(geom: UcaGeometry, fc_hz: float, f_hz: float, phi_rad: float,
                   k_ttd: int) -> float:
    """Exact on-beam gain of a single delay-phase chain (discrete sum,
    no large-N approximation)."""
    return exact_gain(dpp_column(geom, fc_hz, f_hz, phi_rad, k_ttd), geom, f_hz, phi_rad)


def _check_freqs(f_hz: float, fc_hz: float, radius_m: float):
    if not (np.isfinite(f_hz) and f_hz > 0.0):
        raise ValueError(f"f_hz must be positive, got {f_hz}")
    if not (np.isfinite(fc_hz) and fc_hz > 0.0):
        raise ValueError(f"fc_hz must be positive, got {fc_hz}")
    if not (np.isfinite(radius_m) and radius_m > 0.0):
        raise ValueError(f"radius_m must be positive, got {radius_m}")


# ---------------------------------------------------------------------------
# TTD sizing and band-averaged gains
# ---------------------------------------------------------------------------


def min_ttd_count(delta: float, radius_m: float, bandwidth_hz: float) -> float:
    """Smallest (real-valued) number of delay units per RF chain keeping the
    band-edge gain loss below delta: K_min = pi^2*R*B / (c * x*) where x* is
    the argument at which the arc gain curve first drops to 1 - delta.
    Callers round up to an integer."""
    delta = float(delta)
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if not (np.isfinite(radius_m) and radius_m > 0.0):
        raise ValueError(f"radius_m must be positive, got {radius_m}")
    if not (np.isfinite(bandwidth_hz) and bandwidth_hz >= 0.0):
        raise ValueError(f"bandwidth_hz must be non-negative, got {bandwidth_hz}")
    x = specfun.inverse_1f2_threshold(1.0 - delta)
    return math.pi**2 * radius_m * bandwidth_hz / (SPEED_OF_LIGHT * x)


def _b_ps(radius_m: float, bandwidth_hz: float) -> float:
    return math.pi * bandwidth_hz * radius_m / SPEED_OF_LIGHT


def _check_band(radius_m: float, bandwidth_hz: float):
    if not (np.isfinite(radius_m) and radius_m > 0.0):
        raise ValueError(f"radius_m must be positive, got {radius_m}")
    if not (np.isfinite(bandwidth_hz) and bandwidth_hz > 0.0):
        raise ValueError(f"bandwidth_hz must be positive, got {bandwidth_hz}")


def avg_gain_ps_numeric(radius_m: float, bandwidth_hz: float) -> float:
    """Band average of the phase-shifter gain |J0| by adaptive quadrature,
    evaluated in the dimensionless variable x = 2*pi*R*f'/c."""
    _check_band(radius_m, bandwidth_hz)
    b = _b_ps(radius_m, bandwidth_hz)
    integral = specfun.integrate(
        lambda x: abs(specfun.bessel_j(0, x)), 0.0, b, tol=1e-10
    )
    return integral / b


def avg_gain_ps_upper(radius_m: float, bandwidth_hz: float) -> float:
    """Cauchy-Schwarz upper bound on the band-averaged phase-shifter gain:
    the root-mean-square gain sqrt((1/b) * int_0^b J0^2), evaluated through
    its hypergeometric closed form 2F3(1/2,1/2; 1,1,3/2; -b^2)."""
    _check_band(radius_m, bandwidth_hz)
    b = _b_ps(radius_m, bandwidth_hz)
    return math.sqrt(specfun.hypergeom_2f3(0.5, 0.5, 1.0, 1.0, 1.5, -b * b))


def avg_gain_ps_lower(radius_m: float, bandwidth_hz: float) -> float:
    """Lower bound from dropping the absolute value: the signed band average
    (1/b) * int_0^b J0 = 1F2(1/2; 1, 3/2; -b^2/4)."""
    _check_band(radius_m, bandwidth_hz)
    b = _b_ps(radius_m, bandwidth_hz)
    return specfun.hypergeom_1f2(0.5, 1.0, 1.5, -0.25 * b * b)


def avg_gain_ttd(radius_m: float, bandwidth_hz: float, k_ttd: int) -> float:
    """Band-averaged delay-phase gain: with b = pi^2*B*R/(c*K), the average
    of the arc gain curve over the band is 2F3(1/2,1/2; 1,3/2,3/2; -b^2/4).
    The arc gain curve is positive on the whole real line, so the average of
    its absolute value coincides with the signed average."""
    _check_band(radius_m, bandwidth_hz)
    if not (isinstance(k_ttd, int) and k_ttd >= 1):
        raise ValueError(f"k_ttd must be a positive integer, got {k_ttd}")
    b = math.pi**2 * bandwidth_hz * radius_m / (SPEED_OF_LIGHT * k_ttd)
    return specfun.hypergeom_2f3(0.5, 0.5, 1.0, 1.5, 1.5, -0.25 * b * b)


def gain_improvement(radius_m: float, bandwidth_hz: float, k_ttd: int) -> float:
    """Ratio of the band-averaged delay-phase gain to the Cauchy-Schwarz
    upper bound on the phase-shifter average; a conservative (lower-bound)
    measure of the improvement from adding delay units."""
    return avg_gain_ttd(radius_m, bandwidth_hz, k_ttd) / avg_gain_ps_upper(
        radius_m, bandwidth_hz
    )


# ---------------------------------------------------------------------------
# Spectrum efficiency
# ---------------------------------------------------------------------------


def se_from_effective(h_eff, rho: float, sigma2: float, n_s: int | None = None) -> float:
    """log2 det(I + rho/(n_s*sigma2) * H_eff H_eff^H) for an effective
    channel H_eff = H^H F (receive antennas x streams)."""
    h_eff = np.asarray(h_eff, dtype=np.complex128)
    if h_eff.ndim != 2:
        raise ValueError(f"h_eff must be 2-D, got shape {h_eff.shape}")
    if n_s is None:
        n_s = h_eff.shape[1]
    elif n_s != h_eff.shape[1]:
        raise ValueError(f"n_s={n_s} does not match h_eff stream count {h_eff.shape[1]}")
    _check_snr(rho, sigma2)
    gram = (rho / (n_s * sigma2)) * (h_eff @ h_eff.conj().T)
    sign, logdet = np.linalg.slogdet(np.eye(h_eff.shape[0]) + gram)
    if sign <= 0:
        raise ArithmeticError("log-det argument is not positive definite")
    return float(logdet / math.log(2.0))


def spectrum_efficiency(h_m, ps: PrecoderSet, m: int, rho: float, sigma2: float,
                        n_s: int | None = None) -> float:
    """Per-subcarrier rate of a hybrid precoder:
    log2 det(I + rho/(n_s*sigma2) * H^H F F^H H) with F the combined
    phase-shifter/delay/digital precoder at subcarrier m."""
    h_m = np.asarray(h_m, dtype=np.complex128)
    if not 0 <= m < ps.n_subcarriers:
        raise IndexError(f"subcarrier index {m} out of range [0, {ps.n_subcarriers})")
    f = ps.f_ps @ ps.f_ttd[m] @ ps.f_d[m]
    if h_m.shape[0] != f.shape[0]:
        raise ValueError(
            f"channel/precoder mismatch: H is {h_m.shape}, F is {f.shape}"
        )
    return se_from_effective(h_m.conj().T @ f, rho, sigma2, n_s)


def spectrum_efficiency_optimal(h_m, rho: float, sigma2: float, n_s: int,
                                total_power: float = 1.0) -> float:
    """Fully digital upper bound: water-filling over the top n_s singular
    values of the channel, sum of log2(1 + p_i * rho * s_i^2/(n_s*sigma2))."""
    h_m = np.asarray(h_m, dtype=np.complex128)
    if h_m.ndim != 2:
        raise ValueError(f"h_m must be 2-D, got shape {h_m.shape}")
    if not (isinstance(n_s, int) and n_s >= 1):
        raise ValueError(f"n_s must be a positive integer, got {n_s}")
    _check_snr(rho, sigma2)
    if not (np.isfinite(total_power) and total_power > 0.0):
        raise ValueError(f"total_power must be positive, got {total_power}")
    sing = np.linalg.svd(h_m, compute_uv=False)
    if sing.size < n_s:
        raise ValueError(f"n_s={n_s} exceeds channel rank bound {sing.size}")
    gains = np.maximum(rho * sing[:n_s] ** 2 / (n_s * sigma2), 1e-30)
    powers = water_filling(gains, total_power)
    return float(np.sum(np.log2(1.0 + powers * gains)))


def _check_snr(rho: float, sigma2: float):
    if not (np.isfinite(rho) and rho > 0.0):
        raise ValueError(f"rho must be positive, got {rho}")
    if not (np.isfinite(sigma2) and sigma2 > 0.0):
        raise ValueError(f"sigma2 must be positive, got {sigma2}")


def beam_cross_gains(ch: ChannelRealization, ps: PrecoderSet, m: int) -> np.ndarray:
    """Matrix of |a(f_m, phi_l)^H w_chain| between path directions (strongest
    first) and combined analog columns.  The diagonal holds the per-beam
    gains; off-diagonal entries measure inter-beam leakage, which is small
    but not zero at finite N."""
    if not 0 <= m < ps.n_subcarriers:
        raise IndexError(f"subcarrier index {m} out of range [0, {ps.n_subcarriers})")
    f = float(ch.grid.freqs_hz[m])
    w = ps.f_ps @ ps.f_ttd[m]
    paths = sorted(ch.paths, key=lambda p: abs(p.gain), reverse=True)[: ps.n_rf]
    rows = [steering_uca(ch.tx, f, p.aod_rad) for p in paths]
    return np.abs(np.stack(rows).conj() @ w)
