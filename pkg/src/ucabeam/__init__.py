"""Wideband beamforming for uniform circular arrays.

Simulation and analysis of the beam-defocus effect in hybrid precoding:
exact beam patterns, Bessel/hypergeometric closed forms, delay-phase
(true-time-delay) precoder construction, and OFDM spectrum-efficiency
experiments.
"""

from .analysis import (
    GainProfile,
    SeProfile,
    avg_gain_ps_lower,
    avg_gain_ps_numeric,
    avg_gain_ps_upper,
    avg_gain_ttd,
    beam_cross_gains,
    dpp_column,
    dpp_exact_gain,
    dpp_gain_closed_form,
    dpp_gain_subarray_sum,
    exact_gain,
    gain_improvement,
    min_ttd_count,
    ps_gain_angular_closed_form,
    ps_gain_closed_form,
    se_from_effective,
    spectrum_efficiency,
    spectrum_efficiency_optimal,
)
from .arraymodel import (
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
from .cxlinalg import (
    SvdError,
    SvdResult,
    block_diag,
    frobenius_norm,
    hermitian,
    matmul,
    svd,
    water_filling,
)
from .precoding import (
    DppConfig,
    PrecoderSet,
    TtdSchedule,
    analog_combined,
    build_classic_hybrid,
    build_dpp,
    combined_precoder,
    subarray_phase_offset,
    ttd_delays,
    ttd_reference_angles,
)
from .specfun import (
    ConvergenceError,
    QuadratureError,
    SeriesControl,
    UnbracketableError,
    bessel_j,
    hypergeom_1f2,
    hypergeom_2f3,
    integrate,
    inverse_1f2_threshold,
)
from .xpcli import ResultTable, Scenario, ScenarioError, load_scenario, run

__version__ = "0.1.0"

__all__ = [
    "SPEED_OF_LIGHT",
    "ChannelRealization",
    "ConvergenceError",
    "DppConfig",
    "FrequencyGrid",
    "GainProfile",
    "PathParams",
    "PrecoderSet",
    "QuadratureError",
    "ResultTable",
    "Scenario",
    "ScenarioError",
    "SeProfile",
    "SeriesControl",
    "SvdError",
    "SvdResult",
    "TtdSchedule",
    "UcaGeometry",
    "UlaGeometry",
    "UnbracketableError",
    "analog_combined",
    "avg_gain_ps_lower",
    "avg_gain_ps_numeric",
    "avg_gain_ps_upper",
    "avg_gain_ttd",
    "beam_cross_gains",
    "bessel_j",
    "block_diag",
    "build_classic_hybrid",
    "build_dpp",
    "channel_matrix",
    "combined_precoder",
    "dpp_column",
    "dpp_exact_gain",
    "dpp_gain_closed_form",
    "dpp_gain_subarray_sum",
    "exact_gain",
    "frobenius_norm",
    "gain_improvement",
    "generate_channel",
    "half_wavelength_uca",
    "hermitian",
    "hypergeom_1f2",
    "hypergeom_2f3",
    "integrate",
    "inverse_1f2_threshold",
    "load_scenario",
    "matmul",
    "min_ttd_count",
    "ps_gain_angular_closed_form",
    "ps_gain_closed_form",
    "run",
    "se_from_effective",
    "spectrum_efficiency",
    "spectrum_efficiency_optimal",
    "steering_uca",
    "steering_ula",
    "subarray_phase_offset",
    "svd",
    "ttd_delays",
    "ttd_reference_angles",
    "water_filling",
]
