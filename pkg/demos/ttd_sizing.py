"""
Sizing a delay-phase precoder: how many true-time-delay units per chain
=======================================================================

Splitting the ring into K arcs, each behind its own delay unit, shrinks
the electrical offset each arc sees by a factor K.  The band-edge gain
of the corrected beam follows a 1F2 hypergeometric curve, so the number
of units needed for a target worst-case gain comes from inverting that
curve.  This script sizes a bank for a 3 GHz band, then verifies the
resulting per-subcarrier gains against the exact array sum.

Run:  python3 demos/ttd_sizing.py
"""

import math

import numpy as np

from ucabeam import (
    FrequencyGrid,
    dpp_exact_gain,
    dpp_gain_closed_form,
    dpp_gain_subarray_sum,
    half_wavelength_uca,
    min_ttd_count,
    ps_gain_closed_form,
    ttd_delays,
)

FC = 30e9
BANDWIDTH = 3e9
TARGET = np.pi / 6

geom = half_wavelength_uca(256, FC)
r = geom.radius_m

# keep the closed-form band-edge gain above 1 - delta
delta = 0.4
k_min = min_ttd_count(delta, r, BANDWIDTH)
k = 2 ** math.ceil(math.log2(k_min))  # next power of two for an even split
print(f"target: band-edge gain >= {1 - delta:.1f} over {BANDWIDTH / 1e9:.0f} GHz")
print(f"sizing rule: K_min = {k_min:.2f}  ->  deploy K = {k} units per chain")

delays = ttd_delays(TARGET, k, geom)
print(f"delay range: 0 .. {delays.max() * 1e12:.1f} ps "
      f"(geometric bound {2 * r / 299792458.0 * 1e12:.1f} ps)")

grid = FrequencyGrid(FC, BANDWIDTH, 17)
print(f"\n{'f - fc [MHz]':>14} {'plain PS':>9} {'exact':>7} {'arc sum':>8} {'closed':>7}")
for f in grid.freqs_hz:
    row = (
        ps_gain_closed_form(f, FC, r),
        dpp_exact_gain(geom, FC, f, TARGET, k),
        dpp_gain_subarray_sum(f, FC, r, 256, k),
        dpp_gain_closed_form(f, FC, r, k),
    )
    print(f"{(f - FC) / 1e6:>14.1f} {row[0]:>9.4f} {row[1]:>7.4f} "
          f"{row[2]:>8.4f} {row[3]:>7.4f}")

edge = dpp_exact_gain(geom, FC, grid.freqs_hz[0], TARGET, k)
print(f"\nband-edge exact gain with K = {k}: {edge:.4f} "
      f"({'meets' if edge >= 1 - delta else 'misses'} the {1 - delta:.1f} target)")
