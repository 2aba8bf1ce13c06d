"""
Beam defocus of a circular array across a wide OFDM band
========================================================

A 256-element uniform circular array is steered with center-frequency
phase shifts.  Away from the center frequency the beam does not squint
to another angle (as a linear array would); it defocuses, and the gain
at the target follows the |J0| Bessel envelope of the electrical-radius
offset.  This script sweeps a 4 GHz band, compares the exact array sum
against the closed form, and locates the first gain nulls.

Run:  python3 demos/defocus_vs_frequency.py
"""

import numpy as np

from ucabeam import (
    FrequencyGrid,
    exact_gain,
    half_wavelength_uca,
    ps_gain_closed_form,
    steering_uca,
)

FC = 30e9
TARGET = np.pi / 6

geom = half_wavelength_uca(256, FC)
print(f"array: 256 elements, radius {geom.radius_m * 100:.2f} cm "
      f"(half-wavelength arc spacing at {FC / 1e9:.0f} GHz)")

# sweep the subcarrier frequencies of a 129-point grid over 4 GHz
grid = FrequencyGrid(FC, 4e9, 129)
w = steering_uca(geom, FC, TARGET)

print(f"\n{'f - fc [MHz]':>14} {'exact':>9} {'closed form':>12}")
worst = 0.0
for f in grid.freqs_hz[::8]:
    g_exact = exact_gain(w, geom, f, TARGET)
    g_closed = ps_gain_closed_form(f, FC, geom.radius_m)
    worst = max(worst, abs(g_exact - g_closed))
    bar = "#" * int(round(40 * g_exact))
    print(f"{(f - FC) / 1e6:>14.1f} {g_exact:>9.4f} {g_closed:>12.4f}  {bar}")
print(f"\nlargest |exact - closed| on the shown grid: {worst:.2e}")

# the first null sits where the electrical offset hits the first J0 zero
from ucabeam import SPEED_OF_LIGHT

j0_zero = 2.404825557695773
f_null = j0_zero * SPEED_OF_LIGHT / (2 * np.pi * geom.radius_m)
print(f"predicted first null offset: {f_null / 1e6:.1f} MHz "
      f"(gain there: {ps_gain_closed_form(FC + f_null, FC, geom.radius_m):.2e})")
