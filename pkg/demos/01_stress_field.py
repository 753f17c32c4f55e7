"""
Stress field under a rectangular ram
====================================

A flat ram of width 2a presses on the top surface of a glass chip with
total force F. Far from the contact the chip cannot tell a strip from a
knife edge, so the strip field must converge to the classical line-load
field with depth. Close in, the finite width matters: the stress directly
under the ram saturates at the applied pressure instead of diverging.

This script walks down the centerline, compares the strip field against
a brute-force integration of line loads, and renders the lateral profile
at a typical waveguide depth.
"""

from pathlib import Path

import numpy as np

from strainsim import (
    FUSED_SILICA,
    RamLoad,
    WaveguideSite,
    line_load_stress,
    principal_stresses,
    ram_pressure,
    strip_load_stress,
    strip_load_stress_numeric,
)
from strainsim.scenarios import emit_svg
from strainsim.svg import PlotSpec

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

# A 100 um wide ram, 1 mm long along the waveguide, pressed with 20 N.
ram = RamLoad(width=100e-6, length=1e-3, force=20.0)
p = ram_pressure(ram)
a = ram.width / 2.0
print(f"contact pressure p = F / (width * length) = {p:.4e} Pa")

# Centerline walk: sigma_zz/p starts at 1 under the ram and decays with
# depth. At z = 2a the classical tables give 0.5498.
print("\n    z/a   sigma_zz/p   line-load sigma_zz/p")
for z_over_a in (0.5, 1.0, 2.0, 4.0, 8.0):
    site = WaveguideSite(0.0, z_over_a * a)
    strip = strip_load_stress(p, a, site).sigma_zz / p
    line = line_load_stress(p * 2 * a, site).sigma_zz / p
    print(f"  {z_over_a:5.1f}   {strip:10.4f}   {line:10.4f}")

# The closed form should match direct numerical integration of line
# loads across the strip to near machine precision.
site = WaveguideSite(30e-6, 100e-6)
closed = strip_load_stress(p, a, site)
numeric = strip_load_stress_numeric(p, a, site, n_panels=20_000)
err = max(
    abs(closed.sigma_xx - numeric.sigma_xx),
    abs(closed.sigma_zz - numeric.sigma_zz),
    abs(closed.tau_xz - numeric.tau_xz),
) / p
print(f"\nclosed form vs 20k-panel integration at (30 um, 100 um): {err:.2e} of p")

# Off the centerline the shear stress rotates the principal axes.
s1, s2, angle = principal_stresses(closed)
print(f"principal stresses {s1:.3e}, {s2:.3e} Pa at {np.degrees(angle):.1f} deg")

# Lateral profile at waveguide depth z = a: this is the stress a row of
# waveguides actually sees. Note sigma_zz falls off much faster than the
# geometric shadow of the ram.
xs = np.linspace(-5 * a, 5 * a, 201)
sigma_zz = np.empty_like(xs)
sigma_xx = np.empty_like(xs)
for i, x in enumerate(xs):
    t = strip_load_stress(p, a, WaveguideSite(float(x), a), FUSED_SILICA.poisson_ratio)
    sigma_zz[i] = t.sigma_zz / p
    sigma_xx[i] = t.sigma_xx / p

emit_svg(
    {"x_over_a": xs / a, "sigma_zz_over_p": sigma_zz, "sigma_xx_over_p": sigma_xx},
    PlotSpec(
        x_column="x_over_a",
        y_columns=("sigma_zz_over_p", "sigma_xx_over_p"),
        title="Lateral stress profile at depth z = a",
        x_label="x / a",
        y_label="stress / p",
        legend=("sigma_zz / p", "sigma_xx / p"),
    ),
    OUT / "stress_profile.svg",
)
print(f"\nwrote {OUT / 'stress_profile.svg'}")
