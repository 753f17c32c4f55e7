"""
Mechanical crosstalk between neighboring waveguides
===================================================

Pressing on one waveguide strains its neighbors too, because the stress
field spreads through the bulk. This script maps the stray differential
phase picked up by waveguides at increasing lateral offset from the ram,
all buried at the same depth.

The interesting feature is not just the decay. The lab-frame phase
tracks sigma_zz - sigma_xx, which changes sign once the waveguide sits
outside the lobe of vertical compression, near |x| = sqrt(z^2 + a^2).
Beyond that point the neighbor sees a phase of the opposite sign whose
magnitude grows again before the overall geometric decay wins.
"""

from pathlib import Path

import numpy as np

from strainsim import FUSED_SILICA, ProbeLight, RamLoad, WaveguideSite, ram_pressure, strip_load_stress
from strainsim.photoelastics import index_change_full, phase_from_index
from strainsim.scenarios import emit_svg
from strainsim.svg import PlotSpec

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

ram = RamLoad(width=100e-6, length=1e-3, force=20.0)
probe = ProbeLight(wavelength=830e-9, polarization="V")
p = ram_pressure(ram)
a = ram.width / 2.0
depth = 100e-6  # one ram width below the surface

def stray_phase(x):
    """Differential phase at lateral offset x, including shear."""
    tensor = strip_load_stress(p, a, WaveguideSite(x, depth), FUSED_SILICA.poisson_ratio)
    dn = index_change_full(tensor, FUSED_SILICA)
    return phase_from_index(dn, ram.length, probe.wavelength).delta_theta

anchor = stray_phase(0.0)
print(f"phase under the ram center: {anchor:.5f} rad")

xs = np.linspace(0.0, 3 * depth, 121)
normalized = np.array([stray_phase(float(x)) for x in xs]) / anchor

for x_over_w in (0.5, 1.0, 1.5, 2.0, 3.0):
    value = stray_phase(x_over_w * depth) / anchor
    print(f"  |x| = {x_over_w:.1f} w  normalized phase {value:+.4f}")

crossing = xs[np.flatnonzero(np.diff(np.sign(normalized)))[0]] / depth
print(f"sign reversal between {crossing:.3f} w and the next sample")
print(f"predicted at sqrt(z^2 + a^2) / z = {np.hypot(depth, a) / depth:.3f} w")

emit_svg(
    {"x_over_w": xs / depth, "normalized_phase": normalized},
    PlotSpec(
        x_column="x_over_w",
        y_columns=("normalized_phase",),
        title="Stray phase vs lateral offset at depth w",
        x_label="|x| / w",
        y_label="phase / phase(0)",
    ),
    OUT / "crosstalk_map.svg",
)
print(f"wrote {OUT / 'crosstalk_map.svg'}")
