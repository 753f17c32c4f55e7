"""
Classical fringe of the strain-driven interferometer
====================================================

Squeezing the chip makes the glass birefringent: the vertical and
horizontal polarization components of the probe pick up different
phases. Between two half-wave plates the squeezed region acts as a
Mach-Zehnder with the differential phase as its knob, so the output
intensity traces cos^2(delta_theta / 2).
"""

from pathlib import Path

import numpy as np

from strainsim import (
    FUSED_SILICA,
    PhaseShift,
    ProbeLight,
    birefringent_phase,
    fringe_visibility,
    pmzi_intensity,
    pmzi_transfer,
    required_stress,
    stress_for_differential_phase,
)
from strainsim.scenarios import emit_svg
from strainsim.svg import PlotSpec

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

probe = ProbeLight(wavelength=830e-9, polarization="V")
length = 1e-3

# How hard do we have to press for one full fringe? A 2 pi differential
# phase over a 1 mm interaction length takes about 152 MPa.
sigma_2pi = required_stress(2 * np.pi, "V", probe, length, FUSED_SILICA)
print(f"stress for a 2 pi fringe: {sigma_2pi:.4e} Pa over {length * 1e3:.0f} mm")

# The same relation runs forward: pick a stress, get the phase.
sigma = 14e6
phase = birefringent_phase(sigma, probe, length, FUSED_SILICA)
print(f"at {sigma:.2e} Pa the differential phase is {phase.delta_theta:.4f} rad")

# Scan the phase over two fringes and record both output ports. The
# transfer matrix gives the full fields; intensity port 1 is the
# cos^2 law, port 2 its complement.
deltas = np.linspace(0.0, 4 * np.pi, 801)
port1 = np.empty_like(deltas)
for i, d in enumerate(deltas):
    w = pmzi_transfer(PhaseShift(theta_h=0.0, theta_v=float(d), interaction_length=length))
    port1[i] = abs(w[0, 0]) ** 2
port2 = 1.0 - port1

assert np.allclose(port1, pmzi_intensity(deltas), atol=1e-14)
print(f"ideal visibility: {fringe_visibility(port1):.6f}")

# Real detectors see a floor: dark counts and imperfect polarizers keep a
# few percent of the light from interfering. A 1.5% floor caps the
# visibility at 0.97.
floor = 0.015
measured = floor + (1 - 2 * floor) * port1
print(
    f"with a {floor:.1%} intensity floor the visibility drops to "
    f"{fringe_visibility(measured):.4f}"
)

# The stress axis makes the plot physical: each phase corresponds to a
# load on the ram.
stresses = deltas * stress_for_differential_phase(1.0, probe, length, FUSED_SILICA)
emit_svg(
    {"stress_pa": stresses, "port1": measured, "port2": 1.0 - measured},
    PlotSpec(
        x_column="stress_pa",
        y_columns=("port1", "port2"),
        title="Classical fringe vs applied stress (1.5% floor)",
        x_label="stress (Pa)",
        y_label="normalized intensity",
        legend=("port 1", "port 2"),
    ),
    OUT / "classical_fringe.svg",
)
print(f"wrote {OUT / 'classical_fringe.svg'}")
