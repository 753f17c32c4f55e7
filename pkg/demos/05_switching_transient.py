"""
Microsecond switching with a piezo-driven ram
=============================================

The ram is pushed by a piezo stack, modeled as a damped second-order
system between drive voltage and delivered stress. This script
calibrates the resonance so a voltage step produces a 1.7 us optical
rise, then runs the full chain: voltage step, stress transient,
interferometer output.

The fast edge is bought with ringing. At the natural damping of the
stack the 2% settling takes about a millisecond, which is the real
repetition-rate limit, not the rise time. The ultimate floor is set by
sound crossing the contact: about 3.3 ns for a 10 um contact in silica.
"""

from pathlib import Path

import numpy as np

from strainsim import (
    FUSED_SILICA,
    ProbeLight,
    acoustic_rise_limit,
    calibrate,
    optical_transient,
    rise_time_10_90,
    settling_time,
    stress_for_differential_phase,
)
from strainsim.dynamics import DriveWaveform
from strainsim.scenarios import emit_svg
from strainsim.svg import PlotSpec

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

probe = ProbeLight(wavelength=830e-9, polarization="H")
length = 1e-3

# Drive-to-stress gain: 60 V should deliver exactly a pi phase, so one
# step switches the interferometer from one port to the other.
pi_stress = stress_for_differential_phase(np.pi, probe, length, FUSED_SILICA)
gain = pi_stress / 60.0
print(f"pi stress {pi_stress:.4e} Pa, gain {gain:.4e} Pa/V")

# Calibrate the resonance for a 1.7 us 10-90 rise at light damping, with
# a 2 us transport delay between trigger and motion.
model = calibrate(
    1.7e-6,
    damping_ratio=0.005,
    stress_gain=gain,
    transport_delay=2.0e-6,
)
print(f"calibrated natural frequency: {model.natural_frequency:.4e} rad/s")

drive = DriveWaveform(kind="step", high_voltage=60.0, switch_times=(0.0,))
trace = optical_transient(model, drive, probe, length, FUSED_SILICA, duration=2e-3, dt=1e-7)

rise = rise_time_10_90(trace)
settle = settling_time(trace, band=0.02)
print(f"10-90 rise: {rise * 1e6:.3f} us (target 1.7)")
print(f"2% settling: {settle * 1e3:.3f} ms")
print(f"acoustic floor for a 10 um contact: {acoustic_rise_limit(10e-6, 3000.0) * 1e9:.2f} ns")

# Zoom on the first 20 us: flat until the 2 us trigger delay, then the
# optical edge, then the start of the ring-down.
n = int(20e-6 / trace.dt)
emit_svg(
    {
        "time_us": trace.time_samples[:n] * 1e6,
        "intensity_h": trace.intensity_h[:n],
        "intensity_v": trace.intensity_v[:n],
    },
    PlotSpec(
        x_column="time_us",
        y_columns=("intensity_h", "intensity_v"),
        title="Optical switching edge",
        x_label="time (us)",
        y_label="normalized intensity",
        legend=("port H", "port V"),
    ),
    OUT / "switching_edge.svg",
)

# The full trace shows why settling dominates: the envelope decays with
# time constant 1 / (zeta * w0), hundreds of periods.
stride = 20
emit_svg(
    {
        "time_ms": trace.time_samples[::stride] * 1e3,
        "stress_pa": trace.stress[::stride],
    },
    PlotSpec(
        x_column="time_ms",
        y_columns=("stress_pa",),
        title="Stress ring-down over the full window",
        x_label="time (ms)",
        y_label="stress (Pa)",
    ),
    OUT / "ring_down.svg",
)
print(f"wrote {OUT / 'switching_edge.svg'} and {OUT / 'ring_down.svg'}")
