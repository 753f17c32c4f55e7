"""Switching transients of the piezo-driven ram.

The mechanical chain (piezo stack, ram, chip contact) is lumped into a
single underdamped second-order system: drive voltage in, stress at the
waveguide out. A pure transport delay models the trigger-to-motion lag.
The step response is integrated with fixed-step RK4 so repeated runs
are bit-identical; a closed-form solution of the same linear system is
provided for cross-checking, and the rise, settling, and acoustic-limit
metrics quantify switching speed.

Conventions: the state x is the stress expressed in drive-voltage
units, so stress = stress_gain * x and the DC response to a V-volt
step is stress_gain * V.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .materials import Material, ProbeLight
from .photoelastics import birefringent_phase

__all__ = [
    "NumericalGuardError",
    "ActuatorModel",
    "DriveWaveform",
    "Transient",
    "drive_level",
    "step_response",
    "analytic_step_response",
    "rise_time_10_90",
    "settling_time",
    "calibrate",
    "acoustic_rise_limit",
    "optical_transient",
]

#: 10-90 rise time of the undamped second-order step is this over w0
#: (arccos 0.1 - arccos 0.9).
UNDAMPED_RISE_CONSTANT = 1.0196020938370745


class NumericalGuardError(RuntimeError):
    """A resolution or search-bracket guard tripped.

    Raised instead of silently producing unreliable numbers: the time
    step is too coarse for the resonance, or a calibration bracket does
    not contain the target.
    """


@dataclass(frozen=True)
class ActuatorModel:
    """Lumped second-order model of the piezo-ram-chip chain.

    Attributes
    ----------
    natural_frequency : float
        Resonance omega_0 in rad/s.
    damping_ratio : float
        Dimensionless, strictly inside (0, 1); the chain rings.
    stress_gain : float
        DC stress per drive volt, Pa/V.
    transport_delay : float
        Trigger-to-motion lag in s.
    """

    natural_frequency: float
    damping_ratio: float
    stress_gain: float
    transport_delay: float

    def __post_init__(self) -> None:
        if self.natural_frequency <= 0.0:
            raise ValueError("natural_frequency must be positive")
        if not 0.0 < self.damping_ratio < 1.0:
            raise ValueError("damping_ratio must lie strictly in (0, 1)")
        if self.stress_gain < 0.0 or self.transport_delay < 0.0:
            raise ValueError("stress_gain and transport_delay must be >= 0")


@dataclass(frozen=True)
class DriveWaveform:
    """Piecewise-constant drive: low before the first switch time.

    ``kind`` "step" turns on at the first switch time and stays on;
    "square" toggles at every switch time. ``max_voltage`` is the
    actuator's rated ceiling; raise it explicitly to drive harder.
    """

    kind: str
    high_voltage: float
    switch_times: tuple[float, ...]
    max_voltage: float = 70.0

    def __post_init__(self) -> None:
        if self.kind not in ("step", "square"):
            raise ValueError("drive kind must be 'step' or 'square'")
        if not 0.0 <= self.high_voltage <= self.max_voltage:
            raise ValueError(
                f"high_voltage must lie in [0, {self.max_voltage}] V"
            )
        if len(self.switch_times) == 0:
            raise ValueError("at least one switch time is required")
        times = tuple(float(t) for t in self.switch_times)
        if any(not math.isfinite(t) for t in times):
            raise ValueError("switch times must be finite")
        if any(b < a for a, b in zip(times, times[1:])):
            raise ValueError("switch times must be non-decreasing")
        object.__setattr__(self, "switch_times", times)


def drive_level(drive: DriveWaveform, t) -> np.ndarray:
    """Commanded drive voltage at time(s) t, before any transport delay."""
    t = np.asarray(t, dtype=float)
    toggles = np.zeros(t.shape, dtype=int)
    for switch in drive.switch_times:
        toggles += t >= switch
    if drive.kind == "step":
        on = toggles >= 1
    else:
        on = (toggles % 2) == 1
    return drive.high_voltage * on.astype(float)


@dataclass(frozen=True)
class Transient:
    """Uniformly sampled time series from one simulation run.

    ``stress`` is always present; the optical intensities and the
    commanded drive are attached when the producing operation computes
    them. All arrays share the time grid.
    """

    time_samples: np.ndarray
    stress: np.ndarray
    drive_v: np.ndarray | None = None
    intensity_h: np.ndarray | None = None
    intensity_v: np.ndarray | None = None

    def __post_init__(self) -> None:
        t = self.time_samples
        if t.ndim != 1 or t.size < 2:
            raise ValueError("need a 1-D time grid with at least two samples")
        steps = np.diff(t)
        if steps[0] <= 0.0 or not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
            raise ValueError("time samples must be uniformly increasing")
        for name in ("stress", "drive_v", "intensity_h", "intensity_v"):
            arr = getattr(self, name)
            if arr is not None and arr.shape != t.shape:
                raise ValueError(f"{name} must match the time grid shape")

    @property
    def dt(self) -> float:
        return float(self.time_samples[1] - self.time_samples[0])


def _check_resolution(model: ActuatorModel, dt: float) -> None:
    limit = 2.0 * math.pi / (50.0 * model.natural_frequency)
    if dt > limit:
        raise NumericalGuardError(
            f"dt = {dt:g} s is too coarse for the resonance; "
            f"need dt <= {limit:g} s (50 steps per period)"
        )


def step_response(
    model: ActuatorModel, drive: DriveWaveform, duration: float, dt: float
) -> Transient:
    """Integrate the stress response to a drive waveform.

    Fixed-step RK4 on x'' + 2 zeta w0 x' + w0^2 x = w0^2 u(t - t_d),
    from rest at t = 0. The drive is held constant across each step at
    its midpoint value (it is piecewise constant anyway), so switches
    that land on grid points are represented exactly and the integrator
    keeps its full order; switches inside a step are deferred to the
    next step boundary.

    Parameters
    ----------
    model : ActuatorModel
    drive : DriveWaveform
    duration : float
        Total simulated span in s; the trace has round(duration/dt) + 1
        samples including t = 0.
    dt : float
        Step size in s. Must resolve the resonance with at least 50
        steps per natural period or :class:`NumericalGuardError` is
        raised.
    """
    if duration <= 0.0 or dt <= 0.0:
        raise ValueError("duration and dt must be positive")
    _check_resolution(model, dt)
    n_steps = int(round(duration / dt))
    if n_steps < 1:
        raise ValueError("duration shorter than one step")

    time = np.arange(n_steps + 1) * dt
    # Zero-order hold: one drive value per step, sampled at the step
    # midpoint and shifted by the transport delay.
    midpoints = (np.arange(n_steps) + 0.5) * dt
    u = drive_level(drive, midpoints - model.transport_delay)

    w0 = model.natural_frequency
    w0_sq = w0 * w0
    two_zw = 2.0 * model.damping_ratio * w0

    x = 0.0
    v = 0.0
    xs = np.empty(n_steps + 1)
    xs[0] = 0.0
    for k in range(n_steps):
        uk = u[k]

        k1x = v
        k1v = w0_sq * (uk - x) - two_zw * v

        x2 = x + 0.5 * dt * k1x
        v2 = v + 0.5 * dt * k1v
        k2x = v2
        k2v = w0_sq * (uk - x2) - two_zw * v2

        x3 = x + 0.5 * dt * k2x
        v3 = v + 0.5 * dt * k2v
        k3x = v3
        k3v = w0_sq * (uk - x3) - two_zw * v3

        x4 = x + dt * k3x
        v4 = v + dt * k3v
        k4x = v4
        k4v = w0_sq * (uk - x4) - two_zw * v4

        x += dt * (k1x + 2.0 * (k2x + k3x) + k4x) / 6.0
        v += dt * (k1v + 2.0 * (k2v + k3v) + k4v) / 6.0
        xs[k + 1] = x

    return Transient(
        time_samples=time,
        stress=model.stress_gain * xs,
        drive_v=drive_level(drive, time),
    )

def analytic_step_response(
    model: ActuatorModel, t, high_voltage: float = 1.0
) -> np.ndarray:
    """Closed-form stress response to a step switching on at t = 0.

    Standard underdamped solution, delayed by the transport delay and
    scaled to stress units. Serves as the exact reference for the RK4
    path; the two are independent routes through the same linear model.
    """
    t = np.asarray(t, dtype=float)
    zeta = model.damping_ratio
    w0 = model.natural_frequency
    wd = w0 * math.sqrt(1.0 - zeta * zeta)
    tau = np.maximum(t - model.transport_delay, 0.0)
    envelope = np.exp(-zeta * w0 * tau)
    ringing = np.cos(wd * tau) + (zeta / math.sqrt(1.0 - zeta * zeta)) * np.sin(
        wd * tau
    )
    x = 1.0 - envelope * ringing
    return model.stress_gain * high_voltage * np.where(tau > 0.0, x, 0.0)


def _settled_value(signal: np.ndarray) -> float:
    """Estimate the settled level from the trailing tenth of a trace."""
    tail = signal[-max(2, signal.size // 10) :]
    return float(tail.mean())


def _first_crossing(time: np.ndarray, signal: np.ndarray, level: float):
    """Time of the first upward crossing of level, linearly interpolated."""
    above = np.flatnonzero(signal >= level)
    if above.size == 0:
        return None
    i = int(above[0])
    if i == 0:
        return float(time[0])
    s0, s1 = signal[i - 1], signal[i]
    frac = (level - s0) / (s1 - s0)
    return float(time[i - 1] + frac * (time[i] - time[i - 1]))


def rise_time_10_90(transient: Transient, settled_value: float | None = None) -> float:
    """10-90 rise time of the stress trace.

    The settled level is inferred from the tail of the trace unless
    supplied; pass the known DC value when the trace is short compared
    to its settling time. Crossing times are linearly interpolated, and
    the rise is the gap between the first crossings of the 10% and 90%
    levels.
    """
    signal = transient.stress
    settled = _settled_value(signal) if settled_value is None else float(settled_value)
    if settled == 0.0:
        raise ValueError("settled value is zero; rise time undefined")
    if settled < 0.0:
        signal = -signal
        settled = -settled
    t10 = _first_crossing(transient.time_samples, signal, 0.1 * settled)
    t90 = _first_crossing(transient.time_samples, signal, 0.9 * settled)
    if t90 is None:
        raise ValueError("signal never reaches 90% of its settled value")
    return t90 - t10


def settling_time(
    transient: Transient, band: float, settled_value: float | None = None
) -> float:
    """Last time the stress leaves the +/- band around its settled value.

    ``band`` is a fraction of the settled level, strictly inside
    (0, 0.5). Returns 0 for a trace that never leaves the band, and the
    interpolated final band entry otherwise. A trace still outside the
    band at its end has no settling time and is rejected.
    """
    if not 0.0 < band < 0.5:
        raise ValueError("band must lie strictly in (0, 0.5)")
    settled = (
        _settled_value(transient.stress) if settled_value is None else float(settled_value)
    )
    tolerance = band * abs(settled)
    if tolerance == 0.0:
        raise ValueError("settled value is zero; settling band undefined")
    deviation = np.abs(transient.stress - settled)
    outside = np.flatnonzero(deviation > tolerance)
    if outside.size == 0:
        return 0.0
    i = int(outside[-1])
    if i == deviation.size - 1:
        raise ValueError("signal is still outside the band at the end of the trace")
    d0, d1 = deviation[i], deviation[i + 1]
    frac = (d0 - tolerance) / (d0 - d1)
    time = transient.time_samples
    return float(time[i] + frac * (time[i + 1] - time[i]))


def _simulated_rise(natural_frequency: float, damping_ratio: float) -> float:
    """Rise time of a unit step response at the given parameters."""
    model = ActuatorModel(
        natural_frequency=natural_frequency,
        damping_ratio=damping_ratio,
        stress_gain=1.0,
        transport_delay=0.0,
    )
    drive = DriveWaveform(kind="step", high_voltage=1.0, switch_times=(0.0,))
    period = 2.0 * math.pi / natural_frequency
    transient = step_response(model, drive, duration=3.0 * period, dt=period / 1000.0)
    return rise_time_10_90(transient, settled_value=1.0)


def calibrate(
    target_rise: float,
    damping_ratio: float = 0.005,
    *,
    stress_gain: float = 1.0,
    transport_delay: float = 2.0e-6,
    rise_tolerance: float = 1.0e-3,
) -> ActuatorModel:
    """Find the natural frequency that produces a given 10-90 rise time.

    Bisection on omega_0 against the simulated step response, converging
    when the simulated rise is within ``rise_tolerance`` (relative) of
    the target. The returned model carries the requested damping ratio,
    gain, and transport delay unchanged; only omega_0 is fitted.

    The initial bracket spans a factor of 16 around the undamped
    estimate 1.0196/target. If the bracket fails to straddle the target
    the search stops with :class:`NumericalGuardError` instead of
    guessing.
    """
    if target_rise <= 0.0:
        raise ValueError("target_rise must be positive")
    if not 0.0 < damping_ratio < 1.0:
        raise ValueError("damping_ratio must lie strictly in (0, 1)")
    seed = UNDAMPED_RISE_CONSTANT / target_rise
    lo = 0.25 * seed
    hi = 4.0 * seed
    # Rise time decreases as omega_0 grows, so the bracket must give
    # rise(lo) > target > rise(hi).
    if not (
        _simulated_rise(lo, damping_ratio)
        > target_rise
        > _simulated_rise(hi, damping_ratio)
    ):
        raise NumericalGuardError(
            "calibration bracket does not straddle the target rise time"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        rise = _simulated_rise(mid, damping_ratio)
        if abs(rise - target_rise) <= rise_tolerance * target_rise:
            return ActuatorModel(
                natural_frequency=mid,
                damping_ratio=damping_ratio,
                stress_gain=stress_gain,
                transport_delay=transport_delay,
            )
        if rise > target_rise:
            lo = mid
        else:
            hi = mid
    raise NumericalGuardError("calibration bisection failed to converge")


def acoustic_rise_limit(mode_diameter: float, sound_speed: float) -> float:
    """Transit time of a strain front across the guided mode, d / v.

    The hard floor on switching speed regardless of drive electronics:
    stress cannot finish changing across the mode faster than sound
    crosses it.
    """
    if mode_diameter <= 0.0 or sound_speed <= 0.0:
        raise ValueError("mode diameter and sound speed must be positive")
    return mode_diameter / sound_speed


def optical_transient(
    model: ActuatorModel,
    drive: DriveWaveform,
    probe: ProbeLight,
    interaction_length: float,
    material: Material,
    duration: float,
    dt: float,
) -> Transient:
    """Stress transient plus the optical output it produces.

    Runs :func:`step_response`, converts stress to differential phase
    (linear, so the whole trace maps through one coefficient), and
    projects onto the two output polarizations. The two intensity
    traces are exactly complementary.
    """
    transient = step_response(model, drive, duration, dt)
    phase_per_pa = birefringent_phase(
        1.0, probe, interaction_length, material
    ).delta_theta
    delta_theta = phase_per_pa * transient.stress
    co_polarized = np.cos(0.5 * delta_theta) ** 2
    cross_polarized = np.sin(0.5 * delta_theta) ** 2
    if probe.polarization == "H":
        intensity_h, intensity_v = co_polarized, cross_polarized
    else:
        intensity_h, intensity_v = cross_polarized, co_polarized
    return Transient(
        time_samples=transient.time_samples,
        stress=transient.stress,
        drive_v=transient.drive_v,
        intensity_h=intensity_h,
        intensity_v=intensity_v,
    )
