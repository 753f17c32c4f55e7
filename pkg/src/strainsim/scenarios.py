"""File-producing experiment runs.

Each runner takes a validated :class:`~strainsim.config.ScenarioConfig`,
computes one scan with the library modules, and writes CSV (plus SVG on
request) into the configured output directory. Every run finishes with
a ``manifest.json`` naming each emitted file, the config hash, and the
run's summary metrics, and identical configs produce byte-identical
files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping

import numpy as np

from . import __version__
from .config import (
    ConfigError,
    CrosstalkParams,
    FieldParams,
    FringeParams,
    HomParams,
    ScenarioConfig,
    TransientParams,
)
from .dynamics import DriveWaveform, calibrate, optical_transient, rise_time_10_90, settling_time
from .elasticity import sample_field, strip_load_stress
from .materials import WaveguideSite, ram_pressure
from .photoelastics import index_change_full, phase_from_index, stress_for_differential_phase
from .polarization import fringe_visibility, pmzi_intensity
from .quantum import count_mean_crossings, hom_dip, quantum_fringe_scan
from .svg import PlotSpec, render_line_plot

__all__ = [
    "RunManifest",
    "write_csv",
    "emit_svg",
    "run_fringe",
    "run_crosstalk",
    "run_hom",
    "run_transient",
    "run_field",
    "run_scenario",
]


@dataclass(frozen=True)
class RunManifest:
    """Record of one completed run.

    ``files`` lists every file the run left in the output directory,
    itself included; ``metrics`` carries the scalar summaries the
    scenario computed alongside its scan.
    """

    scenario: str
    config_sha256: str
    tool_version: str
    files: tuple[str, ...]
    metrics: dict[str, float]

    def to_json(self) -> str:
        payload = {
            "scenario": self.scenario,
            "config_sha256": self.config_sha256,
            "tool_version": self.tool_version,
            "files": list(self.files),
            "metrics": self.metrics,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_csv(path: Path, columns: Mapping[str, np.ndarray]) -> None:
    """Write named columns as CSV: one header row, LF endings, floats
    at full 17-significant-digit precision so files double as numerical
    regression baselines."""
    names = list(columns)
    arrays = [np.asarray(columns[n], dtype=float) for n in names]
    length = arrays[0].size
    if any(a.ndim != 1 or a.size != length for a in arrays):
        raise ValueError("all columns must be 1-D and equally long")
    rows = [",".join(names)]
    for i in range(length):
        rows.append(",".join(f"{a[i]:.17g}" for a in arrays))
    path.write_bytes(("\n".join(rows) + "\n").encode("ascii"))


def emit_svg(columns: Mapping[str, np.ndarray], spec: PlotSpec, path: Path) -> None:
    """Render a line plot of the columns and write it next to the CSV."""
    path.write_bytes(render_line_plot(columns, spec).encode("ascii"))


def _finish(config: ScenarioConfig, metrics: dict[str, float]) -> RunManifest:
    """Write the manifest listing everything the run emitted."""
    files = sorted(
        p.name for p in config.out_dir.iterdir() if p.is_file() and p.name != "manifest.json"
    )
    manifest = RunManifest(
        scenario=config.scenario,
        config_sha256=config.config_sha256,
        tool_version=__version__,
        files=tuple(files + ["manifest.json"]),
        metrics=metrics,
    )
    (config.out_dir / "manifest.json").write_bytes(manifest.to_json().encode("ascii"))
    return manifest


def _prepare_out_dir(config: ScenarioConfig) -> None:
    config.out_dir.mkdir(parents=True, exist_ok=True)


def run_fringe(config: ScenarioConfig) -> RunManifest:
    """Classical fringe: sweep the differential phase, record both ports.

    The stress column is the vertical stress that would produce each
    phase over the configured interaction length. A nonzero intensity
    floor compresses both ports toward one half, modeling imperfect
    extinction, and sets the reported visibility below one.
    """
    params = config.params
    assert isinstance(params, FringeParams)
    _prepare_out_dir(config)
    delta_theta = np.linspace(
        params.delta_theta_min_rad, params.delta_theta_max_rad, params.n_samples
    )
    sigma_per_rad = stress_for_differential_phase(
        1.0, config.probe, params.interaction_length_m, config.material
    )
    floor = params.intensity_floor
    port1 = floor + (1.0 - 2.0 * floor) * pmzi_intensity(delta_theta)
    port2 = 1.0 - port1
    columns = {
        "delta_theta_rad": delta_theta,
        "sigma_z_pa": sigma_per_rad * delta_theta,
        "intensity_port1": port1,
        "intensity_port2": port2,
    }
    write_csv(config.out_dir / "fringe.csv", columns)
    if config.write_svg:
        emit_svg(
            columns,
            PlotSpec(
                x_column="delta_theta_rad",
                y_columns=("intensity_port1", "intensity_port2"),
                title="Classical fringe",
                x_label="differential phase (rad)",
                y_label="output intensity",
                legend=("port 1", "port 2"),
            ),
            config.out_dir / "fringe.svg",
        )
    metrics = {"visibility": fringe_visibility(port1)}
    return _finish(config, metrics)


def run_crosstalk(config: ScenarioConfig) -> RunManifest:
    """Phase picked up by neighboring guides at fixed depth.

    Scans lateral offset at the configured depth, converts the local
    stress tensor to a lab-frame differential phase, and normalizes to
    the value directly under the ram at that same depth.
    """
    params = config.params
    assert isinstance(params, CrosstalkParams)
    _prepare_out_dir(config)
    p = ram_pressure(config.ram)
    half_width = 0.5 * config.ram.width
    nu = config.material.poisson_ratio
    length = config.ram.length
    wavelength = config.probe.wavelength

    def phase_at(x: float) -> float:
        tensor = strip_load_stress(p, half_width, WaveguideSite(x, params.depth_m), nu)
        dn = index_change_full(tensor, config.material)
        return phase_from_index(dn, length, wavelength).delta_theta

    xs = np.linspace(0.0, params.x_max_m, params.n_samples)
    phases = np.array([phase_at(float(x)) for x in xs])
    anchor = phase_at(0.0)
    columns = {
        "x_m": xs,
        "z_m": np.full(xs.size, params.depth_m),
        "delta_theta_rad": phases,
        "normalized_phase": phases / anchor,
    }
    write_csv(config.out_dir / "crosstalk.csv", columns)
    if config.write_svg:
        emit_svg(
            columns,
            PlotSpec(
                x_column="x_m",
                y_columns=("normalized_phase",),
                title="Phase crosstalk at fixed depth",
                x_label="lateral offset (m)",
                y_label="phase / phase under the ram",
            ),
            config.out_dir / "crosstalk.svg",
        )
    metrics = {"anchor_delta_theta_rad": anchor}
    return _finish(config, metrics)


def run_hom(config: ScenarioConfig) -> RunManifest:
    """Two-photon scans: coincidence vs delay and vs phase.

    The delay scan maps the bunching dip through the Gaussian overlap
    model; the phase scan records the coincidence fringe next to the
    classical intensity so the period halving is visible in one file.
    """
    params = config.params
    assert isinstance(params, HomParams)
    _prepare_out_dir(config)
    delays = np.linspace(-params.delay_max_s, params.delay_max_s, params.n_delay_samples)
    dip = hom_dip(delays, params.coherence_time_s)
    delay_columns = {"delay_s": delays, "coincidence_prob": dip}
    write_csv(config.out_dir / "hom_delay.csv", delay_columns)

    phases = np.linspace(0.0, params.delta_theta_max_rad, params.n_phase_samples)
    _, coincidence, classical = quantum_fringe_scan(phases, params.overlap)
    phase_columns = {
        "delta_theta_rad": phases,
        "coincidence_prob": coincidence,
        "classical_intensity": classical,
    }
    write_csv(config.out_dir / "hom_phase.csv", phase_columns)

    if config.write_svg:
        emit_svg(
            delay_columns,
            PlotSpec(
                x_column="delay_s",
                y_columns=("coincidence_prob",),
                title="Two-photon bunching dip",
                x_label="relative delay (s)",
                y_label="coincidence probability",
            ),
            config.out_dir / "hom_delay.svg",
        )
        emit_svg(
            phase_columns,
            PlotSpec(
                x_column="delta_theta_rad",
                y_columns=("coincidence_prob", "classical_intensity"),
                title="Quantum and classical fringes",
                x_label="differential phase (rad)",
                y_label="probability / intensity",
                legend=("coincidence", "classical"),
            ),
            config.out_dir / "hom_phase.svg",
        )
    metrics = {
        "dip_minimum": float(dip.min()),
        "coincidence_mean_crossings": float(count_mean_crossings(coincidence)),
        "classical_mean_crossings": float(count_mean_crossings(classical)),
    }
    return _finish(config, metrics)


def run_transient(config: ScenarioConfig) -> RunManifest:
    """Switching transient with the actuator calibrated to a rise time.

    The drive steps from zero to the configured voltage at t = 0; the
    stress gain is set so the pi voltage produces exactly a pi phase at
    DC. Rise and settling are measured on the emitted trace against the
    known settled stress and recorded in the manifest together with the
    configured trigger delay.
    """
    params = config.params
    assert isinstance(params, TransientParams)
    _prepare_out_dir(config)
    pi_stress = stress_for_differential_phase(
        math.pi, config.probe, params.interaction_length_m, config.material
    )
    gain = pi_stress / params.pi_voltage_v
    model = calibrate(
        params.rise_time_target_s,
        params.damping_ratio,
        stress_gain=gain,
        transport_delay=params.trigger_delay_s,
    )
    drive = DriveWaveform(
        kind="step", high_voltage=params.drive_voltage_v, switch_times=(0.0,)
    )
    trace = optical_transient(
        model,
        drive,
        config.probe,
        params.interaction_length_m,
        config.material,
        params.duration_s,
        params.dt_s,
    )
    columns = {
        "time_s": trace.time_samples,
        "drive_v": trace.drive_v,
        "stress_pa": trace.stress,
        "intensity_h": trace.intensity_h,
        "intensity_v": trace.intensity_v,
    }
    write_csv(config.out_dir / "transient.csv", columns)
    if config.write_svg:
        emit_svg(
            columns,
            PlotSpec(
                x_column="time_s",
                y_columns=("intensity_h", "intensity_v"),
                title="Switching transient",
                x_label="time (s)",
                y_label="output intensity",
                legend=("H output", "V output"),
            ),
            config.out_dir / "transient.svg",
        )
    settled_stress = gain * params.drive_voltage_v
    try:
        rise = rise_time_10_90(trace, settled_value=settled_stress)
        settle = settling_time(trace, params.settling_band, settled_value=settled_stress)
    except ValueError as exc:
        raise ConfigError(
            f"duration_s is too short to measure the transient: {exc}"
        ) from exc
    metrics = {
        "trigger_delay_s": params.trigger_delay_s,
        "rise_time_s": rise,
        "settling_time_s": settle,
        "natural_frequency_rad_s": model.natural_frequency,
    }
    return _finish(config, metrics)


def run_field(config: ScenarioConfig) -> RunManifest:
    """Stress field on a rectangular grid below the ram."""
    params = config.params
    assert isinstance(params, FieldParams)
    _prepare_out_dir(config)
    x = np.linspace(params.x_min_m, params.x_max_m, params.n_x)
    z = np.linspace(params.z_min_m, params.z_max_m, params.n_z)
    p = ram_pressure(config.ram)
    grid = sample_field(
        p, 0.5 * config.ram.width, x, z, config.material.poisson_ratio
    )
    columns = {
        "x_m": np.tile(x, params.n_z),
        "z_m": np.repeat(z, params.n_x),
        "sigma_xx_pa": grid.sigma_xx.ravel(),
        "sigma_zz_pa": grid.sigma_zz.ravel(),
        "tau_xz_pa": grid.tau_xz.ravel(),
        "sigma_yy_pa": grid.sigma_yy.ravel(),
    }
    write_csv(config.out_dir / "field.csv", columns)
    if config.write_svg:
        top = {
            "x_m": x,
            "sigma_zz_pa": grid.sigma_zz[0],
            "sigma_xx_pa": grid.sigma_xx[0],
        }
        emit_svg(
            top,
            PlotSpec(
                x_column="x_m",
                y_columns=("sigma_zz_pa", "sigma_xx_pa"),
                title=f"Stress profile at z = {params.z_min_m:g} m",
                x_label="lateral offset (m)",
                y_label="stress (Pa)",
                legend=("sigma_zz", "sigma_xx"),
            ),
            config.out_dir / "field.svg",
        )
    metrics = {"sigma_zz_max_pa": float(grid.sigma_zz.max())}
    return _finish(config, metrics)


_RUNNERS: dict[str, Callable[[ScenarioConfig], RunManifest]] = {
    "fringe": run_fringe,
    "crosstalk": run_crosstalk,
    "hom": run_hom,
    "transient": run_transient,
    "field": run_field,
}


def run_scenario(config: ScenarioConfig) -> RunManifest:
    """Dispatch to the runner named by the config."""
    return _RUNNERS[config.scenario](config)
