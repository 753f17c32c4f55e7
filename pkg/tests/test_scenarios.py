"""Scenario runners: file layout, values, manifests, determinism."""

import hashlib
import json
import math
from pathlib import Path

import numpy as np
import pytest

import strainsim
from strainsim import (
    FUSED_SILICA,
    ProbeLight,
    WaveguideSite,
    stress_for_differential_phase,
    strip_load_stress,
)
from strainsim.config import ConfigError, load_config
from strainsim.photoelastics import index_change_full, phase_from_index
from strainsim.scenarios import run_scenario, run_transient, write_csv

FRINGE_TEXT = """\
[probe]
wavelength_m = 830e-9
input_polarization = "V"

[fringe]
delta_theta_min_rad = 0.0
delta_theta_max_rad = 12.566370614359172
n_samples = 101
intensity_floor = {floor}
interaction_length_m = 1.0e-3
"""

CROSSTALK_TEXT = """\
[probe]
wavelength_m = 830e-9
input_polarization = "V"

[ram]
width_m = 100e-6
length_m = 1.0e-3
force_n = 20.0

[crosstalk]
depth_m = 100e-6
x_max_m = 300e-6
n_samples = 13
"""

HOM_TEXT = """\
[hom]
coherence_time_s = 100e-15
delay_max_s = 400e-15
n_delay_samples = 41
overlap = 1.0
delta_theta_max_rad = 12.566370614359172
n_phase_samples = 401
"""

TRANSIENT_TEXT = """\
[probe]
wavelength_m = 830e-9
input_polarization = "H"

[transient]
rise_time_target_s = 1.7e-6
damping_ratio = 0.2
trigger_delay_s = 2.0e-6
drive_voltage_v = 60.0
pi_voltage_v = 60.0
duration_s = {duration}
dt_s = 1.0e-7
settling_band = 0.02
interaction_length_m = 1.0e-3
"""

FIELD_TEXT = """\
[ram]
width_m = 100e-6
length_m = 1.0e-3
force_n = 20.0

[field]
x_min_m = -150e-6
x_max_m = 150e-6
n_x = 7
z_min_m = 25e-6
z_max_m = 200e-6
n_z = 5
"""


def run(tmp_path, scenario, text, svg=False, sub="out"):
    path = tmp_path / f"{scenario}.toml"
    path.write_text(text)
    config = load_config(path, scenario, tmp_path / sub, write_svg=svg)
    return config, run_scenario(config)


def read_csv(path):
    return np.genfromtxt(path, delimiter=",", names=True)


def test_write_csv_format(tmp_path):
    path = tmp_path / "t.csv"
    write_csv(path, {"a": np.array([0.5, 1.0 / 3.0]), "b": np.array([1e-7, 2.0])})
    raw = path.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().splitlines()
    assert lines[0] == "a,b"
    assert float(lines[1].split(",")[0]) == 0.5
    # 17 significant digits round-trip exactly.
    assert float(lines[2].split(",")[0]) == 1.0 / 3.0
    with pytest.raises(ValueError):
        write_csv(path, {"a": np.array([1.0]), "b": np.array([1.0, 2.0])})


def test_fringe_ideal_visibility(tmp_path):
    config, manifest = run(tmp_path, "fringe", FRINGE_TEXT.format(floor="0.0"))
    assert manifest.metrics["visibility"] == 1.0
    data = read_csv(config.out_dir / "fringe.csv")
    assert np.allclose(data["intensity_port1"] + data["intensity_port2"], 1.0, atol=1e-15)
    assert data["intensity_port1"][0] == 1.0
    assert data["delta_theta_rad"][0] == 0.0


def test_fringe_floor_sets_visibility(tmp_path):
    config, manifest = run(tmp_path, "fringe", FRINGE_TEXT.format(floor="0.015"))
    assert np.isclose(manifest.metrics["visibility"], 0.97, rtol=1e-12)
    data = read_csv(config.out_dir / "fringe.csv")
    assert np.isclose(data["intensity_port1"].max(), 0.985, rtol=1e-12)
    assert np.isclose(data["intensity_port1"].min(), 0.015, rtol=1e-9)


def test_fringe_stress_column_inverts_the_phase(tmp_path):
    config, _ = run(tmp_path, "fringe", FRINGE_TEXT.format(floor="0.0"))
    data = read_csv(config.out_dir / "fringe.csv")
    probe = ProbeLight(wavelength=830e-9, polarization="V")
    k = 57
    expected = stress_for_differential_phase(
        float(data["delta_theta_rad"][k]), probe, 1.0e-3, FUSED_SILICA
    )
    assert np.isclose(data["sigma_z_pa"][k], expected, rtol=1e-12)


def test_manifest_lists_everything_and_hashes_the_config(tmp_path):
    config, manifest = run(tmp_path, "fringe", FRINGE_TEXT.format(floor="0.0"), svg=True)
    on_disk = sorted(p.name for p in config.out_dir.iterdir())
    assert sorted(manifest.files) == on_disk
    assert "manifest.json" in manifest.files
    assert "fringe.svg" in manifest.files
    raw = (tmp_path / "fringe.toml").read_bytes()
    assert manifest.config_sha256 == hashlib.sha256(raw).hexdigest()
    assert manifest.tool_version == strainsim.__version__
    stored = json.loads((config.out_dir / "manifest.json").read_text())
    assert stored["scenario"] == "fringe"
    assert stored["files"] == sorted(manifest.files)


def test_identical_configs_are_byte_identical(tmp_path):
    text = FRINGE_TEXT.format(floor="0.015")
    config_a, _ = run(tmp_path, "fringe", text, svg=True, sub="a")
    config_b, _ = run(tmp_path, "fringe", text, svg=True, sub="b")
    files_a = sorted(p.name for p in config_a.out_dir.iterdir())
    files_b = sorted(p.name for p in config_b.out_dir.iterdir())
    assert files_a == files_b
    for name in files_a:
        assert (config_a.out_dir / name).read_bytes() == (
            config_b.out_dir / name
        ).read_bytes()


def test_crosstalk_normalization_and_values(tmp_path):
    config, manifest = run(tmp_path, "crosstalk", CROSSTALK_TEXT)
    data = read_csv(config.out_dir / "crosstalk.csv")
    assert data["normalized_phase"][0] == 1.0
    assert np.all(data["z_m"] == 100e-6)
    assert np.isclose(manifest.metrics["anchor_delta_theta_rad"], data["delta_theta_rad"][0])
    # Recompute one row through the library composition.
    k = 7
    tensor = strip_load_stress(
        20.0 / (100e-6 * 1.0e-3),
        50e-6,
        WaveguideSite(float(data["x_m"][k]), 100e-6),
        FUSED_SILICA.poisson_ratio,
    )
    dn = index_change_full(tensor, FUSED_SILICA)
    expected = phase_from_index(dn, 1.0e-3, 830e-9).delta_theta
    assert np.isclose(data["delta_theta_rad"][k], expected, rtol=1e-12)


def test_hom_outputs(tmp_path):
    config, manifest = run(tmp_path, "hom", HOM_TEXT)
    delay = read_csv(config.out_dir / "hom_delay.csv")
    assert np.allclose(delay["coincidence_prob"], delay["coincidence_prob"][::-1])
    assert manifest.metrics["dip_minimum"] == delay["coincidence_prob"].min()
    # Odd sample count puts one row exactly at zero delay.
    assert delay["coincidence_prob"][20] == 0.0
    phase = read_csv(config.out_dir / "hom_phase.csv")
    assert phase["coincidence_prob"][0] == 1.0
    assert manifest.metrics["coincidence_mean_crossings"] == 8.0
    assert manifest.metrics["classical_mean_crossings"] == 4.0


def test_transient_trace_and_metrics(tmp_path):
    config, manifest = run(
        tmp_path, "transient", TRANSIENT_TEXT.format(duration="5.0e-5"), svg=True
    )
    data = read_csv(config.out_dir / "transient.csv")
    assert np.all(data["drive_v"] == 60.0)
    held = data["time_s"] <= 2.0e-6
    assert np.all(data["stress_pa"][held] == 0.0)
    assert data["stress_pa"][np.argmax(~held)] > 0.0
    assert np.allclose(data["intensity_h"] + data["intensity_v"], 1.0, atol=1e-12)
    # Drive at the pi voltage: the H port starts full and ends dark.
    assert data["intensity_h"][0] == 1.0
    assert data["intensity_h"][-1] < 1e-3
    assert manifest.metrics["trigger_delay_s"] == 2.0e-6
    assert abs(manifest.metrics["rise_time_s"] - 1.7e-6) <= 0.01 * 1.7e-6
    assert 2.0e-5 < manifest.metrics["settling_time_s"] < 4.0e-5
    assert (config.out_dir / "transient.svg").exists()


def test_transient_too_short_to_settle_is_a_config_error(tmp_path):
    path = tmp_path / "transient.toml"
    path.write_text(TRANSIENT_TEXT.format(duration="5.0e-6"))
    config = load_config(path, "transient", tmp_path / "out")
    with pytest.raises(ConfigError) as excinfo:
        run_transient(config)
    assert "too short" in str(excinfo.value)


def test_field_grid_layout(tmp_path):
    config, manifest = run(tmp_path, "field", FIELD_TEXT)
    data = read_csv(config.out_dir / "field.csv")
    assert data.size == 35
    x = np.linspace(-150e-6, 150e-6, 7)
    z = np.linspace(25e-6, 200e-6, 5)
    k = 9  # second depth row, third lateral sample
    assert data["x_m"][k] == x[2]
    assert data["z_m"][k] == z[1]
    tensor = strip_load_stress(
        20.0 / (100e-6 * 1.0e-3), 50e-6, WaveguideSite(float(x[2]), float(z[1]))
    )
    assert np.isclose(data["sigma_zz_pa"][k], tensor.sigma_zz, rtol=1e-12)
    assert np.isclose(data["tau_xz_pa"][k], tensor.tau_xz, rtol=1e-12)
    assert np.allclose(
        data["sigma_yy_pa"],
        FUSED_SILICA.poisson_ratio * (data["sigma_xx_pa"] + data["sigma_zz_pa"]),
        rtol=1e-12,
    )
    assert manifest.metrics["sigma_zz_max_pa"] == data["sigma_zz_pa"].max()


def test_dispatch_covers_every_scenario(tmp_path):
    for scenario, text in [
        ("fringe", FRINGE_TEXT.format(floor="0.0")),
        ("crosstalk", CROSSTALK_TEXT),
        ("hom", HOM_TEXT),
        ("field", FIELD_TEXT),
    ]:
        _, manifest = run(tmp_path, scenario, text, sub=scenario)
        assert manifest.scenario == scenario
