"""Strict TOML configuration for the scenario runner.

One file describes one run. Tables select what they configure:
``[material]`` is the only optional table (omitting it selects the
bundled fused silica); every other table and key required by the chosen
scenario must be present, and anything unrecognized is rejected with
the file location rather than ignored. Keys carry their unit in the
name (``_pa``, ``_m``, ``_s``, ``_v``, ``_n``, ``_rad``); dimensionless
quantities have no suffix.
"""

from __future__ import annotations

import hashlib
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .materials import FUSED_SILICA, Material, ProbeLight, RamLoad

__all__ = [
    "ConfigError",
    "SCENARIOS",
    "FringeParams",
    "CrosstalkParams",
    "HomParams",
    "TransientParams",
    "FieldParams",
    "ScenarioConfig",
    "load_config",
]

#: Drive voltages above the actuator's rated ceiling are refused at
#: parse time, mirroring the waveform type's own limit.
MAX_DRIVE_VOLTAGE = 70.0

SCENARIOS = ("fringe", "crosstalk", "hom", "transient", "field")


class ConfigError(Exception):
    """A configuration file is missing, malformed, or inconsistent."""


@dataclass(frozen=True)
class FringeParams:
    """Differential-phase sweep of the classical interference fringe."""

    delta_theta_min_rad: float
    delta_theta_max_rad: float
    n_samples: int
    intensity_floor: float
    interaction_length_m: float


@dataclass(frozen=True)
class CrosstalkParams:
    """Lateral scan of the stress-induced phase at fixed depth."""

    depth_m: float
    x_max_m: float
    n_samples: int


@dataclass(frozen=True)
class HomParams:
    """Two-photon delay scan plus a phase scan at fixed overlap."""

    coherence_time_s: float
    delay_max_s: float
    n_delay_samples: int
    overlap: float
    delta_theta_max_rad: float
    n_phase_samples: int


@dataclass(frozen=True)
class TransientParams:
    """Step-drive switching run with derived actuator calibration."""

    rise_time_target_s: float
    damping_ratio: float
    trigger_delay_s: float
    drive_voltage_v: float
    pi_voltage_v: float
    duration_s: float
    dt_s: float
    settling_band: float
    interaction_length_m: float


@dataclass(frozen=True)
class FieldParams:
    """Rectangular sampling grid for the stress field under the ram."""

    x_min_m: float
    x_max_m: float
    n_x: int
    z_min_m: float
    z_max_m: float
    n_z: int


ScenarioParams = Union[
    FringeParams, CrosstalkParams, HomParams, TransientParams, FieldParams
]


@dataclass(frozen=True)
class ScenarioConfig:
    """Everything one scenario run needs, fully validated.

    ``probe`` and ``ram`` are present only when the scenario uses them;
    ``config_sha256`` is the hash of the raw file bytes, recorded in the
    run manifest.
    """

    scenario: str
    material: Material
    probe: ProbeLight | None
    ram: RamLoad | None
    params: ScenarioParams
    out_dir: Path
    write_svg: bool
    config_sha256: str


# key -> TOML type expected, per table. "number" accepts int or float.
_MATERIAL_KEYS = {
    "youngs_modulus_pa": "number",
    "poisson_ratio": "number",
    "refractive_index": "number",
    "rho_parallel": "number",
    "rho_perpendicular": "number",
    "sound_speed_m_s": "number",
}

_PROBE_KEYS = {
    "wavelength_m": "number",
    "input_polarization": "string",
}

_RAM_KEYS = {
    "width_m": "number",
    "length_m": "number",
    "force_n": "number",
}

_SCENARIO_KEYS: dict[str, dict[str, str]] = {
    "fringe": {
        "delta_theta_min_rad": "number",
        "delta_theta_max_rad": "number",
        "n_samples": "integer",
        "intensity_floor": "number",
        "interaction_length_m": "number",
    },
    "crosstalk": {
        "depth_m": "number",
        "x_max_m": "number",
        "n_samples": "integer",
    },
    "hom": {
        "coherence_time_s": "number",
        "delay_max_s": "number",
        "n_delay_samples": "integer",
        "overlap": "number",
        "delta_theta_max_rad": "number",
        "n_phase_samples": "integer",
    },
    "transient": {
        "rise_time_target_s": "number",
        "damping_ratio": "number",
        "trigger_delay_s": "number",
        "drive_voltage_v": "number",
        "pi_voltage_v": "number",
        "duration_s": "number",
        "dt_s": "number",
        "settling_band": "number",
        "interaction_length_m": "number",
    },
    "field": {
        "x_min_m": "number",
        "x_max_m": "number",
        "n_x": "integer",
        "z_min_m": "number",
        "z_max_m": "number",
        "n_z": "integer",
    },
}

# Tables each scenario requires beyond its own parameter table.
_NEEDS_PROBE = ("fringe", "crosstalk", "transient")
_NEEDS_RAM = ("crosstalk", "field")


def _find_line(text: str, name: str, table: str | None) -> int | None:
    """Best-effort line number of a key or table header in the raw text.

    Good enough for error messages: keys are matched at the start of a
    line before an equals sign, tables as a bracketed header. Returns
    None when the name cannot be located.
    """
    if table is None:
        pattern = re.compile(r"^\s*\[\s*" + re.escape(name) + r"\s*\]")
    else:
        pattern = re.compile(r"^\s*" + re.escape(name) + r"\s*=")
    for i, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return i
    return None


class _Source:
    """Raw config text plus path, for locating names in messages."""

    def __init__(self, path: Path, text: str):
        self.path = path
        self.text = text

    def where(self, name: str, table: str | None = None) -> str:
        line = _find_line(self.text, name, table)
        return f"{self.path}:{line}" if line is not None else str(self.path)

    def fail(self, message: str, name: str, table: str | None = None):
        raise ConfigError(f"{self.where(name, table)}: {message}")


def _check_table(
    src: _Source, table_name: str, table: dict, keys: dict[str, str]
) -> None:
    if not isinstance(table, dict):
        src.fail(f"[{table_name}] must be a table", table_name)
    for key in table:
        if key not in keys:
            src.fail(f"unknown key '{key}' in [{table_name}]", key, table_name)
    for key, kind in keys.items():
        if key not in table:
            src.fail(f"[{table_name}] is missing required key '{key}'", table_name)
        value = table[key]
        if kind == "number":
            ok = isinstance(value, (int, float)) and not isinstance(value, bool)
        elif kind == "integer":
            ok = isinstance(value, int) and not isinstance(value, bool)
        else:
            ok = isinstance(value, str)
        if not ok:
            src.fail(f"key '{key}' in [{table_name}] must be a {kind}", key, table_name)


def _positive(src: _Source, table: str, data: dict, *keys: str) -> None:
    for key in keys:
        if not data[key] > 0.0:
            src.fail(f"'{key}' must be positive", key, table)


def _in_range(
    src: _Source,
    table: str,
    data: dict,
    key: str,
    lo: float,
    hi: float,
    lo_open: bool = False,
    hi_open: bool = False,
) -> None:
    value = data[key]
    lo_ok = value > lo if lo_open else value >= lo
    hi_ok = value < hi if hi_open else value <= hi
    if not (lo_ok and hi_ok):
        lo_b = "(" if lo_open else "["
        hi_b = ")" if hi_open else "]"
        src.fail(f"'{key}' must lie in {lo_b}{lo:g}, {hi:g}{hi_b}", key, table)


def _ordered(src: _Source, table: str, data: dict, lo_key: str, hi_key: str) -> None:
    if not data[hi_key] > data[lo_key]:
        src.fail(f"'{hi_key}' must exceed '{lo_key}'", hi_key, table)


def _min_samples(src: _Source, table: str, data: dict, *keys: str) -> None:
    for key in keys:
        if data[key] < 2:
            src.fail(f"'{key}' must be at least 2", key, table)


def _build_material(src: _Source, table: dict | None) -> Material:
    if table is None:
        return FUSED_SILICA
    _check_table(src, "material", table, _MATERIAL_KEYS)
    try:
        return Material(
            youngs_modulus=float(table["youngs_modulus_pa"]),
            poisson_ratio=float(table["poisson_ratio"]),
            refractive_index=float(table["refractive_index"]),
            rho_parallel=float(table["rho_parallel"]),
            rho_perpendicular=float(table["rho_perpendicular"]),
            sound_speed=float(table["sound_speed_m_s"]),
        )
    except ValueError as exc:
        src.fail(str(exc), "material")


def _build_probe(src: _Source, table: dict) -> ProbeLight:
    _check_table(src, "probe", table, _PROBE_KEYS)
    try:
        return ProbeLight(
            wavelength=float(table["wavelength_m"]),
            polarization=table["input_polarization"],
        )
    except ValueError as exc:
        src.fail(str(exc), "probe")


def _build_ram(src: _Source, table: dict) -> RamLoad:
    _check_table(src, "ram", table, _RAM_KEYS)
    try:
        return RamLoad(
            width=float(table["width_m"]),
            length=float(table["length_m"]),
            force=float(table["force_n"]),
        )
    except ValueError as exc:
        src.fail(str(exc), "ram")


def _build_params(src: _Source, scenario: str, table: dict) -> ScenarioParams:
    _check_table(src, scenario, table, _SCENARIO_KEYS[scenario])
    data = dict(table)
    if scenario == "fringe":
        _min_samples(src, scenario, data, "n_samples")
        _ordered(src, scenario, data, "delta_theta_min_rad", "delta_theta_max_rad")
        _in_range(src, scenario, data, "intensity_floor", 0.0, 0.5, hi_open=True)
        _positive(src, scenario, data, "interaction_length_m")
        return FringeParams(
            delta_theta_min_rad=float(data["delta_theta_min_rad"]),
            delta_theta_max_rad=float(data["delta_theta_max_rad"]),
            n_samples=data["n_samples"],
            intensity_floor=float(data["intensity_floor"]),
            interaction_length_m=float(data["interaction_length_m"]),
        )
    if scenario == "crosstalk":
        # Depth zero would put sites on the loaded surface where the
        # field model is not evaluated.
        _positive(src, scenario, data, "depth_m", "x_max_m")
        _min_samples(src, scenario, data, "n_samples")
        return CrosstalkParams(
            depth_m=float(data["depth_m"]),
            x_max_m=float(data["x_max_m"]),
            n_samples=data["n_samples"],
        )
    if scenario == "hom":
        _positive(src, scenario, data, "coherence_time_s", "delay_max_s")
        _positive(src, scenario, data, "delta_theta_max_rad")
        _in_range(src, scenario, data, "overlap", 0.0, 1.0)
        _min_samples(src, scenario, data, "n_delay_samples", "n_phase_samples")
        return HomParams(
            coherence_time_s=float(data["coherence_time_s"]),
            delay_max_s=float(data["delay_max_s"]),
            n_delay_samples=data["n_delay_samples"],
            overlap=float(data["overlap"]),
            delta_theta_max_rad=float(data["delta_theta_max_rad"]),
            n_phase_samples=data["n_phase_samples"],
        )
    if scenario == "transient":
        _positive(
            src,
            scenario,
            data,
            "rise_time_target_s",
            "pi_voltage_v",
            "duration_s",
            "dt_s",
            "interaction_length_m",
        )
        _in_range(src, scenario, data, "damping_ratio", 0.0, 1.0, True, True)
        _in_range(src, scenario, data, "settling_band", 0.0, 0.5, True, True)
        # Zero drive would leave the rise and settling metrics undefined.
        _in_range(
            src, scenario, data, "drive_voltage_v", 0.0, MAX_DRIVE_VOLTAGE, lo_open=True
        )
        if data["trigger_delay_s"] < 0.0:
            src.fail("'trigger_delay_s' must be >= 0", "trigger_delay_s", scenario)
        if data["duration_s"] < data["dt_s"]:
            src.fail("'duration_s' must cover at least one step", "duration_s", scenario)
        return TransientParams(
            rise_time_target_s=float(data["rise_time_target_s"]),
            damping_ratio=float(data["damping_ratio"]),
            trigger_delay_s=float(data["trigger_delay_s"]),
            drive_voltage_v=float(data["drive_voltage_v"]),
            pi_voltage_v=float(data["pi_voltage_v"]),
            duration_s=float(data["duration_s"]),
            dt_s=float(data["dt_s"]),
            settling_band=float(data["settling_band"]),
            interaction_length_m=float(data["interaction_length_m"]),
        )
    # field
    _ordered(src, scenario, data, "x_min_m", "x_max_m")
    _ordered(src, scenario, data, "z_min_m", "z_max_m")
    # The closed-form surface values exist, but the grid stays below the
    # surface so no sample can land on the singular strip edges.
    _positive(src, scenario, data, "z_min_m")
    _min_samples(src, scenario, data, "n_x", "n_z")
    return FieldParams(
        x_min_m=float(data["x_min_m"]),
        x_max_m=float(data["x_max_m"]),
        n_x=data["n_x"],
        z_min_m=float(data["z_min_m"]),
        z_max_m=float(data["z_max_m"]),
        n_z=data["n_z"],
    )


def load_config(
    path: str | Path,
    scenario: str,
    out_dir: str | Path,
    write_svg: bool = False,
) -> ScenarioConfig:
    """Parse and validate a scenario configuration file.

    Raises :class:`ConfigError` for anything wrong with the file:
    unreadable, invalid TOML, unknown tables or keys, missing keys,
    type mismatches, or values outside their physical ranges. Error
    messages carry ``path:line`` whenever the offending name can be
    found in the raw text.
    """
    if scenario not in SCENARIOS:
        raise ConfigError(
            f"unknown scenario '{scenario}'; expected one of {', '.join(SCENARIOS)}"
        )
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    text = raw.decode("utf-8", errors="replace")
    src = _Source(path, text)
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: invalid TOML: {exc}") from exc

    allowed_tables = {"material", scenario}
    if scenario in _NEEDS_PROBE:
        allowed_tables.add("probe")
    if scenario in _NEEDS_RAM:
        allowed_tables.add("ram")
    for name in doc:
        if name not in allowed_tables:
            src.fail(f"unknown table [{name}] for scenario '{scenario}'", name)
    for name in sorted(allowed_tables - {"material"}):
        if name not in doc:
            raise ConfigError(f"{path}: missing required table [{name}]")

    material = _build_material(src, doc.get("material"))
    probe = _build_probe(src, doc["probe"]) if scenario in _NEEDS_PROBE else None
    ram = _build_ram(src, doc["ram"]) if scenario in _NEEDS_RAM else None
    params = _build_params(src, scenario, doc[scenario])

    return ScenarioConfig(
        scenario=scenario,
        material=material,
        probe=probe,
        ram=ram,
        params=params,
        out_dir=Path(out_dir),
        write_svg=write_svg,
        config_sha256=hashlib.sha256(raw).hexdigest(),
    )
