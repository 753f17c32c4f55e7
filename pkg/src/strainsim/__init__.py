"""Strain-optic phase control in silica waveguide chips.

A ram pressing on the chip surface stresses the waveguides beneath it;
the stress makes the guides birefringent, the birefringence phase-shifts
one polarization against the other, and two external waveplates turn
that phase into switchable classical or two-photon interference. The
subpackages follow that chain:

``materials``     constants, ram geometry, probe light
``elasticity``    plane-strain stress fields under the ram
``photoelastics`` stress to index change to phase shift
``polarization``  Jones model of the interferometer
``quantum``       two-photon interference and distinguishability
``dynamics``      switching transients of the piezo drive
``scenarios``     file-producing experiment runs (also via the CLI)
"""

from .materials import (
    FUSED_SILICA,
    Material,
    ProbeLight,
    RamLoad,
    WaveguideSite,
    default_fused_silica,
    ram_pressure,
)
from .elasticity import (
    FieldGrid,
    StressTensor2D,
    line_load_stress,
    principal_stresses,
    sample_field,
    strip_load_stress,
    strip_load_stress_numeric,
)
from .photoelastics import (
    IndexChange,
    PhaseShift,
    birefringent_phase,
    index_change_full,
    index_change_uniaxial,
    phase_from_index,
    required_stress,
    stress_for_differential_phase,
)
from .polarization import (
    birefringent_retarder,
    fringe_visibility,
    half_wave_plate,
    pmzi_intensity,
    pmzi_transfer,
)
from .quantum import (
    WavepacketOverlap,
    hom_dip,
    pmzi_coincidence,
    quantum_fringe_scan,
    two_photon_unitary,
)
from .dynamics import (
    ActuatorModel,
    DriveWaveform,
    NumericalGuardError,
    Transient,
    acoustic_rise_limit,
    analytic_step_response,
    calibrate,
    drive_level,
    optical_transient,
    rise_time_10_90,
    settling_time,
    step_response,
)

__version__ = "0.1.0"

__all__ = [
    "FUSED_SILICA",
    "Material",
    "ProbeLight",
    "RamLoad",
    "WaveguideSite",
    "default_fused_silica",
    "ram_pressure",
    "FieldGrid",
    "StressTensor2D",
    "line_load_stress",
    "principal_stresses",
    "sample_field",
    "strip_load_stress",
    "strip_load_stress_numeric",
    "IndexChange",
    "PhaseShift",
    "birefringent_phase",
    "index_change_full",
    "index_change_uniaxial",
    "phase_from_index",
    "required_stress",
    "stress_for_differential_phase",
    "birefringent_retarder",
    "fringe_visibility",
    "half_wave_plate",
    "pmzi_intensity",
    "pmzi_transfer",
    "WavepacketOverlap",
    "hom_dip",
    "pmzi_coincidence",
    "quantum_fringe_scan",
    "two_photon_unitary",
    "ActuatorModel",
    "DriveWaveform",
    "NumericalGuardError",
    "Transient",
    "acoustic_rise_limit",
    "analytic_step_response",
    "calibrate",
    "drive_level",
    "optical_transient",
    "rise_time_10_90",
    "settling_time",
    "step_response",
    "__version__",
]
