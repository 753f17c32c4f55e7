"""Material constants, ram geometry, and probe light descriptions.

Everything is SI: pascals, metres, seconds, radians. The bundled
fused-silica record combines the stress-optic coefficients commonly
quoted for silica with handbook elastic and optical constants; they are
engineering defaults rather than measured properties of any particular
chip, so every routine that consumes a :class:`Material` accepts an
explicit override.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Material:
    """Isotropic substrate with elastic and stress-optic constants.

    Attributes
    ----------
    youngs_modulus : float
        Young's modulus E in Pa.
    poisson_ratio : float
        Poisson ratio, dimensionless. Needed by the plane-strain stress
        field for the out-of-plane component.
    refractive_index : float
        Unperturbed refractive index at the probe wavelength.
    rho_parallel : float
        Stress-optic coefficient coupling a stress component to the
        refractive index seen by light polarized along that same axis.
    rho_perpendicular : float
        Stress-optic coefficient for the two transverse index components.
    sound_speed : float
        Bulk sound speed in m/s, used for acoustic switching limits.
    """

    youngs_modulus: float
    poisson_ratio: float
    refractive_index: float
    rho_parallel: float
    rho_perpendicular: float
    sound_speed: float

    def __post_init__(self) -> None:
        if self.youngs_modulus <= 0.0:
            raise ValueError("youngs_modulus must be positive")
        if not 0.0 <= self.poisson_ratio < 0.5:
            raise ValueError("poisson_ratio must lie in [0, 0.5)")
        if self.refractive_index <= 1.0:
            raise ValueError("refractive_index must exceed 1")
        if not self.rho_parallel > self.rho_perpendicular > 0.0:
            raise ValueError(
                "stress-optic coefficients must satisfy "
                "rho_parallel > rho_perpendicular > 0"
            )
        if self.sound_speed <= 0.0:
            raise ValueError("sound_speed must be positive")


#: Fused silica near 830 nm. Elastic constants are handbook values; the
#: stress-optic pair (0.26 parallel, 0.12 perpendicular) is the standard
#: silica set. Override any field via dataclasses.replace or a config file.
FUSED_SILICA = Material(
    youngs_modulus=73.0e9,
    poisson_ratio=0.17,
    refractive_index=1.4525,
    rho_parallel=0.26,
    rho_perpendicular=0.12,
    sound_speed=3000.0,
)


def default_fused_silica() -> Material:
    """Return the bundled fused-silica material record."""
    return FUSED_SILICA


@dataclass(frozen=True)
class RamLoad:
    """Force applied through the rectangular pressing foot of the ram.

    The foot is ``length`` long along the waveguide axis and ``width``
    wide across it. The 2-D plane-strain stress model resolves the width
    (the strip dimension) and treats the length as uniform, so ``length``
    also sets the optical interaction length. Force presses into the
    chip; the foot cannot pull, so force must be positive.
    """

    width: float
    length: float
    force: float

    def __post_init__(self) -> None:
        if self.width <= 0.0 or self.length <= 0.0:
            raise ValueError("ram width and length must be positive")
        if self.force <= 0.0:
            raise ValueError("ram force must be positive")

    @property
    def contact_area(self) -> float:
        return self.width * self.length


def ram_pressure(load: RamLoad) -> float:
    """Nominal uniform contact pressure in Pa, force over foot area.

    Real contact mechanics (edge concentrations, elastic conformity)
    are not modeled; the strip-load stress field assumes this uniform
    value across the full foot width.
    """
    return load.force / load.contact_area


@dataclass(frozen=True)
class ProbeLight:
    """Monochromatic probe field.

    ``polarization`` is "H" for the in-plane transverse axis (x, across
    the waveguide) or "V" for the vertical axis (z, along the applied
    stress).
    """

    wavelength: float
    polarization: str = "H"

    def __post_init__(self) -> None:
        if self.wavelength <= 0.0:
            raise ValueError("wavelength must be positive")
        if self.polarization not in ("H", "V"):
            raise ValueError("polarization must be 'H' or 'V'")


@dataclass(frozen=True)
class WaveguideSite:
    """Location of a waveguide core in the cross-section plane.

    ``x`` is lateral offset from the ram centerline, ``z`` is depth
    below the chip surface. Depth zero is allowed only off the loaded
    strip; the stress field is singular at a loaded surface point.
    """

    x: float
    z: float

    def __post_init__(self) -> None:
        if self.z < 0.0:
            raise ValueError("waveguide depth z must be non-negative")
