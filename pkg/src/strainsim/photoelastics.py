"""Stress-optic coupling: stress states to index changes and phase shifts.

The substrate index drops where the material is squeezed, and it drops
harder along the squeeze axis than across it. That anisotropy is the
whole working principle here: a vertical stress makes the waveguide
birefringent, and the vertical/horizontal phase difference accumulated
over the stressed length drives the interferometer.

Two conventions coexist and both are exposed deliberately:

* index changes are negative under compression (the physical sign), so
  phases obtained via :func:`phase_from_index` are negative;
* :func:`birefringent_phase` and :func:`required_stress` use the
  positive-retardation convention, where compressive stress produces a
  positive phase.

Only phase differences reach any observable, and those appear inside
even functions, so the two conventions agree everywhere it matters. A
composition test pins the exact sign relationship.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .materials import Material, ProbeLight
from .elasticity import StressTensor2D, principal_stresses

__all__ = [
    "IndexChange",
    "PhaseShift",
    "index_change_uniaxial",
    "index_change_full",
    "required_stress",
    "birefringent_phase",
    "stress_for_differential_phase",
    "phase_from_index",
]

#: Above this magnitude the perturbative index treatment is suspect;
#: typical guided-mode index contrasts are a few 1e-3.
INDEX_CHANGE_WARN_LEVEL = 1e-2


@dataclass(frozen=True)
class IndexChange:
    """Lab-frame refractive index perturbation at one waveguide site.

    ``delta_n_x`` and ``delta_n_z`` are the index shifts seen by H- and
    V-polarized fields. ``delta_n_xz`` is the off-diagonal term of the
    index perturbation treated as a rank-2 tensor in the x-z plane; it
    vanishes whenever the stress is axis-aligned and is carried so the
    perturbation transforms correctly under frame rotations.
    ``principal_axis_angle`` is the major stress axis measured from z.
    """

    delta_n_x: float
    delta_n_z: float
    principal_axis_angle: float
    delta_n_xz: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.delta_n_x) and math.isfinite(self.delta_n_z)):
            raise ValueError("index changes must be finite")
        if max(abs(self.delta_n_x), abs(self.delta_n_z)) > INDEX_CHANGE_WARN_LEVEL:
            warnings.warn(
                "index change exceeds 1e-2; the perturbative stress-optic "
                "model is unreliable at this level",
                stacklevel=3,
            )

    @property
    def birefringence(self) -> float:
        """Lab-frame index difference delta_n_z - delta_n_x."""
        return self.delta_n_z - self.delta_n_x


@dataclass(frozen=True)
class PhaseShift:
    """Propagation phases of the two polarizations over one stressed span.

    ``delta_theta`` is always ``theta_v - theta_h``; it is computed at
    construction rather than accepted, so the invariant cannot drift.
    """

    theta_h: float
    theta_v: float
    interaction_length: float
    delta_theta: float = field(init=False)

    def __post_init__(self) -> None:
        if self.interaction_length <= 0.0:
            raise ValueError("interaction length must be positive")
        object.__setattr__(self, "delta_theta", self.theta_v - self.theta_h)


def index_change_uniaxial(sigma_z: float, m: Material) -> IndexChange:
    """Index perturbation for purely vertical stress.

    Parameters
    ----------
    sigma_z : float
        Vertical normal stress in Pa, compression positive.
    m : Material
        Substrate constants.

    Returns
    -------
    IndexChange
        delta_n_i = -n^3 rho_i sigma_z / (2 E) with rho_parallel for
        the z component and rho_perpendicular for x. Compression lowers
        both indices, the parallel one most.
    """
    if not math.isfinite(sigma_z):
        raise ValueError("sigma_z must be finite")
    scale = -0.5 * m.refractive_index**3 * sigma_z / m.youngs_modulus
    return IndexChange(
        delta_n_x=scale * m.rho_perpendicular,
        delta_n_z=scale * m.rho_parallel,
        principal_axis_angle=0.0,
    )


def index_change_full(t: StressTensor2D, m: Material) -> IndexChange:
    """Index perturbation for a general plane-strain stress state.

    The in-plane tensor is rotated to principal axes, the parallel and
    perpendicular stress-optic coefficients are applied there (the
    out-of-plane sigma_yy always contributes through the perpendicular
    coefficient), and the resulting diagonal perturbation is rotated
    back to the lab frame.

    Reduces exactly to :func:`index_change_uniaxial` when the only
    nonzero component is sigma_zz.
    """
    s1, s2, psi = principal_stresses(t)
    k = -0.5 * m.refractive_index**3 / m.youngs_modulus
    if t.tau_xz == 0.0:
        # Axis-aligned stress: the lab frame is the principal frame, so
        # apply the coefficients directly and keep the zeros exact.
        return IndexChange(
            delta_n_x=k
            * (m.rho_parallel * t.sigma_xx + m.rho_perpendicular * (t.sigma_zz + t.sigma_yy)),
            delta_n_z=k
            * (m.rho_parallel * t.sigma_zz + m.rho_perpendicular * (t.sigma_xx + t.sigma_yy)),
            delta_n_xz=0.0,
            principal_axis_angle=psi,
        )
    n1 = k * (m.rho_parallel * s1 + m.rho_perpendicular * (s2 + t.sigma_yy))
    n2 = k * (m.rho_parallel * s2 + m.rho_perpendicular * (s1 + t.sigma_yy))
    sin_psi = math.sin(psi)
    cos_psi = math.cos(psi)
    # Major principal direction is (sin psi, cos psi) in (x, z).
    return IndexChange(
        delta_n_x=n1 * sin_psi**2 + n2 * cos_psi**2,
        delta_n_z=n1 * cos_psi**2 + n2 * sin_psi**2,
        delta_n_xz=(n1 - n2) * sin_psi * cos_psi,
        principal_axis_angle=psi,
    )


def required_stress(
    theta: float, pol: str, probe: ProbeLight, l: float, m: Material
) -> float:
    """Vertical stress needed for a given single-polarization phase.

    Parameters
    ----------
    theta : float
        Target propagation phase in rad, must be positive.
    pol : str
        "V" selects the parallel coefficient, "H" the perpendicular one.
    probe : ProbeLight
        Supplies the wavelength.
    l : float
        Interaction length in m.
    m : Material
        Substrate constants.

    Returns
    -------
    float
        sigma_z = E theta lambda / (pi l n^3 rho), in Pa.
    """
    if theta <= 0.0:
        raise ValueError("theta must be positive")
    if l <= 0.0:
        raise ValueError("interaction length must be positive")
    if pol == "V":
        rho = m.rho_parallel
    elif pol == "H":
        rho = m.rho_perpendicular
    else:
        raise ValueError("pol must be 'H' or 'V'")
    n3 = m.refractive_index**3
    return m.youngs_modulus * theta * probe.wavelength / (math.pi * l * n3 * rho)


def birefringent_phase(
    sigma_z: float, probe: ProbeLight, l: float, m: Material
) -> PhaseShift:
    """Polarization phases accumulated under vertical stress.

    Positive-retardation convention: compressive sigma_z yields
    theta_v = pi n^3 rho_parallel sigma_z l / (E lambda) > 0, likewise
    theta_h with the perpendicular coefficient, so delta_theta grows
    linearly with stress at rate
    pi n^3 (rho_parallel - rho_perpendicular) l / (E lambda).
    """
    if l <= 0.0:
        raise ValueError("interaction length must be positive")
    n3 = m.refractive_index**3
    common = math.pi * n3 * sigma_z * l / (m.youngs_modulus * probe.wavelength)
    return PhaseShift(
        theta_h=common * m.rho_perpendicular,
        theta_v=common * m.rho_parallel,
        interaction_length=l,
    )


def stress_for_differential_phase(
    delta_theta: float, probe: ProbeLight, l: float, m: Material
) -> float:
    """Vertical stress giving a target H/V phase difference.

    Inverse of the delta_theta relation in :func:`birefringent_phase`;
    accepts any finite target (zero and negative included) since the
    mapping is linear.
    """
    if l <= 0.0:
        raise ValueError("interaction length must be positive")
    if not math.isfinite(delta_theta):
        raise ValueError("delta_theta must be finite")
    n3 = m.refractive_index**3
    rho_diff = m.rho_parallel - m.rho_perpendicular
    return (
        m.youngs_modulus
        * delta_theta
        * probe.wavelength
        / (math.pi * n3 * rho_diff * l)
    )


def phase_from_index(dn: IndexChange, l: float, wavelength: float) -> PhaseShift:
    """Propagation phases from lab-frame index changes.

    theta_i = 2 pi delta_n_i l / lambda, signs following the index
    changes. Composing :func:`index_change_uniaxial` with this function
    therefore mirrors :func:`birefringent_phase`: equal magnitudes,
    opposite signs.
    """
    if l <= 0.0 or wavelength <= 0.0:
        raise ValueError("length and wavelength must be positive")
    scale = 2.0 * math.pi * l / wavelength
    return PhaseShift(
        theta_h=scale * dn.delta_n_x,
        theta_v=scale * dn.delta_n_z,
        interaction_length=l,
    )
