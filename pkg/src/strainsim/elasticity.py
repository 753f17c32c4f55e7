"""Plane-strain stress fields under a pressing ram.

The chip cross-section is modeled as an elastic half-plane loaded on its
surface. Two load shapes are provided: an infinitely thin line load (the
half-plane Green's function) and a uniform strip of finite width, which
is what a flat ram foot applies. The strip field has a closed form; a
composite-midpoint superposition of line loads is kept alongside it as a
slow, independent check.

Coordinates: x runs along the surface across the ram, z points down into
the material. Loads press inward and compressive stress is positive.
Plane strain holds along the ram length, so the out-of-plane component
is sigma_yy = nu * (sigma_xx + sigma_zz).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .materials import FUSED_SILICA, WaveguideSite

__all__ = [
    "StressTensor2D",
    "FieldGrid",
    "line_load_stress",
    "strip_load_stress",
    "strip_load_stress_numeric",
    "principal_stresses",
    "sample_field",
]


@dataclass(frozen=True)
class StressTensor2D:
    """In-plane stress state plus the plane-strain out-of-plane term.

    Compression is positive for every component. ``sigma_yy`` is not an
    independent degree of freedom here; the factory functions always set
    it to nu * (sigma_xx + sigma_zz).
    """

    sigma_xx: float
    sigma_zz: float
    tau_xz: float
    sigma_yy: float


@dataclass(frozen=True)
class FieldGrid:
    """Stress components sampled on a rectangular (x, z) grid.

    ``x`` has shape (nx,), ``z`` has shape (nz,), and each component
    array has shape (nz, nx) with rows indexed by depth.
    """

    x: np.ndarray
    z: np.ndarray
    sigma_xx: np.ndarray
    sigma_zz: np.ndarray
    tau_xz: np.ndarray
    sigma_yy: np.ndarray


def _flamant_components(force_per_length, x, z):
    """Raw line-load stress components, array friendly.

    Evaluates the half-plane point-force kernel at (x, z) for a load of
    ``force_per_length`` (N/m) pressing at the origin. Used by
    :func:`line_load_stress` for single sites and by the numeric strip
    integrator for panel superposition. Callers must keep r > 0.
    """
    r2 = x * x + z * z
    common = 2.0 * force_per_length / (np.pi * r2 * r2)
    sigma_zz = common * z * z * z
    sigma_xx = common * x * x * z
    tau_xz = common * x * z * z
    return sigma_xx, sigma_zz, tau_xz


def line_load_stress(
    force_per_length: float,
    site: WaveguideSite,
    nu: float = FUSED_SILICA.poisson_ratio,
) -> StressTensor2D:
    """Stress at a site due to a line load on the half-plane surface.

    Parameters
    ----------
    force_per_length : float
        Load intensity in N/m, positive pressing into the surface. The
        line runs along y through the origin.
    site : WaveguideSite
        Evaluation point. Must not coincide with the load line, where
        the field is singular.
    nu : float, optional
        Poisson ratio for the plane-strain out-of-plane component.

    Returns
    -------
    StressTensor2D
        The field is purely radial-compressive about the contact point;
        on the surface away from the load (z = 0, x != 0) every
        component vanishes.
    """
    if site.x == 0.0 and site.z == 0.0:
        raise ValueError("line-load field is singular at the contact point")
    sxx, szz, txz = _flamant_components(force_per_length, site.x, site.z)
    return StressTensor2D(
        sigma_xx=float(sxx),
        sigma_zz=float(szz),
        tau_xz=float(txz),
        sigma_yy=nu * float(sxx + szz),
    )


def _strip_components(pressure, half_width, x, z):
    """Closed-form uniform-strip stress components, array friendly.

    Integrating the line-load kernel over the strip [-a, a] gives, with
    u1 = x - a, u2 = x + a and the edge view angles t_i = atan(u_i / z):

        sigma_zz = (p/pi) * [(t2 - t1) + z u2/(u2^2+z^2) - z u1/(u1^2+z^2)]
        sigma_xx = (p/pi) * [(t2 - t1) - z u2/(u2^2+z^2) + z u1/(u1^2+z^2)]
        tau_xz   = (p z^2/pi) * [1/(u1^2+z^2) - 1/(u2^2+z^2)]

    atan2(u, z) is used so the z = 0 surface limit comes out right:
    inside the strip the view angle difference is pi (so sigma_zz = p),
    outside it is 0.
    """
    u1 = x - half_width
    u2 = x + half_width
    angle = np.arctan2(u2, z) - np.arctan2(u1, z)
    f1 = z * u1 / (u1 * u1 + z * z)
    f2 = z * u2 / (u2 * u2 + z * z)
    sigma_zz = (pressure / np.pi) * (angle + f2 - f1)
    sigma_xx = (pressure / np.pi) * (angle - f2 + f1)
    tau_xz = (pressure * z * z / np.pi) * (
        1.0 / (u1 * u1 + z * z) - 1.0 / (u2 * u2 + z * z)
    )
    return sigma_xx, sigma_zz, tau_xz


def strip_load_stress(
    pressure: float,
    half_width: float,
    site: WaveguideSite,
    nu: float = FUSED_SILICA.poisson_ratio,
) -> StressTensor2D:
    """Stress at a site under a uniform strip load of half-width a.

    Parameters
    ----------
    pressure : float
        Contact pressure p in Pa over the strip |x| <= a, z = 0.
    half_width : float
        Strip half-width a in m.
    site : WaveguideSite
        Evaluation point; z = 0 is allowed off the strip edges (the
        field is discontinuous exactly at x = +/-a, z = 0).
    nu : float, optional
        Poisson ratio for sigma_yy.

    Notes
    -----
    On the centerline the components reduce to the classic view-angle
    form sigma_zz = (p/pi)(alpha + sin alpha) and
    sigma_xx = (p/pi)(alpha - sin alpha) with alpha = 2 atan(a/z).
    """
    if half_width <= 0.0:
        raise ValueError("strip half-width must be positive")
    sxx, szz, txz = _strip_components(pressure, half_width, site.x, site.z)
    return StressTensor2D(
        sigma_xx=float(sxx),
        sigma_zz=float(szz),
        tau_xz=float(txz),
        sigma_yy=nu * float(sxx + szz),
    )


def strip_load_stress_numeric(
    pressure: float,
    half_width: float,
    site: WaveguideSite,
    n_panels: int,
    nu: float = FUSED_SILICA.poisson_ratio,
) -> StressTensor2D:
    """Strip-load stress by composite-midpoint superposition of line loads.

    Slow reference path for validating :func:`strip_load_stress`: the
    strip is split into ``n_panels`` equal panels, each replaced by a
    line load of intensity p * (panel width) at its midpoint. Converges
    to the closed form as n_panels grows (midpoint rule, second order).

    Requires z > 0; the midpoint sum cannot represent the surface
    discontinuities.
    """
    if half_width <= 0.0:
        raise ValueError("strip half-width must be positive")
    if n_panels < 2:
        raise ValueError("n_panels must be at least 2")
    if site.z <= 0.0:
        raise ValueError("numeric strip integration requires z > 0")
    dxi = 2.0 * half_width / n_panels
    xi = -half_width + (np.arange(n_panels) + 0.5) * dxi
    sxx, szz, txz = _flamant_components(pressure * dxi, site.x - xi, site.z)
    sxx_tot = float(np.sum(sxx))
    szz_tot = float(np.sum(szz))
    return StressTensor2D(
        sigma_xx=sxx_tot,
        sigma_zz=szz_tot,
        tau_xz=float(np.sum(txz)),
        sigma_yy=nu * (sxx_tot + szz_tot),
    )


def principal_stresses(t: StressTensor2D) -> tuple[float, float, float]:
    """Principal values and major-axis direction of the in-plane tensor.

    Returns
    -------
    (sigma_1, sigma_2, axis_angle)
        sigma_1 >= sigma_2. ``axis_angle`` is the angle of the major
        principal axis measured from the z-axis toward x, folded into
        (-pi/2, pi/2]. For an isotropic in-plane state the angle is
        reported as 0.
    """
    center = 0.5 * (t.sigma_xx + t.sigma_zz)
    radius = math.hypot(0.5 * (t.sigma_zz - t.sigma_xx), t.tau_xz)
    angle = 0.5 * math.atan2(2.0 * t.tau_xz, t.sigma_zz - t.sigma_xx)
    if angle <= -0.5 * math.pi:
        angle += math.pi
    return center + radius, center - radius, angle


def sample_field(
    pressure: float,
    half_width: float,
    x: np.ndarray,
    z: np.ndarray,
    nu: float = FUSED_SILICA.poisson_ratio,
) -> FieldGrid:
    """Evaluate the strip-load field on the grid x (lateral) by z (depth).

    All depths must be non-negative. Shapes follow
    :class:`FieldGrid`: component arrays are (len(z), len(x)).
    """
    if half_width <= 0.0:
        raise ValueError("strip half-width must be positive")
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    if x.ndim != 1 or z.ndim != 1 or x.size == 0 or z.size == 0:
        raise ValueError("x and z must be non-empty 1-D arrays")
    if np.any(z < 0.0):
        raise ValueError("depths must be non-negative")
    xg, zg = np.meshgrid(x, z)
    sxx, szz, txz = _strip_components(pressure, half_width, xg, zg)
    return FieldGrid(
        x=x,
        z=z,
        sigma_xx=sxx,
        sigma_zz=szz,
        tau_xz=txz,
        sigma_yy=nu * (sxx + szz),
    )
