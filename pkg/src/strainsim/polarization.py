"""Jones calculus for the polarization interferometer.

A stressed waveguide between two half-wave plates at 22.5 degrees acts
as a Mach-Zehnder interferometer whose arms are the H and V modes of a
single guide: the first plate splits, the strain birefringence applies
the relative phase, the second plate recombines. Everything here is a
2x2 complex matrix on the (H, V) amplitude basis; loss is not modeled,
so all matrices are unitary.

Global phase carries no physics. Comparisons between matrices should go
through :func:`align_global_phase` rather than direct equality.
"""

from __future__ import annotations

import numpy as np

from .photoelastics import PhaseShift

__all__ = [
    "H_STATE",
    "V_STATE",
    "half_wave_plate",
    "birefringent_retarder",
    "pmzi_transfer",
    "pmzi_intensity",
    "fringe_visibility",
    "is_unitary",
    "align_global_phase",
]

H_STATE = np.array([1.0, 0.0], dtype=complex)
V_STATE = np.array([0.0, 1.0], dtype=complex)

#: Fast-axis angle that makes a half-wave plate act as the 50:50 mixer.
MIXER_ANGLE = np.pi / 8


def half_wave_plate(axis_angle: float, retardance: float = np.pi) -> np.ndarray:
    """Waveplate Jones matrix with the fast axis at ``axis_angle``.

    The default retardance is exactly half a wave, for which the matrix
    is real: [[cos 2a, sin 2a], [sin 2a, -cos 2a]]. An ideal plate at
    pi/8 therefore sends H to (H+V)/sqrt(2), rotating the polarization
    frame by a quarter turn on the Poincare equator. ``retardance`` can
    model an imperfect plate; the slow axis picks up exp(i*retardance).
    """
    c = np.cos(axis_angle)
    s = np.sin(axis_angle)
    rot = np.array([[c, -s], [s, c]])
    plate = np.array([[1.0, 0.0], [0.0, np.exp(1j * retardance)]], dtype=complex)
    return rot @ plate @ rot.T


def birefringent_retarder(ps: PhaseShift) -> np.ndarray:
    """Diagonal phase element of the stressed waveguide section.

    H picks up exp(i theta_h), V picks up exp(i theta_v); only their
    difference is observable downstream.
    """
    return np.array(
        [[np.exp(1j * ps.theta_h), 0.0], [0.0, np.exp(1j * ps.theta_v)]],
        dtype=complex,
    )


def pmzi_transfer(ps: PhaseShift) -> np.ndarray:
    """Full interferometer: mixer plate, stressed section, mixer plate."""
    mixer = half_wave_plate(MIXER_ANGLE)
    return mixer @ birefringent_retarder(ps) @ mixer


def pmzi_intensity(delta_theta):
    """Co-polarized output intensity cos^2(delta_theta / 2).

    Accepts scalars or arrays. Equals |pmzi_transfer[H -> H]|^2; the
    equivalence is enforced by tests rather than assumed here.
    """
    return np.cos(0.5 * np.asarray(delta_theta)) ** 2


def fringe_visibility(intensities) -> float:
    """Fringe visibility (Imax - Imin) / (Imax + Imin).

    Needs at least two samples, all non-negative, not all zero.
    """
    values = np.asarray(intensities, dtype=float)
    if values.size < 2:
        raise ValueError("visibility needs at least two intensity samples")
    if np.any(values < 0.0):
        raise ValueError("intensities must be non-negative")
    top = float(np.max(values))
    bottom = float(np.min(values))
    if top == 0.0:
        raise ValueError("visibility of an all-zero fringe is undefined")
    return (top - bottom) / (top + bottom)


def is_unitary(matrix: np.ndarray, tol: float = 1e-12) -> bool:
    """True when matrix is unitary within tol in the max-abs norm."""
    matrix = np.asarray(matrix)
    eye = np.eye(matrix.shape[0], dtype=complex)
    return bool(np.max(np.abs(matrix.conj().T @ matrix - eye)) < tol)


def align_global_phase(matrix: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Rephase ``matrix`` to best match ``reference``.

    Multiplies by the unit phase that maximizes Re tr(reference^dagger
    matrix'); if the two differ only by a global phase the result equals
    ``reference`` to rounding. When the overlap is exactly zero there is
    no preferred phase and the matrix is returned unchanged.
    """
    overlap = np.vdot(matrix, reference)
    magnitude = abs(overlap)
    if magnitude == 0.0:
        return matrix
    return matrix * (overlap / magnitude)
