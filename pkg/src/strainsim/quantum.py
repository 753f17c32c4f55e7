"""Two-photon behavior of the polarization interferometer.

One photon in each polarization enters the device; the pair interferes
inside the same single-mode guide. On the symmetric two-photon basis
{|2,0>, |1,1>, |0,2>} (mode 1 = H, mode 2 = V) the single-photon
transfer matrix lifts to a 3x3 unitary built from matrix permanents.
The first mixer plate bunches an indistinguishable pair into the
two-mode path-entangled state (|2,0> - |0,2>)/sqrt(2), which picks up
phase at twice the single-photon rate, so coincidence fringes run at
half the classical period.

Partial distinguishability is a single scalar overlap O in [0, 1],
mixing the interfering and classical coincidence probabilities with
weights O^2 and 1 - O^2. A Gaussian wavepacket model maps a relative
delay to O; the coherence time is a free parameter of that model, not
a measured quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .photoelastics import PhaseShift
from .polarization import is_unitary, pmzi_intensity, pmzi_transfer

__all__ = [
    "FOCK_BASIS",
    "WavepacketOverlap",
    "two_photon_unitary",
    "pmzi_coincidence",
    "hom_dip",
    "quantum_fringe_scan",
    "count_mean_crossings",
]

#: Occupation numbers (n_H, n_V) indexing the symmetric two-photon basis.
FOCK_BASIS = ((2, 0), (1, 1), (0, 2))

#: Creation-operator index lists for each basis state, e.g. |2,0> is two
#: photons in mode 0.
_MODE_INDICES = ((0, 0), (0, 1), (1, 1))

_FACTORIALS = {0: 1.0, 1: 1.0, 2: 2.0}


@dataclass(frozen=True)
class WavepacketOverlap:
    """Scalar indistinguishability of the photon pair.

    ``overlap`` is 1 for identical wavepackets and 0 for fully
    distinguishable ones. :meth:`from_delay` builds it from a relative
    arrival delay under a Gaussian envelope with 1/e coherence time
    ``coherence_time``.
    """

    overlap: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.overlap <= 1.0:
            raise ValueError("overlap must lie in [0, 1]")

    @classmethod
    def from_delay(cls, delay: float, coherence_time: float) -> "WavepacketOverlap":
        if coherence_time <= 0.0:
            raise ValueError("coherence time must be positive")
        return cls(overlap=math.exp(-((delay / coherence_time) ** 2)))


def _permanent(matrix: np.ndarray) -> complex:
    """Permanent by direct sum over permutations; fine for 2x2 blocks."""
    n = matrix.shape[0]
    total = 0.0 + 0.0j
    for perm in permutations(range(n)):
        term = 1.0 + 0.0j
        for row, col in enumerate(perm):
            term *= matrix[row, col]
        total += term
    return total


def two_photon_unitary(u: np.ndarray) -> np.ndarray:
    """Lift a 2x2 unitary to the symmetric two-photon basis.

    Entry (r, c) is per(U[rows_r, cols_c]) / sqrt(prod n_r! prod n_c!)
    where rows_r and cols_c repeat each mode index by its occupation.
    The lift preserves unitarity and composition.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("expected a 2x2 transfer matrix")
    if not is_unitary(u, tol=1e-10):
        raise ValueError("transfer matrix must be unitary within 1e-10")
    out = np.empty((3, 3), dtype=complex)
    for r, (rows, occ_out) in enumerate(zip(_MODE_INDICES, FOCK_BASIS)):
        for c, (cols, occ_in) in enumerate(zip(_MODE_INDICES, FOCK_BASIS)):
            block = u[np.ix_(rows, cols)]
            norm = math.sqrt(
                _FACTORIALS[occ_out[0]]
                * _FACTORIALS[occ_out[1]]
                * _FACTORIALS[occ_in[0]]
                * _FACTORIALS[occ_in[1]]
            )
            out[r, c] = _permanent(block) / norm
    return out


def _coerce_overlap(overlap) -> float:
    if isinstance(overlap, WavepacketOverlap):
        return overlap.overlap
    overlap = float(overlap)
    if not 0.0 <= overlap <= 1.0:
        raise ValueError("overlap must lie in [0, 1]")
    return overlap


def pmzi_coincidence(delta_theta, overlap) -> float | np.ndarray:
    """Coincidence probability for a |1,1> input at phase delta_theta.

    Closed form 1 - (1 + O^2) sin^2(delta_theta) / 2, the O^2-weighted
    mix of the interfering two-photon term cos^2(delta_theta) and the
    distinguishable-pair term 1 - sin^2(delta_theta)/2. At O = 1 the
    period in delta_theta is pi, half the classical fringe period.

    ``overlap`` may be a float or a :class:`WavepacketOverlap`;
    ``delta_theta`` may be a scalar or array.
    """
    o = _coerce_overlap(overlap)
    delta_theta = np.asarray(delta_theta)
    result = 1.0 - 0.5 * (1.0 + o * o) * np.sin(delta_theta) ** 2
    if result.ndim == 0:
        return float(result)
    return result


def hom_dip(delay, coherence_time: float) -> float | np.ndarray:
    """Coincidence probability vs relative delay at the 50:50 point.

    Holds the interferometer at delta_theta = pi/2 and scans the pair
    delay; the overlap follows the Gaussian model of
    :class:`WavepacketOverlap`. Returns (1 - O(delay)^2) / 2: zero at
    zero delay, 0.5 for fully distinguishable photons.
    """
    if coherence_time <= 0.0:
        raise ValueError("coherence time must be positive")
    delay = np.asarray(delay, dtype=float)
    o = np.exp(-((delay / coherence_time) ** 2))
    result = 0.5 * (1.0 - o * o)
    if result.ndim == 0:
        return float(result)
    return result


def quantum_fringe_scan(delta_theta_samples, overlap):
    """Coincidence and classical fringes on a shared phase axis.

    Returns (delta_theta, coincidence, classical) arrays, where
    ``classical`` is the single-photon co-polarized intensity
    cos^2(delta_theta/2). Used for overlay exports; the half-period
    relationship between the two curves is the point of the comparison.
    """
    samples = np.asarray(delta_theta_samples, dtype=float)
    if samples.size == 0:
        raise ValueError("phase samples must be nonempty")
    coincidence = pmzi_coincidence(samples, overlap)
    classical = pmzi_intensity(samples)
    return samples, np.asarray(coincidence), classical


def coincidence_brute_force(delta_theta: float, overlap) -> float:
    """Coincidence probability via the lifted two-photon unitary.

    Reference path for validating :func:`pmzi_coincidence`: propagate
    |1,1> through two_photon_unitary(pmzi_transfer) for the interfering
    part, and combine single-photon probabilities for the
    distinguishable part, weighting the two by O^2 and 1 - O^2.
    """
    o = _coerce_overlap(overlap)
    ps = PhaseShift(theta_h=0.0, theta_v=float(delta_theta), interaction_length=1.0)
    u = pmzi_transfer(ps)
    lifted = two_photon_unitary(u)
    amp_11 = lifted[1, 1]
    p_interfering = float(abs(amp_11) ** 2)
    # Distinguishable photons: each takes a one-photon path; coincidence
    # happens when both exit in different polarizations.
    t_hh = abs(u[0, 0]) ** 2
    t_hv = abs(u[1, 0]) ** 2
    t_vh = abs(u[0, 1]) ** 2
    t_vv = abs(u[1, 1]) ** 2
    p_classical = float(t_hh * t_vv + t_hv * t_vh)
    return o * o * p_interfering + (1.0 - o * o) * p_classical


def count_mean_crossings(values) -> int:
    """Number of times a sampled signal crosses its own mean.

    Samples within a small dead zone around the mean (1e-9 of the
    signal's peak-to-peak range) are skipped rather than letting
    rounding noise flip the sign. Used to measure fringe periods: a
    fringe spanning k full periods crosses its mean 2k times.
    """
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        raise ValueError("need at least two samples")
    span = float(values.max() - values.min())
    if span == 0.0:
        return 0
    centered = values - values.mean()
    signs = np.sign(centered)
    signs = signs[np.abs(centered) > 1e-9 * span]
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(np.diff(signs) != 0))
