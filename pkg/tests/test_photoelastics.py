"""Stress-optic mapping: index changes, phases, and inverse relations.

Derived literals were frozen from hand-evaluated arithmetic on the
default constants (E = 73 GPa, n = 1.4525, rho 0.26/0.12) before the
module existed; the tests also recompute them inline where the
arithmetic is one line.
"""

import math

import numpy as np
import pytest

from strainsim import (
    FUSED_SILICA,
    IndexChange,
    PhaseShift,
    ProbeLight,
    StressTensor2D,
    birefringent_phase,
    index_change_full,
    index_change_uniaxial,
    phase_from_index,
    required_stress,
    stress_for_differential_phase,
)

PROBE = ProbeLight(wavelength=830e-9, polarization="V")
LENGTH = 1.0e-3


def rotate_tensor(t: StressTensor2D, angle: float) -> StressTensor2D:
    """In-plane rotation of a stress tensor by ``angle`` about y."""
    c, s = math.cos(angle), math.sin(angle)
    r = np.array([[c, s], [-s, c]])
    m = np.array([[t.sigma_xx, t.tau_xz], [t.tau_xz, t.sigma_zz]])
    m2 = r @ m @ r.T
    return StressTensor2D(
        sigma_xx=m2[0, 0], sigma_zz=m2[1, 1], tau_xz=m2[0, 1], sigma_yy=t.sigma_yy
    )


def index_tensor(dn: IndexChange) -> np.ndarray:
    return np.array(
        [[dn.delta_n_x, dn.delta_n_xz], [dn.delta_n_xz, dn.delta_n_z]]
    )


# uniaxial index change


def test_uniaxial_zero_stress():
    dn = index_change_uniaxial(0.0, FUSED_SILICA)
    assert dn.delta_n_x == 0.0
    assert dn.delta_n_z == 0.0
    assert dn.principal_axis_angle == 0.0


def test_uniaxial_14_megapascals():
    dn = index_change_uniaxial(14e6, FUSED_SILICA)
    # 0.5 * 1.4525^3 * 0.26 * 1.4e7 / 7.3e10, negative under compression.
    assert np.isclose(dn.delta_n_z, -7.640063198202054e-05, rtol=1e-12)
    assert np.isclose(
        dn.delta_n_z,
        -0.5 * 1.4525**3 * 0.26 * 14e6 / 73e9,
        rtol=1e-15,
    )
    # Perpendicular component scales by the coefficient ratio 12/26.
    assert np.isclose(dn.delta_n_x / dn.delta_n_z, 12.0 / 26.0, rtol=1e-15)


def test_uniaxial_index_for_full_wave():
    # At the stress that produces a 2 pi phase over 1 mm, the parallel
    # index change is exactly -lambda / l.
    sigma = required_stress(2 * math.pi, "V", PROBE, LENGTH, FUSED_SILICA)
    dn = index_change_uniaxial(sigma, FUSED_SILICA)
    assert np.isclose(dn.delta_n_z, -PROBE.wavelength / LENGTH, rtol=1e-12)
    assert abs(abs(dn.delta_n_z) - 8.3e-4) / 8.3e-4 < 0.01


def test_uniaxial_linearity():
    rng = np.random.default_rng(23)
    for _ in range(50):
        sigma = rng.uniform(-5e7, 5e7)
        k = rng.uniform(0.1, 3.0)
        a = index_change_uniaxial(sigma, FUSED_SILICA)
        b = index_change_uniaxial(k * sigma, FUSED_SILICA)
        assert np.isclose(b.delta_n_z, k * a.delta_n_z, rtol=1e-12, atol=1e-22)
        assert np.isclose(b.delta_n_x, k * a.delta_n_x, rtol=1e-12, atol=1e-22)


def test_uniaxial_rejects_non_finite():
    with pytest.raises(ValueError):
        index_change_uniaxial(float("nan"), FUSED_SILICA)


def test_index_change_warns_when_large():
    with pytest.warns(UserWarning):
        index_change_uniaxial(2e9, FUSED_SILICA)


def test_index_change_quiet_at_working_levels():
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error")
        index_change_uniaxial(1.5e8, FUSED_SILICA)


# full-tensor index change


def test_full_reduces_to_uniaxial():
    for sigma in (14e6, -7e6, 2.3e8):
        t = StressTensor2D(sigma_xx=0.0, sigma_zz=sigma, tau_xz=0.0, sigma_yy=0.0)
        full = index_change_full(t, FUSED_SILICA)
        uni = index_change_uniaxial(sigma, FUSED_SILICA)
        assert np.isclose(full.delta_n_z, uni.delta_n_z, rtol=1e-14)
        assert np.isclose(full.delta_n_x, uni.delta_n_x, rtol=1e-14)
        assert full.delta_n_xz == 0.0


def test_full_sigma_yy_adds_perpendicular_shift():
    base = StressTensor2D(sigma_xx=0.0, sigma_zz=1e7, tau_xz=0.0, sigma_yy=0.0)
    strained = StressTensor2D(sigma_xx=0.0, sigma_zz=1e7, tau_xz=0.0, sigma_yy=2e6)
    d_base = index_change_full(base, FUSED_SILICA)
    d_str = index_change_full(strained, FUSED_SILICA)
    n = FUSED_SILICA.refractive_index
    shift = -0.5 * n**3 * FUSED_SILICA.rho_perpendicular * 2e6 / FUSED_SILICA.youngs_modulus
    assert np.isclose(d_str.delta_n_z - d_base.delta_n_z, shift, rtol=1e-12)
    assert np.isclose(d_str.delta_n_x - d_base.delta_n_x, shift, rtol=1e-12)
    # sigma_yy is isotropic in-plane: the birefringence is untouched.
    assert np.isclose(d_str.birefringence, d_base.birefringence, rtol=1e-12)


def test_full_pure_shear():
    tau = 5e6
    t = StressTensor2D(sigma_xx=0.0, sigma_zz=0.0, tau_xz=tau, sigma_yy=0.0)
    dn = index_change_full(t, FUSED_SILICA)
    assert np.isclose(abs(dn.principal_axis_angle), math.pi / 4, rtol=1e-12)
    # Lab-frame diagonal vanishes by symmetry; the birefringence lives
    # entirely in the off-diagonal term.
    assert abs(dn.delta_n_x) < 1e-20
    assert abs(dn.delta_n_z) < 1e-20
    n = FUSED_SILICA.refractive_index
    rho_diff = FUSED_SILICA.rho_parallel - FUSED_SILICA.rho_perpendicular
    expected = -0.5 * n**3 * rho_diff * tau / FUSED_SILICA.youngs_modulus
    assert np.isclose(dn.delta_n_xz, expected, rtol=1e-12)
    # Same state, viewed 45 degrees rotated, is a biaxial tensor with
    # sigma_xx = +tau and sigma_zz = -tau, so delta_n_z - delta_n_x
    # picks up both diagonal terms with opposite signs.
    rotated = rotate_tensor(t, math.pi / 4)
    dn_rot = index_change_full(rotated, FUSED_SILICA)
    assert abs(dn_rot.delta_n_xz) < 1e-20
    assert np.isclose(dn_rot.birefringence, -2.0 * expected, rtol=1e-10)


def test_full_hydrostatic_in_plane():
    s = 3e7
    t = StressTensor2D(sigma_xx=s, sigma_zz=s, tau_xz=0.0, sigma_yy=s)
    dn = index_change_full(t, FUSED_SILICA)
    assert dn.birefringence == 0.0
    assert dn.delta_n_xz == 0.0
    assert dn.principal_axis_angle == 0.0


def test_full_rotational_covariance():
    rng = np.random.default_rng(31)
    for _ in range(200):
        t = StressTensor2D(
            sigma_xx=rng.normal(0, 3e7),
            sigma_zz=rng.normal(0, 3e7),
            tau_xz=rng.normal(0, 3e7),
            sigma_yy=rng.normal(0, 3e7),
        )
        angle = rng.uniform(-math.pi, math.pi)
        direct = index_tensor(index_change_full(rotate_tensor(t, angle), FUSED_SILICA))
        c, s = math.cos(angle), math.sin(angle)
        r = np.array([[c, s], [-s, c]])
        carried = r @ index_tensor(index_change_full(t, FUSED_SILICA)) @ r.T
        assert np.allclose(direct, carried, atol=1e-10)


# required stress


def test_required_stress_full_wave():
    sigma = required_stress(2 * math.pi, "V", PROBE, LENGTH, FUSED_SILICA)
    assert abs(sigma - 1.521e8) / 1.521e8 < 1e-3
    assert np.isclose(sigma, 152092982.72211346, rtol=1e-12)


def test_required_stress_polarization_ratio():
    sv = required_stress(2 * math.pi, "V", PROBE, LENGTH, FUSED_SILICA)
    sh = required_stress(2 * math.pi, "H", PROBE, LENGTH, FUSED_SILICA)
    assert np.isclose(sh / sv, 26.0 / 12.0, rtol=1e-14)


def test_required_stress_validation():
    with pytest.raises(ValueError):
        required_stress(0.0, "V", PROBE, LENGTH, FUSED_SILICA)
    with pytest.raises(ValueError):
        required_stress(-1.0, "V", PROBE, LENGTH, FUSED_SILICA)
    with pytest.raises(ValueError):
        required_stress(1.0, "V", PROBE, 0.0, FUSED_SILICA)
    with pytest.raises(ValueError):
        required_stress(1.0, "diagonal", PROBE, LENGTH, FUSED_SILICA)


def test_required_stress_round_trip():
    rng = np.random.default_rng(47)
    rho_ratio = FUSED_SILICA.rho_perpendicular / FUSED_SILICA.rho_parallel
    for _ in range(1000):
        theta = rng.uniform(0.1, 20.0)
        l = rng.uniform(1e-4, 1e-2)
        lam = rng.uniform(400e-9, 1600e-9)
        probe = ProbeLight(wavelength=lam)
        sigma = required_stress(theta, "V", probe, l, FUSED_SILICA)
        ps = birefringent_phase(sigma, probe, l, FUSED_SILICA)
        assert abs(ps.theta_v - theta) / theta < 1e-9
        assert abs(ps.delta_theta - theta * (1.0 - rho_ratio)) / theta < 1e-9


# birefringent phase


def test_phase_zero_stress():
    ps = birefringent_phase(0.0, PROBE, LENGTH, FUSED_SILICA)
    assert ps.delta_theta == 0.0
    assert ps.theta_h == 0.0 and ps.theta_v == 0.0


def test_phase_14_megapascals():
    ps = birefringent_phase(14e6, PROBE, LENGTH, FUSED_SILICA)
    assert abs(ps.delta_theta - 0.3114) < 0.3114 * 0.005
    assert np.isclose(ps.delta_theta, 0.3114249581372256, rtol=1e-12)


def test_phase_pi_set_point():
    sigma_pi = stress_for_differential_phase(math.pi, PROBE, LENGTH, FUSED_SILICA)
    assert np.isclose(sigma_pi, 141229198.2419625, rtol=1e-12)
    assert abs(sigma_pi - 141.2e6) / 141.2e6 < 0.005
    ps = birefringent_phase(sigma_pi, PROBE, LENGTH, FUSED_SILICA)
    assert np.isclose(ps.delta_theta, math.pi, rtol=1e-12)


def test_phase_linearity():
    rng = np.random.default_rng(59)
    for _ in range(100):
        sigma = rng.uniform(-2e8, 2e8)
        l = rng.uniform(1e-4, 5e-3)
        lam = rng.uniform(500e-9, 1500e-9)
        probe = ProbeLight(wavelength=lam)
        base = birefringent_phase(sigma, probe, l, FUSED_SILICA)
        assert np.isclose(
            birefringent_phase(2 * sigma, probe, l, FUSED_SILICA).delta_theta,
            2 * base.delta_theta,
            rtol=1e-12,
            atol=1e-18,
        )
        assert np.isclose(
            birefringent_phase(sigma, probe, 2 * l, FUSED_SILICA).delta_theta,
            2 * base.delta_theta,
            rtol=1e-12,
            atol=1e-18,
        )
        half_lam = ProbeLight(wavelength=lam / 2)
        assert np.isclose(
            birefringent_phase(sigma, half_lam, l, FUSED_SILICA).delta_theta,
            2 * base.delta_theta,
            rtol=1e-12,
            atol=1e-18,
        )


# phase from index, composition


def test_phase_from_index_full_wave():
    dn = IndexChange(
        delta_n_x=PROBE.wavelength / LENGTH,
        delta_n_z=PROBE.wavelength / LENGTH,
        principal_axis_angle=0.0,
    )
    ps = phase_from_index(dn, LENGTH, PROBE.wavelength)
    assert np.isclose(ps.theta_h, 2 * math.pi, rtol=1e-12)
    assert np.isclose(ps.theta_v, 2 * math.pi, rtol=1e-12)
    assert abs(ps.delta_theta) < 1e-15


def test_phase_from_index_literal_case():
    dn = IndexChange(delta_n_x=0.0, delta_n_z=8.3e-4, principal_axis_angle=0.0)
    ps = phase_from_index(dn, 1e-3, 830e-9)
    assert abs(ps.theta_v - 2 * math.pi) < 1e-9


def test_composition_mirrors_direct_phase():
    for sigma in (1e7, -4e6, 1.41e8):
        composed = phase_from_index(
            index_change_uniaxial(sigma, FUSED_SILICA), LENGTH, PROBE.wavelength
        )
        direct = birefringent_phase(sigma, PROBE, LENGTH, FUSED_SILICA)
        # Same magnitudes, opposite sign convention.
        assert np.isclose(composed.theta_v, -direct.theta_v, rtol=1e-12)
        assert np.isclose(composed.theta_h, -direct.theta_h, rtol=1e-12)
        assert np.isclose(composed.delta_theta, -direct.delta_theta, rtol=1e-12)


def test_phase_shift_invariant():
    ps = PhaseShift(theta_h=0.25, theta_v=1.0, interaction_length=1e-3)
    assert ps.delta_theta == 0.75
    with pytest.raises(ValueError):
        PhaseShift(theta_h=0.0, theta_v=0.0, interaction_length=0.0)


def test_validation_of_lengths():
    with pytest.raises(ValueError):
        birefringent_phase(1e6, PROBE, -1e-3, FUSED_SILICA)
    with pytest.raises(ValueError):
        phase_from_index(
            IndexChange(0.0, 0.0, 0.0), 1e-3, 0.0
        )
    with pytest.raises(ValueError):
        stress_for_differential_phase(float("inf"), PROBE, LENGTH, FUSED_SILICA)
