import math

import numpy as np
import pytest

from tapertpa.constants import (
    BeamSpec,
    C_LIGHT,
    HBAR,
    detuning_wavelength_to_angular,
    dipole_from_radius,
    omega_to_wavelength,
    wavelength_to_omega,
)


def test_wavelength_to_omega_nominal():
    w = wavelength_to_omega(778.1e-9)
    assert w == pytest.approx(2420834812117791.0, rel=1e-12)
    assert HBAR * w == pytest.approx(2.5529441664719124e-19, rel=1e-12)


def test_wavelength_scaling_identity():
    w = wavelength_to_omega(778.1e-9)
    assert wavelength_to_omega(2 * 778.1e-9) == pytest.approx(w / 2, rel=1e-14)


def test_wavelength_round_trip():
    for lam in np.logspace(-7, -5, 17):
        back = omega_to_wavelength(wavelength_to_omega(lam))
        assert abs(back - lam) / lam < 1e-12


def test_wavelength_domain_error():
    with pytest.raises(ValueError):
        wavelength_to_omega(0.0)
    with pytest.raises(ValueError):
        wavelength_to_omega(-1e-6)


def test_detuning_conversion_matches_quoted_angular_frequency():
    # 2.1 nm off a 778.1 nm carrier is quoted as 6.54e12 rad/s
    got = detuning_wavelength_to_angular(2.1e-9, 778.1e-9)
    assert got == pytest.approx(6533547237433.956, rel=1e-12)
    assert got == pytest.approx(6.54e12, rel=0.01)


def test_detuning_zero_and_linearity():
    assert detuning_wavelength_to_angular(0.0, 778.1e-9) == 0.0
    one = detuning_wavelength_to_angular(2.1e-9, 778.1e-9)
    two = detuning_wavelength_to_angular(4.2e-9, 778.1e-9)
    assert two == pytest.approx(2 * one, rel=1e-14)
    rng = np.random.default_rng(3)
    for _ in range(20):
        dl = rng.uniform(-5e-9, 5e-9)
        k = rng.uniform(0.1, 10)
        a = detuning_wavelength_to_angular(k * dl, 778.1e-9)
        b = detuning_wavelength_to_angular(dl, 778.1e-9)
        assert a == pytest.approx(k * b, rel=1e-12, abs=1e-6)


def test_dipole_from_radius():
    assert dipole_from_radius(0.223e-9) == pytest.approx(3.57285389382e-29, rel=1e-12)
    assert dipole_from_radius(0.0492e-9) == pytest.approx(7.88270903928e-30, rel=1e-12)
    with pytest.raises(ValueError):
        dipole_from_radius(0.0)


def test_beam_spec_validation():
    beam = BeamSpec(778.1e-9, 1e-3)
    assert beam.omega == wavelength_to_omega(778.1e-9)
    with pytest.raises(ValueError):
        BeamSpec(300e-9, 1e-3)  # below 400 nm
    with pytest.raises(ValueError):
        BeamSpec(1700e-9, 1e-3)
    with pytest.raises(ValueError):
        BeamSpec(778.1e-9, -1e-3)
    with pytest.raises(ValueError):
        BeamSpec(778.1e-9, 1e-3, direction=2)


def test_speed_of_light_exact():
    assert C_LIGHT == 299792458.0
