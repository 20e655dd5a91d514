"""Physical constants and the small set of unit conversions used everywhere.

All public interfaces are SI. Constants are CODATA 2018 values, hard-coded
for reproducibility (not configurable).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# CODATA 2018
C_LIGHT = 299792458.0           # speed of light (m/s), exact
HBAR = 1.054571817e-34          # reduced Planck constant (J*s)
E_CHARGE = 1.602176634e-19      # elementary charge (C), exact
EPS0 = 8.8541878128e-12         # vacuum permittivity (F/m)


@dataclass(frozen=True)
class PhysicalConstants:
    """Bundle of the four constants, for callers that want them as a value."""

    c: float = C_LIGHT
    hbar: float = HBAR
    e_charge: float = E_CHARGE
    eps0: float = EPS0


CONSTANTS = PhysicalConstants()

# Direction of propagation along the fiber axis for a beam.
FORWARD = +1
BACKWARD = -1


@dataclass(frozen=True)
class BeamSpec:
    """One monochromatic beam: wavelength (m), power (W), direction (+1/-1)."""

    wavelength: float
    power: float
    direction: int = FORWARD

    def __post_init__(self):
        if not 400e-9 <= self.wavelength <= 1600e-9:
            raise ValueError(
                f"beam wavelength {self.wavelength:.4g} m outside [400 nm, 1600 nm]"
            )
        if self.power < 0:
            raise ValueError(f"beam power must be >= 0, got {self.power:.4g}")
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError("beam direction must be +1 or -1")

    @property
    def omega(self) -> float:
        return wavelength_to_omega(self.wavelength)


def wavelength_to_omega(lam: float) -> float:
    """Angular frequency (rad/s) of light with vacuum wavelength ``lam`` (m)."""
    if lam <= 0:
        raise ValueError(f"wavelength must be positive, got {lam:.4g}")
    return 2.0 * math.pi * C_LIGHT / lam


def omega_to_wavelength(omega: float) -> float:
    """Vacuum wavelength (m) for angular frequency ``omega`` (rad/s)."""
    if omega <= 0:
        raise ValueError(f"angular frequency must be positive, got {omega:.4g}")
    return 2.0 * math.pi * C_LIGHT / omega


def detuning_wavelength_to_angular(delta_lambda: float, lambda0: float) -> float:
    """Convert a small wavelength offset to an angular-frequency detuning.

    First-order relation around the carrier: 2*pi*c*dlambda/lambda0**2.

    Parameters
    ----------
    delta_lambda : wavelength offset (m); may be negative.
    lambda0 : carrier wavelength (m), > 0.
    """
    if lambda0 <= 0:
        raise ValueError(f"carrier wavelength must be positive, got {lambda0:.4g}")
    return 2.0 * math.pi * C_LIGHT * delta_lambda / lambda0**2


def dipole_from_radius(r: float) -> float:
    """Transition dipole moment (C*m) from its effective radius (m): e*r."""
    if r <= 0:
        raise ValueError(f"dipole radius must be positive, got {r:.4g}")
    return E_CHARGE * r
