"""Fundamental-mode (HE11) solver for a step-index subwavelength fiber.

The guided mode of a silica wire of diameter D in vacuum/air is found by
scanning the effective index over the open guided window (n2, n1), bracketing
sign changes of the hybrid-mode dispersion residual while skipping its poles
(zeros of J1), and polishing the bracket with bisection. The core index comes
from the Malitson three-term Sellmeier fit for fused silica.

Conventions: U and W are the normalized transverse core/cladding parameters,
V the waveguide strength (U^2 + W^2 = V^2), s the hybrid-mode mixing
parameter used by the field expressions. With the default n2 = 1 the K-term
weight 1/n1^2 in the residual's second bracket is identical to the general
(n2/n1)^2 weight used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C_LIGHT, wavelength_to_omega
from .errors import NoGuidedRootError
from . import specfun

SINGLE_MODE_V = 2.405  # first zero of J0; HE11 is the only guided mode below it

# Malitson fused-silica Sellmeier coefficients (lambda in micrometers).
_SELLMEIER_B = (0.6961663, 0.4079426, 0.8974794)
_SELLMEIER_L = (0.0684043, 0.1162414, 9.896161)
_SELLMEIER_RANGE = (210e-9, 3.7e-6)


def silica_index(lam: float) -> float:
    """Fused-silica refractive index at vacuum wavelength ``lam`` (m)."""
    lo, hi = _SELLMEIER_RANGE
    if not lo <= lam <= hi:
        raise ValueError(
            f"wavelength {lam:.4g} m outside Sellmeier validity [{lo:.3g}, {hi:.3g}] m"
        )
    lum2 = (lam * 1e6) ** 2
    n2 = 1.0
    for b, l in zip(_SELLMEIER_B, _SELLMEIER_L):
        n2 += b * lum2 / (lum2 - l * l)
    return math.sqrt(n2)


@dataclass(frozen=True)
class WaveguideGeometry:
    """Step-index geometry: core diameter, vacuum wavelength, indices."""

    diameter: float
    wavelength: float
    n_core: float
    n_clad: float = 1.0

    def __post_init__(self):
        if self.diameter <= 0:
            raise ValueError(f"diameter must be positive, got {self.diameter:.4g}")
        if self.wavelength <= 0:
            raise ValueError(f"wavelength must be positive, got {self.wavelength:.4g}")
        if not self.n_core > self.n_clad >= 1.0:
            raise ValueError(
                f"need n_core > n_clad >= 1, got n_core={self.n_core}, n_clad={self.n_clad}"
            )

    @property
    def a(self) -> float:
        return 0.5 * self.diameter

    @property
    def k0(self) -> float:
        return 2.0 * math.pi / self.wavelength


def make_geometry(diameter: float, wavelength: float, n_clad: float = 1.0) -> WaveguideGeometry:
    """Geometry with the silica Sellmeier core index at this wavelength."""
    return WaveguideGeometry(diameter, wavelength, silica_index(wavelength), n_clad)


@dataclass(frozen=True)
class ModeSolution:
    """Solved fundamental mode and its derived waveguide parameters."""

    geometry: WaveguideGeometry
    beta: float
    k0: float
    a: float
    U: float
    W: float
    V: float
    n_eff: float
    s: float
    v_g: float
    single_mode: bool

    @property
    def omega(self) -> float:
        return wavelength_to_omega(self.geometry.wavelength)


def waveguide_v(geom: WaveguideGeometry) -> float:
    """Waveguide strength V = k0 * a * sqrt(n_core^2 - n_clad^2)."""
    return geom.k0 * geom.a * math.sqrt(geom.n_core**2 - geom.n_clad**2)


def _residual_from_neff(n_eff, geom: WaveguideGeometry):
    """Dispersion residual as a function of effective index (vectorized).

    LHS - RHS of the hybrid-mode eigenvalue equation,

        (J1'(U)/(U J1(U)) + K1'(W)/(W K1(W)))
      * (J1'(U)/(U J1(U)) + (n2/n1)^2 K1'(W)/(W K1(W)))
      - (n_eff/n1)^2 (V/(U W))^4.

    Poles (J1(U) = 0) evaluate to non-finite values.
    """
    n_eff = np.asarray(n_eff, dtype=float)
    n1, n2 = geom.n_core, geom.n_clad
    ak0 = geom.a * geom.k0
    U = ak0 * np.sqrt(n1**2 - n_eff**2)
    W = ak0 * np.sqrt(n_eff**2 - n2**2)
    V = waveguide_v(geom)
    with np.errstate(divide="ignore", invalid="ignore"):
        tj = specfun.bessel_j1_prime(U) / (U * specfun.bessel_j(1, U))
        tk = specfun.bessel_k1_prime(W) / (W * specfun.bessel_k(1, W))
        lhs = (tj + tk) * (tj + (n2 / n1) ** 2 * tk)
        rhs = (n_eff / n1) ** 2 * (V / (U * W)) ** 4
        out = lhs - rhs
    return out if out.ndim else float(out)


def dispersion_residual(beta: float, geom: WaveguideGeometry) -> float:
    """Dispersion residual at propagation constant ``beta`` (rad/m).

    Requires beta strictly inside the guided window (k0*n_clad, k0*n_core).
    """
    k0 = geom.k0
    if not k0 * geom.n_clad < beta < k0 * geom.n_core:
        raise ValueError(
            f"beta={beta:.6g} outside open guided window "
            f"({k0 * geom.n_clad:.6g}, {k0 * geom.n_core:.6g})"
        )
    return _residual_from_neff(beta / k0, geom)


def _hybrid_s(U: float, W: float) -> float:
    tj = specfun.bessel_j1_prime(U) / (U * specfun.bessel_j(1, U))
    tk = specfun.bessel_k1_prime(W) / (W * specfun.bessel_k(1, W))
    return (1.0 / U**2 + 1.0 / W**2) / (tj + tk)


def _solve_neff(geom: WaveguideGeometry, n_scan: int = 2000, tol: float = 1e-12) -> float:
    """Largest-n_eff root of the dispersion residual (the fundamental mode).

    Uniform scan over (n_clad + 1e-6, n_core - 1e-6) brackets sign changes;
    intervals in which J1(U) changes sign are poles, not roots, and are
    skipped. The best bracket is polished by bisection to |dn_eff| < tol.
    """
    n1, n2 = geom.n_core, geom.n_clad
    grid = np.linspace(n2 + 1e-6, n1 - 1e-6, n_scan)
    res = _residual_from_neff(grid, geom)
    ak0 = geom.a * geom.k0
    j1u = specfun.bessel_j(1, ak0 * np.sqrt(n1**2 - grid**2))

    ok = np.isfinite(res)
    sign_change = ok[:-1] & ok[1:] & (np.sign(res[:-1]) * np.sign(res[1:]) < 0)
    pole = np.sign(j1u[:-1]) * np.sign(j1u[1:]) < 0
    candidates = np.nonzero(sign_change & ~pole)[0]
    if candidates.size == 0:
        raise NoGuidedRootError(
            f"no guided-mode root for D={geom.diameter:.4g} m at "
            f"lambda={geom.wavelength:.4g} m (V={waveguide_v(geom):.3f}); "
            "mode too close to cutoff"
        )

    i = int(candidates[-1])  # largest effective index = fundamental mode
    lo, hi = float(grid[i]), float(grid[i + 1])
    flo = float(res[i])
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = float(_residual_from_neff(mid, geom))
        if fmid == 0.0:
            return mid
        if flo * fmid < 0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _solve_core(geom: WaveguideGeometry) -> tuple[float, float, float, float, float]:
    n_eff = _solve_neff(geom)
    ak0 = geom.a * geom.k0
    U = ak0 * math.sqrt(geom.n_core**2 - n_eff**2)
    W = ak0 * math.sqrt(n_eff**2 - geom.n_clad**2)
    return n_eff, n_eff * geom.k0, U, W, waveguide_v(geom)


def group_velocity(geom: WaveguideGeometry, rel_step: float = 1e-4) -> float:
    """Group velocity d(omega)/d(beta) by central difference.

    The mode is re-solved at omega*(1 +/- rel_step) with the silica core
    index re-evaluated at each shifted wavelength, so material dispersion is
    included. Assumes a fused-silica core.
    """
    omega = wavelength_to_omega(geom.wavelength)
    betas = []
    for sign in (+1.0, -1.0):
        w = omega * (1.0 + sign * rel_step)
        lam = 2.0 * math.pi * C_LIGHT / w
        shifted = WaveguideGeometry(geom.diameter, lam, silica_index(lam), geom.n_clad)
        betas.append(_solve_core(shifted)[1])
    return 2.0 * omega * rel_step / (betas[0] - betas[1])


def solve_he11(geom: WaveguideGeometry) -> ModeSolution:
    """Solve the fundamental mode and derive all waveguide parameters."""
    n_eff, beta, U, W, V = _solve_core(geom)
    return ModeSolution(
        geometry=geom,
        beta=beta,
        k0=geom.k0,
        a=geom.a,
        U=U,
        W=W,
        V=V,
        n_eff=n_eff,
        s=_hybrid_s(U, W),
        v_g=group_velocity(geom),
        single_mode=V < SINGLE_MODE_V,
    )


def single_mode_cutoff_diameter(lam: float, n_clad: float = 1.0) -> float:
    """Diameter at which V = 2.405 for a silica core at wavelength ``lam`` (m)."""
    n1 = silica_index(lam)
    return SINGLE_MODE_V * lam / (math.pi * math.sqrt(n1**2 - n_clad**2))
