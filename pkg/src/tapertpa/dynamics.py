"""Four-state atom-photon dynamics: two counter-propagating photons driving a
ground -> intermediate -> upper ladder through its evanescent coupling.

Basis ordering (index 0..3):

    0: no photons, atom in the upper state
    1: one forward photon left, atom in the intermediate state
    2: one backward photon left, atom in the intermediate state
    3: both photons present, atom in the ground state

The interaction matrix couples 0 <-> {1,2} through the upper-transition
element m2 and {1,2} <-> 3 through the lower-transition element m1, with
phase factors exp(+/- i delta t) from the intermediate-state detuning.
Population decay is diagonal: (gamma2, gamma1, gamma1, 0).

Density matrices and amplitude vectors are plain complex ndarrays of shape
(4, 4) and (4,). Evolutions integrate the componentwise equations with an
adaptive embedded Runge-Kutta pair (tolerances 1e-10/1e-14 by default), with
time non-dimensionalized by the fastest rate so step sizes stay well-scaled
across the three-decade gap between detuning and decay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import HBAR
from .errors import DegenerateDenominatorError, IntegrationError
from . import _rk


@dataclass(frozen=True)
class AtomParams:
    """Dipole moments, decay rates, detuning, and local coupling elements.

    m1/m2 are the interaction energies d1*E_local and d2*E_local (J). They
    default to zero so rate-only calls need not invent a local field.
    """

    d1: float
    d2: float
    gamma1: float
    gamma2: float
    delta: float
    m1: complex = 0.0
    m2: complex = 0.0

    def __post_init__(self):
        if self.gamma1 <= 0 or self.gamma2 <= 0:
            raise ValueError("decay rates gamma1, gamma2 must be positive")
        if self.d1 < 0 or self.d2 < 0:
            raise ValueError("dipole moments must be >= 0")

    @classmethod
    def with_local_field(cls, d1, d2, gamma1, gamma2, delta, e_local):
        """Couplings taken real: m1 = d1*|E_local|, m2 = d2*|E_local|."""
        e = abs(e_local)
        return cls(d1, d2, gamma1, gamma2, delta, m1=d1 * e, m2=d2 * e)


GROUND_4 = np.array([0.0, 0.0, 0.0, 1.0], dtype=complex)


def decay_diagonal(p: AtomParams) -> np.ndarray:
    """Population decay rates per basis state: (gamma2, gamma1, gamma1, 0)."""
    return np.array([p.gamma2, p.gamma1, p.gamma1, 0.0])


def interaction_matrix(p: AtomParams, t: float) -> np.ndarray:
    """The 4x4 interaction Hamiltonian (J) at time t; Hermitian for all t."""
    m1, m2 = complex(p.m1), complex(p.m2)
    c1, c2 = np.conj(m1), np.conj(m2)
    ph = np.exp(1j * p.delta * t)
    phc = np.conj(ph)
    return np.array(
        [
            [0.0, c2 * ph, m2 * ph, 0.0],
            [m2 * phc, 0.0, 0.0, m1 * phc],
            [c2 * phc, 0.0, 0.0, c1 * phc],
            [0.0, c1 * ph, m1 * ph, 0.0],
        ],
        dtype=complex,
    )


def _time_scale(p: AtomParams) -> float:
    # fastest rate in the problem, including the coupling (Rabi) rates, so the
    # nondimensional time stays O(1) per oscillation whatever dominates
    s = max(p.gamma1, p.gamma2, abs(p.delta), abs(p.m1) / HBAR, abs(p.m2) / HBAR)
    return s if s > 0.0 else 1.0


def _pars(p: AtomParams, scale: float) -> np.ndarray:
    return np.array(
        [
            complex(p.m1) / (HBAR * scale),
            complex(p.m2) / (HBAR * scale),
            p.delta / scale,
            p.gamma1 / scale,
            p.gamma2 / scale,
        ],
        dtype=complex,
    )


def _run(kind, y0: np.ndarray, p: AtomParams, t_grid, rtol: float, atol: float) -> np.ndarray:
    t_grid = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if t_grid.size == 0:
        return np.empty((0, y0.size), dtype=complex)
    if np.any(np.diff(t_grid) <= 0) or t_grid[0] < 0:
        raise ValueError("t_grid must be strictly increasing and non-negative")
    scale = _time_scale(p)
    prepend = t_grid[0] > 0.0
    tau = np.concatenate(([0.0], t_grid * scale)) if prepend else t_grid * scale
    out, status, tau_fail = _rk.integrate(kind, y0, tau, _pars(p, scale), rtol, atol)
    if status != _rk.STATUS_OK:
        raise IntegrationError(
            f"adaptive step size collapsed at t = {tau_fail / scale:.6g} s",
            t=tau_fail / scale,
        )
    return out[1:] if prepend else out


def evolve_amplitudes(
    alpha0, p: AtomParams, t_grid, rtol: float = 1e-10, atol: float = 1e-14
) -> np.ndarray:
    """Amplitude trajectories; returns array of shape (len(t_grid), 4)."""
    y0 = np.asarray(alpha0, dtype=complex).reshape(4)
    return _run(_rk.KIND_AMPLITUDES, y0, p, t_grid, rtol, atol)


def evolve_density(
    rho0, p: AtomParams, t_grid, rtol: float = 1e-10, atol: float = 1e-14
) -> np.ndarray:
    """Density-matrix trajectory; returns array of shape (len(t_grid), 4, 4)."""
    rho0 = np.asarray(rho0, dtype=complex).reshape(4, 4)
    if not np.allclose(rho0, rho0.conj().T, atol=1e-12):
        raise ValueError("initial density matrix must be Hermitian")
    tr = float(rho0.trace().real)
    if tr > 1.0 + 1e-12:
        raise ValueError(f"initial trace must be <= 1, got {tr}")
    if np.min(np.linalg.eigvalsh(0.5 * (rho0 + rho0.conj().T))) < -1e-10:
        raise ValueError("initial density matrix must be positive semidefinite")
    out = _run(_rk.KIND_DENSITY, rho0.reshape(16), p, t_grid, rtol, atol)
    return out.reshape(-1, 4, 4)


def check_density(rho: np.ndarray, herm_tol: float = 1e-12, psd_tol: float = 1e-10) -> None:
    """Raise if a density matrix is not Hermitian/PSD with trace in (0, 1]."""
    if np.max(np.abs(rho - rho.conj().T)) > herm_tol:
        raise ValueError("density matrix is not Hermitian within tolerance")
    if np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))) < -psd_tol:
        raise ValueError("density matrix has a significantly negative eigenvalue")
    tr = float(rho.trace().real)
    if not 0.0 < tr <= 1.0 + herm_tol:
        raise ValueError(f"density-matrix trace {tr} outside (0, 1]")


def verify_factorization(
    p: AtomParams,
    t_max: float,
    n_checkpoints: int = 50,
    alpha0=GROUND_4,
    rtol: float = 1e-10,
    atol: float = 1e-14,
) -> float:
    """Max entrywise gap between the density evolution and the outer product
    of the amplitude evolution, over equally spaced checkpoints.

    For a pure initial state and purely diagonal population decay the two
    agree exactly; anything returned here is integration error.
    """
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    alpha0 = np.asarray(alpha0, dtype=complex).reshape(4)
    t_grid = np.linspace(0.0, t_max, n_checkpoints + 1)[1:]
    alphas = evolve_amplitudes(alpha0, p, t_grid, rtol, atol)
    rhos = evolve_density(np.outer(alpha0, alpha0.conj()), p, t_grid, rtol, atol)
    outer = alphas[:, :, None] * alphas[:, None, :].conj()
    return float(np.max(np.abs(rhos - outer)))


def perturbative_p2(
    p: AtomParams, t, rtol: float = 1e-10, atol: float = 1e-14
):
    """Upper-state probability from the weak-drive equations (undepleted ground).

    Integrates the three driven amplitudes from zero and returns |alpha_1|^2
    at the requested times (scalar in, scalar out). Valid for couplings well
    below hbar*gamma; the caller is responsible for staying in that regime.
    """
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    y0 = np.zeros(3, dtype=complex)
    out = _run(_rk.KIND_WEAK_DRIVE, y0, p, t_arr, rtol, atol)
    p2 = np.abs(out[:, 0]) ** 2
    return float(p2[0]) if np.isscalar(t) or np.asarray(t).ndim == 0 else p2


def analytic_p2(p: AtomParams, field4: float, t):
    """Closed-form weak-drive transient for the upper-state probability.

    Evaluates the printed closed form exactly as stated, with |E|^4 supplied
    by the caller. Note: its long-time limit is a factor of 4 below the
    steady state of the weak-drive ODE system (and of local_steady_rate);
    the verification suite measures and reports that constant rather than
    silently rescaling here.

    Raises DegenerateDenominatorError when (gamma2 - gamma1)^2 + 4 delta^2
    vanishes relative to gamma2^2 (removable singularity not taken).
    """
    if field4 < 0:
        raise ValueError("field4 must be >= 0")
    g1, g2, d = p.gamma1, p.gamma2, p.delta
    denom_factor = (g2 - g1) ** 2 + 4.0 * d**2
    if denom_factor < 1e-6 * g2**2:
        raise DegenerateDenominatorError(
            "(gamma2-gamma1)^2 + 4*delta^2 is negligible vs gamma2^2; "
            "use perturbative_p2 instead"
        )
    t = np.asarray(t, dtype=float)
    e1 = np.exp(-0.5 * g2 * t)
    e2 = np.exp(-0.5 * g1 * t)
    osc_s, osc_c = np.sin(d * t), np.cos(d * t)
    bracket_im = -2.0 * d * (1.0 - e1) + osc_s * e2 * g2
    bracket_re = (g1 - g2) - e1 * g1 + osc_c * e2 * g2
    braces = bracket_im**2 + bracket_re**2
    num = 16.0 * p.d1**2 * p.d2**2 * field4 * braces
    den = HBAR**4 * (4.0 * d**2 + g1**2) * g2**2 * denom_factor
    out = num / den
    return float(out) if out.ndim == 0 else out


def local_steady_rate(p: AtomParams, field4: float) -> float:
    """Steady-state two-photon absorption rate (1/s) for a given |E(r)|^4.

    64 d1^2 d2^2 |E|^4 / (hbar^4 (4 delta^2 + gamma1^2) gamma2): the
    steady-state upper-level population of the weak-drive system times its
    decay rate, with both coherent absorption orderings included.
    """
    if field4 < 0:
        raise ValueError("field4 must be >= 0")
    return (
        64.0
        * p.d1**2
        * p.d2**2
        * field4
        / (HBAR**4 * (4.0 * p.delta**2 + p.gamma1**2) * p.gamma2)
    )
