"""Adaptive embedded Runge-Kutta core for the atom-photon evolutions.

Dormand-Prince 5(4) with FSAL, jitted with numba so that the strongly
oscillatory lab-frame equations (phase factors at the detuning frequency,
three decades above the decay rates) stay affordable at tight tolerances.
Time is already non-dimensionalized by the caller; right-hand sides receive
a complex parameter vector and return dy/dtau.

The drivers integrate to each requested checkpoint exactly (the step is
clipped at checkpoint boundaries) and report step-size collapse through a
status code instead of raising, so the jitted code stays exception-free.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# Dormand-Prince 5(4) tableau
_C2, _C3, _C4, _C5 = 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0
_A21 = 1.0 / 5.0
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52, _A53, _A54 = 19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0
_A61, _A62, _A63, _A64, _A65 = (
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
)
_B1, _B3, _B4, _B5, _B6 = 35.0 / 384.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71.0 / 57600.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)

STATUS_OK = 0
STATUS_STEP_COLLAPSE = 1


@njit(cache=True)
def rhs_amplitudes(tau, y, pars):
    """Four coupled amplitudes: ladder couplings with counter-rotating pair.

    pars = [a1, a2, d, G1, G2] with a = m/(hbar*scale), d = delta/scale,
    G = gamma/scale; all entries complex128 (d, G real-valued).
    """
    a1, a2 = pars[0], pars[1]
    d, g1, g2 = pars[2].real, pars[3].real, pars[4].real
    c1, c2 = np.conj(a1), np.conj(a2)
    p = np.exp(1j * d * tau)
    pc = np.conj(p)
    out = np.empty(4, np.complex128)
    out[0] = -1j * p * (c2 * y[1] + a2 * y[2]) - 0.5 * g2 * y[0]
    out[1] = -1j * pc * (a2 * y[0] + a1 * y[3]) - 0.5 * g1 * y[1]
    out[2] = -1j * pc * (c2 * y[0] + c1 * y[3]) - 0.5 * g1 * y[2]
    out[3] = -1j * p * (c1 * y[1] + a1 * y[2])
    return out


@njit(cache=True)
def rhs_density(tau, y, pars):
    """Componentwise density-matrix evolution, y = rho.flatten() (16 entries)."""
    a1, a2 = pars[0], pars[1]
    d, g1, g2 = pars[2].real, pars[3].real, pars[4].real
    c1, c2 = np.conj(a1), np.conj(a2)
    p = np.exp(1j * d * tau)
    pc = np.conj(p)
    rho = y.reshape(4, 4)
    vr = np.empty((4, 4), np.complex128)  # V @ rho
    rv = np.empty((4, 4), np.complex128)  # rho @ V
    for j in range(4):
        vr[0, j] = c2 * p * rho[1, j] + a2 * p * rho[2, j]
        vr[1, j] = a2 * pc * rho[0, j] + a1 * pc * rho[3, j]
        vr[2, j] = c2 * pc * rho[0, j] + c1 * pc * rho[3, j]
        vr[3, j] = c1 * p * rho[1, j] + a1 * p * rho[2, j]
    for i in range(4):
        rv[i, 0] = rho[i, 1] * a2 * pc + rho[i, 2] * c2 * pc
        rv[i, 1] = rho[i, 0] * c2 * p + rho[i, 3] * c1 * p
        rv[i, 2] = rho[i, 0] * a2 * p + rho[i, 3] * a1 * p
        rv[i, 3] = rho[i, 1] * a1 * pc + rho[i, 2] * c1 * pc
    out = np.empty((4, 4), np.complex128)
    for i in range(4):
        gi = g2 if i == 0 else (g1 if i < 3 else 0.0)
        for j in range(4):
            gj = g2 if j == 0 else (g1 if j < 3 else 0.0)
            out[i, j] = -1j * (vr[i, j] - rv[i, j]) - 0.5 * (gi + gj) * rho[i, j]
    return out.reshape(16)


@njit(cache=True)
def rhs_weak_drive(tau, y, pars):
    """Three amplitudes of the weak-drive limit (ground amplitude pinned to 1)."""
    a1, a2 = pars[0], pars[1]
    d, g1, g2 = pars[2].real, pars[3].real, pars[4].real
    c1, c2 = np.conj(a1), np.conj(a2)
    p = np.exp(1j * d * tau)
    pc = np.conj(p)
    out = np.empty(3, np.complex128)
    out[0] = -1j * p * (c2 * y[1] + a2 * y[2]) - 0.5 * g2 * y[0]
    out[1] = -1j * pc * a1 - 0.5 * g1 * y[1]
    out[2] = -1j * pc * c1 - 0.5 * g1 * y[2]
    return out


KIND_AMPLITUDES = 0
KIND_DENSITY = 1
KIND_WEAK_DRIVE = 2


@njit(cache=True)
def _rhs(kind, tau, y, pars):
    if kind == KIND_AMPLITUDES:
        return rhs_amplitudes(tau, y, pars)
    elif kind == KIND_DENSITY:
        return rhs_density(tau, y, pars)
    return rhs_weak_drive(tau, y, pars)


@njit(cache=True)
def integrate(kind, y0, tau_eval, pars, rtol, atol):
    """Integrate dy/dtau through the checkpoint grid for the selected system.

    Returns (out, status, tau_fail): out[k] is y at tau_eval[k]; the first
    checkpoint must equal the start time and receives y0 unchanged.
    """
    n = y0.size
    m = tau_eval.size
    out = np.empty((m, n), np.complex128)
    out[0] = y0

    t = tau_eval[0]
    y = y0.copy()
    k1 = _rhs(kind, t, y, pars)
    span = tau_eval[m - 1] - t
    h = span * 1e-6 if span > 0.0 else 1.0

    y2 = np.empty(n, np.complex128)
    for idx in range(1, m):
        target = tau_eval[idx]
        # snap tolerance absorbs the rounding of t after a boundary-clipped
        # step, so a checkpoint never demands a sub-resolution leftover step
        snap = 2e-15 * max(abs(target), 1.0)
        while target - t > snap:
            remaining = target - t
            if h > 0.95 * remaining:
                h_step = remaining  # stretch slightly to land exactly
            else:
                h_step = h
            hmin = 1e-13 * max(abs(t), 1.0)
            if h_step < hmin and h_step < remaining:
                return out, STATUS_STEP_COLLAPSE, t

            for i in range(n):
                y2[i] = y[i] + h_step * _A21 * k1[i]
            k2 = _rhs(kind, t + _C2 * h_step, y2, pars)
            for i in range(n):
                y2[i] = y[i] + h_step * (_A31 * k1[i] + _A32 * k2[i])
            k3 = _rhs(kind, t + _C3 * h_step, y2, pars)
            for i in range(n):
                y2[i] = y[i] + h_step * (_A41 * k1[i] + _A42 * k2[i] + _A43 * k3[i])
            k4 = _rhs(kind, t + _C4 * h_step, y2, pars)
            for i in range(n):
                y2[i] = y[i] + h_step * (
                    _A51 * k1[i] + _A52 * k2[i] + _A53 * k3[i] + _A54 * k4[i]
                )
            k5 = _rhs(kind, t + _C5 * h_step, y2, pars)
            for i in range(n):
                y2[i] = y[i] + h_step * (
                    _A61 * k1[i] + _A62 * k2[i] + _A63 * k3[i] + _A64 * k4[i] + _A65 * k5[i]
                )
            k6 = _rhs(kind, t + h_step, y2, pars)
            for i in range(n):
                y2[i] = y[i] + h_step * (
                    _B1 * k1[i] + _B3 * k3[i] + _B4 * k4[i] + _B5 * k5[i] + _B6 * k6[i]
                )
            k7 = _rhs(kind, t + h_step, y2, pars)

            err = 0.0
            for i in range(n):
                e_i = h_step * (
                    _E1 * k1[i]
                    + _E3 * k3[i]
                    + _E4 * k4[i]
                    + _E5 * k5[i]
                    + _E6 * k6[i]
                    + _E7 * k7[i]
                )
                ay = abs(y[i])
                ay2 = abs(y2[i])
                sc = atol + rtol * (ay if ay > ay2 else ay2)
                q = abs(e_i) / sc
                err += q * q
            err = np.sqrt(err / n)

            if err <= 1.0:
                t = t + h_step
                for i in range(n):
                    y[i] = y2[i]
                k1 = k7
                if err == 0.0:
                    fac = 5.0
                else:
                    fac = 0.9 * err ** (-0.2)
                    if fac > 5.0:
                        fac = 5.0
                    elif fac < 0.2:
                        fac = 0.2
                h = h_step * fac
            else:
                fac = 0.9 * err ** (-0.2)
                if fac < 0.1:
                    fac = 0.1
                h = h_step * fac
        out[idx] = y
    return out, STATUS_OK, t


