"""Bessel functions J0..J2 and K0..K2, plus the J1'/K1' derivatives.

Only orders 0, 1, 2 are exposed; the guided-mode dispersion relation and the
hybrid-mode field profiles need nothing else. Evaluation is delegated to
scipy.special, which meets the 1e-10 relative-accuracy contract on the
domains used here (verified in the test suite against an independently coded
extended-precision series oracle). K underflows to exactly 0 for very large
arguments rather than raising.

All functions accept scalars or numpy arrays.
"""

from __future__ import annotations

import numpy as np
from scipy import special as _sp

_ORDERS = (0, 1, 2)


def _check_order(n: int) -> None:
    if n not in _ORDERS:
        raise ValueError(f"Bessel order must be one of {_ORDERS}, got {n!r}")


def bessel_j(n: int, x):
    """Bessel function of the first kind J_n(x) for n in {0, 1, 2}, x >= 0."""
    _check_order(n)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("bessel_j requires x >= 0")
    if n == 0:
        out = _sp.j0(x)
    elif n == 1:
        out = _sp.j1(x)
    else:
        out = _sp.jv(2, x)
    return out if out.ndim else float(out)


def bessel_k(n: int, x):
    """Modified Bessel function of the second kind K_n(x) for n in {0, 1, 2}, x > 0.

    Underflows gracefully to 0.0 for large x (K decays like exp(-x)).
    """
    _check_order(n)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("bessel_k requires x > 0 (K diverges at 0)")
    if n == 0:
        out = _sp.k0(x)
    elif n == 1:
        out = _sp.k1(x)
    else:
        out = _sp.kv(2, x)
    return out if out.ndim else float(out)


def bessel_j1_prime(x):
    """Derivative J1'(x) = (J0(x) - J2(x)) / 2.

    Equivalent to J0(x) - J1(x)/x but finite at x = 0 (limit 1/2).
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("bessel_j1_prime requires x >= 0")
    out = 0.5 * (_sp.j0(x) - _sp.jv(2, x))
    return out if out.ndim else float(out)


def bessel_k1_prime(x):
    """Derivative K1'(x) = -(K0(x) + K2(x)) / 2."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("bessel_k1_prime requires x > 0")
    out = -0.5 * (_sp.k0(x) + _sp.kv(2, x))
    return out if out.ndim else float(out)
